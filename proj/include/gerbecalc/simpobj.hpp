#ifndef GERBECALC_SIMPOBJ_HPP
#define GERBECALC_SIMPOBJ_HPP

#include "gerbecalc/group.hpp"

#include <string>
#include <vector>

namespace gerbecalc {

// A simplicial object truncated at a finite level: finite sets X_0..X_n with
// face and degeneracy maps stored as lookup tables, so identities can be
// checked exhaustively and individual maps can be perturbed in tests.
class TruncatedSimplicialObject {
public:
    // face[p][i] maps X_p -> X_{p-1} for 1 <= p <= n, 0 <= i <= p;
    // degeneracy[p][i] maps X_p -> X_{p+1} for 0 <= p <= n-1, 0 <= i <= p.
    TruncatedSimplicialObject(std::vector<int> level_sizes,
                              std::vector<std::vector<std::vector<int>>> face,
                              std::vector<std::vector<std::vector<int>>> degeneracy,
                              std::vector<std::vector<std::string>> labels);

    int top_level() const { return static_cast<int>(sizes_.size()) - 1; }
    int size(int p) const { return sizes_[p]; }
    int face(int p, int i, int x) const { return face_[p][i][x]; }
    int degeneracy(int p, int i, int x) const { return degeneracy_[p][i][x]; }
    const std::string& label(int p, int x) const { return labels_[p][x]; }

    // Perturbation hooks for tests.
    void swap_faces(int p, int i, int j);
    void override_face(int p, int i, std::vector<int> table);

private:
    std::vector<int> sizes_;
    std::vector<std::vector<std::vector<int>>> face_;
    std::vector<std::vector<std::vector<int>>> degeneracy_;
    std::vector<std::vector<std::string>> labels_;
};

struct IdentityViolation {
    std::string identity; // e.g. "d_0 d_2 = d_1 d_0 at level 3"
    std::string witness;  // label of the first element violating it
};

struct SimplicialIdentityReport {
    bool pass = true;
    std::vector<IdentityViolation> violations;
};

// Exhaustive check of the three simplicial identity families wherever both
// sides are defined within the truncation; first witness per identity.
SimplicialIdentityReport verify_simplicial_identities(const TruncatedSimplicialObject& X);

// NG_p = G^p with d_0 dropping the first letter, d_p the last, inner d_i
// multiplying adjacent letters, s_i inserting the identity after position i.
TruncatedSimplicialObject nerve_of_group(const GroupPtr& G, int n);

// Bar nerve and the levelwise projection (g_0,...,g_p) -> (g_0^{-1}g_1, ...,
// g_{p-1}^{-1}g_p) onto nerve_of_group.
struct BarNerveWithProjection {
    TruncatedSimplicialObject bar;
    TruncatedSimplicialObject nerve;
    std::vector<std::vector<int>> projection; // per level: bar elem -> nerve elem
};
BarNerveWithProjection nerve_bar_and_projection(const GroupPtr& G, int n);

// Check the projection commutes with every face and degeneracy map; returns
// an empty list on success, otherwise human-readable failure descriptions.
std::vector<std::string> projection_commutation_failures(const BarNerveWithProjection& b);

} // namespace gerbecalc

#endif
