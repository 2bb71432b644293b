#ifndef GERBECALC_SIMPLICIAL_HPP
#define GERBECALC_SIMPLICIAL_HPP

#include "gerbecalc/rational.hpp"

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gerbecalc {

// A simplex is a strictly increasing sequence of vertex labels.
using Simplex = std::vector<int>;

struct SimplicialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Simplex face_of(const Simplex& s, int j); // drop the j-th vertex

// Finite simplicial complex with totally ordered integer vertex labels.
// Downward closed by construction; immutable after building.
class SimplicialComplex {
public:
    // Downward closure of the facets.  Every vertex mentioned must be in
    // `vertices`; `vertices` may contain isolated vertices not in any facet.
    SimplicialComplex(std::vector<int> vertices, const std::vector<Simplex>& facets);

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Simplex>& simplices(int p) const;
    int count(int p) const { return static_cast<int>(simplices(p).size()); }
    int total_count() const;

    bool contains(const Simplex& s) const;
    // Position of s in simplices(dim s); -1 if absent.
    int index_of(const Simplex& s) const;

    bool is_subcomplex_of(const SimplicialComplex& other) const;

    // Connectivity of the 1-skeleton (vertex-path connectivity).
    bool connected() const;

private:
    std::vector<int> vertices_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::map<Simplex, int> index_;
    static const std::vector<Simplex> empty_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Checked facet-list constructor: rejects duplicate vertices inside a facet
// (MalformedFacet) and facet vertices missing from the declared vertex set.
ComplexPtr build_complex(std::vector<int> vertices, const std::vector<std::vector<int>>& facets);

// The barycentric subdivision.  Sd vertices are 0..N-1 indexing the simplices
// of the original complex ordered by (dimension, lex); Sd simplices are the
// chains of the face poset.  With this ordering the first vertex of any Sd
// simplex is its lowest-dimensional member.
struct Subdivision {
    ComplexPtr complex;
    std::vector<Simplex> vertex_simplex;  // Sd vertex -> original simplex
    std::map<Simplex, int> simplex_vertex;
};
Subdivision barycentric_subdivision(const SimplicialComplex& K);

// Integer weights on top-dimensional simplices whose boundary vanishes.
class FundamentalCycle {
public:
    FundamentalCycle(ComplexPtr complex, int degree, std::map<Simplex, Int> weights);

    const ComplexPtr& complex() const { return complex_; }
    int degree() const { return degree_; }
    const std::map<Simplex, Int>& weights() const { return weights_; }

    // Throws SimplicialError if the alternating-sum boundary does not vanish.
    void validate() const;

private:
    ComplexPtr complex_;
    int degree_;
    std::map<Simplex, Int> weights_;
};

// Push a cycle through barycentric subdivision: each top flag picks up the
// sign of the permutation realizing it inside its top simplex.
FundamentalCycle subdivide_cycle(const FundamentalCycle& z, const Subdivision& sd);

// --- stock complexes -------------------------------------------------------

ComplexPtr single_point();
ComplexPtr full_simplex(int n);     // Delta^n on vertices 0..n
ComplexPtr boundary_simplex(int n); // boundary of Delta^n (a sphere S^{n-1})
ComplexPtr hexagon_circle();        // vertices 0..5, cyclic edges
ComplexPtr projective_plane_6();    // minimal 6-vertex RP^2
// RP^3 as the antipodal quotient of the subdivided boundary of the
// 4-dimensional cross-polytope (40 vertices, 192 facets).
ComplexPtr projective_space_3();

// Alternating orientation cycle of boundary_simplex(n).
FundamentalCycle sphere_orientation_cycle(const ComplexPtr& boundary, int n);
// Top cycle found by integer kernel computation (content-normalized); throws
// if the top homology is not rank one.
FundamentalCycle top_cycle_by_kernel(const ComplexPtr& K);

} // namespace gerbecalc

#endif
