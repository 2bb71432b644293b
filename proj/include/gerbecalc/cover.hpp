#ifndef GERBECALC_COVER_HPP
#define GERBECALC_COVER_HPP

#include "gerbecalc/cochain.hpp"
#include "gerbecalc/simplicial.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace gerbecalc {

struct CoverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cover of a base complex by named subcomplexes.  The nerve is the complex
// on member indices whose simplices are the tuples with nonempty
// intersection; intersections are materialized lazily and cached.
class Cover {
public:
    // Throws IncompleteCover when some base simplex lies in no member, and
    // rejects members that are not subcomplexes of the base.
    Cover(ComplexPtr base, std::vector<std::string> names, std::vector<ComplexPtr> members);

    const ComplexPtr& base() const { return base_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::string& member_name(int i) const { return names_[i]; }
    const ComplexPtr& member(int i) const { return members_[i]; }
    int member_by_name(const std::string& n) const; // -1 if absent

    const ComplexPtr& nerve() const { return nerve_; }

    // Sorted list of members containing the simplex.
    const std::vector<int>& membership(const Simplex& s) const;
    // sigma in U_{t_0...t_p}?
    bool simplex_in_tuple(const Simplex& s, const Simplex& tuple) const;
    // The intersection subcomplex of an increasing member tuple.
    ComplexPtr intersection(const Simplex& tuple) const;

    // Member containing the simplex with the lowest index; the fixed choice
    // function behind the contracting homotopies.
    int choice(const Simplex& s) const { return membership(s).front(); }

private:
    ComplexPtr base_;
    std::vector<std::string> names_;
    std::vector<ComplexPtr> members_;
    ComplexPtr nerve_;
    std::map<Simplex, std::vector<int>> membership_;
    mutable std::mutex cache_mutex_;
    mutable std::map<Simplex, ComplexPtr> intersections_;
};

using CoverPtr = std::shared_ptr<const Cover>;

// The spec-level nerve operation: build the cover, hand back its nerve.
ComplexPtr cech_nerve(const ComplexPtr& base, const std::vector<std::string>& names,
                      const std::vector<ComplexPtr>& members);

// Closed vertex stars taken in the barycentric subdivision: member U_v is the
// subcomplex of chains all of whose simplices contain v.  The nerve of this
// cover is isomorphic to the original complex; vertex labels are preserved as
// member names.  Comes with the canonical partition of unity
// psi_v(sigma) = 1/|sigma| for v in sigma.
struct StarCover {
    CoverPtr cover;
    Subdivision subdivision;
    std::vector<Cochain> partition; // one rational 0-cochain on the base per member
};
StarCover vertex_star_cover(const ComplexPtr& K);

// The support condition that makes cup-by-psi extension-by-zero exact: for
// every base simplex sigma and member i, psi_i(front vertex of sigma) != 0
// implies sigma in U_i.  Also checks psi_i supported in U_i and sum = 1 at
// every vertex.  Returns an empty string or a witness description.
std::string check_partition(const Cover& cover, const std::vector<Cochain>& psi);

// Reduced-cohomology goodness of every cached nonempty intersection: each one
// must be connected with vanishing H^p for 0 < p <= max_degree.
struct GoodnessReport {
    bool good = true;
    std::vector<std::string> failures;
};
GoodnessReport cover_goodness(const Cover& cover, int max_degree);

} // namespace gerbecalc

#endif
