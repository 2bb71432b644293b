#ifndef GERBECALC_COHOMOLOGY_HPP
#define GERBECALC_COHOMOLOGY_HPP

#include "gerbecalc/cochain.hpp"

namespace gerbecalc {

// H^p(K; coeff) computed from Smith normal forms of the coboundary matrices.
// Representatives are honest cocycles; the torsion list is the invariant
// factors > 1 in divisibility order.  For Cyclic(n) coefficients the whole
// group is finite, so free_rank = 0 and every Z_n summand shows up as an
// invariant factor n.
struct CohomologyResult {
    int free_rank = 0;
    std::vector<Int> torsion;
    std::vector<Cochain> free_reps;
    std::vector<std::pair<Cochain, Int>> torsion_reps;
};

CohomologyResult cohomology(const ComplexPtr& K, int p, const CoeffGroup& coeff);

} // namespace gerbecalc

#endif
