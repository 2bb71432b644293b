#ifndef GERBECALC_COCHAIN_HPP
#define GERBECALC_COCHAIN_HPP

#include "gerbecalc/coeff.hpp"
#include "gerbecalc/linalg.hpp"
#include "gerbecalc/simplicial.hpp"

#include <map>

namespace gerbecalc {

struct CochainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree-p assignment of coefficient-group elements to p-simplices; missing
// keys are zero.  The fixed sign convention, inherited by every module:
// (dc)(v_0...v_{p+1}) = sum_j (-1)^j c(v_0...^v_j...v_{p+1}), so in degree 0
// (dc)(v_0 v_1) = c(v_1) - c(v_0).
class Cochain {
public:
    Cochain(ComplexPtr complex, int degree, CoeffGroup coeff);

    const ComplexPtr& complex() const { return complex_; }
    int degree() const { return degree_; }
    const CoeffGroup& coeff() const { return coeff_; }
    const std::map<Simplex, Rat>& values() const { return values_; }

    Rat value(const Simplex& s) const;
    void set(const Simplex& s, const Rat& v); // reduces; erases zeros
    void add_to(const Simplex& s, const Rat& v);
    bool is_zero() const { return values_.empty(); }

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator-() const;
    bool operator==(const Cochain& o) const;
    Cochain scaled(const Rat& r) const; // integer r for any group, any r for Q

    // Key filtering onto a subcomplex of the same ambient vertex set.
    Cochain restricted_to(ComplexPtr sub) const;
    // Reinterpret on a larger complex, keys unchanged (extension by zero).
    Cochain extended_to(ComplexPtr super) const;

private:
    ComplexPtr complex_;
    int degree_;
    CoeffGroup coeff_;
    std::map<Simplex, Rat> values_;
};

Cochain coboundary_d(const Cochain& c);

// Alexander-Whitney front/back face product; requires ring coefficients
// (throws CochainError("NoRingStructure...") otherwise).
Cochain cup(const Cochain& a, const Cochain& b);

// sum over top simplices of weight * value; degree of c must equal the cycle
// degree (DegreeMismatch otherwise) and the complexes must agree.
Rat pair_cycle(const Cochain& c, const FundamentalCycle& z);

// Coboundary matrix of K in degree p (rows: (p+1)-simplices, cols:
// p-simplices, entries +-1 per the global sign convention).
IntMat coboundary_matrix(const SimplicialComplex& K, int p);

// Solve A y = b in the coefficient group: over Z, Q, Z/n or Q/Z depending on
// the tag (A is always an integer matrix here, the sign pattern of a
// coboundary).
struct CoeffSolveResult {
    std::optional<RatVec> solution;
    std::optional<LinearObstruction> obstruction;
    bool ok() const { return solution.has_value(); }
};
CoeffSolveResult solve_over_coeff(const IntMat& A, const RatVec& b, const CoeffGroup& g);

// Solve d y = x for y of degree x.degree()-1 over the cochain's coefficient
// group; obstruction reported as an integer functional when unsolvable.
struct CochainSolveResult {
    std::optional<Cochain> solution;
    std::optional<LinearObstruction> obstruction;
    bool ok() const { return solution.has_value(); }
};
CochainSolveResult solve_coboundary(const Cochain& x);

// True when pairing c against every integer cycle of its degree lands in the
// integers (c must have Rationals or Integers coefficients).
bool pairs_integrally(const Cochain& c);

// Cochain <-> coordinate vectors in the canonical simplex order.
RatVec cochain_to_vec(const Cochain& c);
Cochain vec_to_cochain(const ComplexPtr& K, int degree, const CoeffGroup& g, const RatVec& v);

} // namespace gerbecalc

#endif
