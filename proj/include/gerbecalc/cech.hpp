#ifndef GERBECALC_CECH_HPP
#define GERBECALC_CECH_HPP

#include "gerbecalc/coeff.hpp"
#include "gerbecalc/cover.hpp"

#include <map>
#include <optional>

namespace gerbecalc {

struct CechError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inner type of a Čech cochain: a bare group element per index tuple, or a
// simplicial cochain supported in the tuple's intersection.
struct CechInner {
    bool is_form = false;
    int form_degree = 0; // meaningful when is_form
    CoeffGroup coeff = CoeffGroup::integers();

    bool operator==(const CechInner& o) const
    {
        return is_form == o.is_form && coeff == o.coeff &&
               (!is_form || form_degree == o.form_degree);
    }
};

// Čech-degree-p assignment over increasing member tuples with nonempty
// intersection.  Form values are stored as cochains on the base complex whose
// support is required to lie inside the tuple's intersection; restriction to
// deeper intersections is key filtering, extension outward is by zero.
class CechCochain {
public:
    static CechCochain elements(CoverPtr cover, int degree, CoeffGroup coeff);
    static CechCochain forms(CoverPtr cover, int degree, int form_degree, CoeffGroup coeff);

    const CoverPtr& cover() const { return cover_; }
    int degree() const { return degree_; }
    const CechInner& inner() const { return inner_; }

    const std::map<Simplex, Rat>& element_values() const { return elem_; }
    const std::map<Simplex, Cochain>& form_values() const { return form_; }

    Rat element_at(const Simplex& tuple) const;
    Cochain form_at(const Simplex& tuple) const; // zero cochain when absent

    void set_element(const Simplex& tuple, const Rat& v);
    void set_form(const Simplex& tuple, const Cochain& c);
    void add_element(const Simplex& tuple, const Rat& v);
    void add_form(const Simplex& tuple, const Cochain& c);

    // Alternating-convention evaluation on arbitrary (possibly unsorted)
    // index lists: zero on repeated indices, sign of the sorting permutation
    // otherwise.
    Rat element_alternating(const std::vector<int>& idx) const;
    Rat form_entry_alternating(const std::vector<int>& idx, const Simplex& s) const;

    bool is_zero() const { return elem_.empty() && form_.empty(); }
    CechCochain operator+(const CechCochain& o) const;
    CechCochain operator-(const CechCochain& o) const;
    CechCochain operator-() const;
    bool operator==(const CechCochain& o) const;
    CechCochain scaled(const Rat& r) const;

private:
    CechCochain(CoverPtr cover, int degree, CechInner inner);
    void check_tuple(const Simplex& tuple) const;

    CoverPtr cover_;
    int degree_;
    CechInner inner_;
    std::map<Simplex, Rat> elem_;
    std::map<Simplex, Cochain> form_;
};

// (delta c)_{i_0..i_{p+1}} = sum_j (-1)^j c_{..hat j..}, form values restricted.
CechCochain cech_delta(const CechCochain& c);

// Apply the simplicial coboundary to every form value (degree q -> q+1).
CechCochain form_coboundary(const CechCochain& c);

// Element-valued cochains over a cover are exactly simplicial cochains on the
// nerve; these translate back and forth.
Cochain cech_as_nerve_cochain(const CechCochain& c);
CechCochain nerve_cochain_as_cech(const CoverPtr& cover, const Cochain& c);

// Embed an element-valued cochain as constant 0-form functions on the
// intersections (the inclusion of constants used by the total complex).
CechCochain embed_constants(const CechCochain& c);

// --- total complex -----------------------------------------------------------

// A finite sum of form-valued pieces in distinct bidegrees (p, q) with
// p + q = total degree, all over one cover with one coefficient group.
class TotalCochain {
public:
    TotalCochain(CoverPtr cover, int total_degree, CoeffGroup coeff);

    int total_degree() const { return degree_; }
    const CoverPtr& cover() const { return cover_; }
    const CoeffGroup& coeff() const { return coeff_; }
    const std::map<int, CechCochain>& pieces() const { return pieces_; } // key: p

    void set_piece(const CechCochain& piece); // bidegree read off the piece
    CechCochain piece_or_zero(int p) const;
    bool is_zero() const;
    TotalCochain operator-(const TotalCochain& o) const;
    TotalCochain operator+(const TotalCochain& o) const;

private:
    CoverPtr cover_;
    int degree_;
    CoeffGroup coeff_;
    std::map<int, CechCochain> pieces_;
};

// D = delta + (-1)^p d on a (p, q) piece.
TotalCochain total_differential(const TotalCochain& c);

// --- solving -----------------------------------------------------------------

struct CechObstruction {
    std::string description;
    // Integer functional on the equation basis of the failed solve, with
    // modulus semantics as in LinearObstruction; for the Čech mode the basis
    // is the nerve p-simplices in canonical order.
    IntVec functional;
    Int modulus = 0;
    Rat value = 0;
};

struct DeltaSolveResult {
    std::optional<CechCochain> cech_solution;
    std::optional<TotalCochain> total_solution;
    std::optional<CechObstruction> obstruction;
    bool ok() const { return cech_solution.has_value() || total_solution.has_value(); }
};

enum class DeltaMode { Cech, Simplicial, Total };

// Solve differential(y) = x for the selected differential; throws
// CechError("NotClosed...") when x is not closed.  Čech mode accepts element
// or form inner types; simplicial mode solves d per tuple on the
// intersections; total mode solves the rational total complex.
DeltaSolveResult solve_delta(const CechCochain& x, DeltaMode mode);
DeltaSolveResult solve_delta_total(const TotalCochain& x);

// Exact contracting homotopy for closed form-valued cochains of Čech degree
// >= 1: y_T(sigma) = x_{(choice(sigma), T)}(sigma).  Requires delta x = 0.
CechCochain homotopy_solve_delta(const CechCochain& x);

// --- assembly helpers ---------------------------------------------------------

// Glue a (0, q) piece with delta x = 0 into a global cochain on the base;
// throws if the member values disagree on an overlap.
Cochain glue_global(const CechCochain& x);

// Restrict a global cochain to every member, giving a (0, q) piece.
CechCochain spread_global(const CoverPtr& cover, const Cochain& c);

// Weighted contraction sum_gamma psi_gamma cup x_(gamma, T) (Alexander-Whitney
// 0-cup, evaluated at the front vertex).  Requires the front-star support
// condition checked by check_partition; then delta(W x) = x - W(delta x).
CechCochain weighted_average(const std::vector<Cochain>& psi, const CechCochain& x);

// For x form-valued of inner degree 1: solve (x_T) = d(n_T) with n_T an
// integer 0-cochain on each tuple's intersection, normalized to vanish at the
// lowest vertex.  This is the discrete log-branch datum.
struct BranchResult {
    std::optional<CechCochain> branches; // forms (p, 0) over Integers
    std::string failure;                 // nonempty on failure, names the tuple
};
BranchResult solve_integer_branches(const CechCochain& x);

// Coefficient conversions: Z -> Q, Z -> Q/Z, Cyclic(n) -> Q/Z (k -> k/n).
CechCochain convert_coeff(const CechCochain& c, const CoeffGroup& target);

// --- connecting homomorphism and class equality ------------------------------

struct ConnectingResult {
    CechCochain cocycle; // sub-valued, Čech degree p+1
    bool class_is_zero = false;
    std::optional<CechObstruction> nonzero_evidence;
};

// Lift values through the canonical section of the quotient map, apply delta,
// divide into the subgroup.  Input must be a quot-valued element cocycle.
ConnectingResult connecting_hom(const CechCochain& c, const CoeffSequence& seq);

// Both closed, same bidegree and coefficients; true iff a - b is exact.
bool classes_equal(const CechCochain& a, const CechCochain& b);

} // namespace gerbecalc

#endif
