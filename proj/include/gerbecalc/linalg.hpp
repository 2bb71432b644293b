#ifndef GERBECALC_LINALG_HPP
#define GERBECALC_LINALG_HPP

#include "gerbecalc/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gerbecalc {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense matrices.  The complexes in play are desk-scale (a few hundred
// simplices), so dense exact arithmetic is the simplest thing that works.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<IntVec> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(r, IntVec(c, 0)) {}
    static IntMat identity(int n);

    Int& at(int i, int j) { return a[i][j]; }
    const Int& at(int i, int j) const { return a[i][j]; }
};

struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<RatVec> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(r, RatVec(c, 0)) {}

    Rat& at(int i, int j) { return a[i][j]; }
    const Rat& at(int i, int j) const { return a[i][j]; }
};

IntVec mat_vec(const IntMat& m, const IntVec& v);
RatVec mat_vec(const RatMat& m, const RatVec& v);
IntMat mat_mul(const IntMat& x, const IntMat& y);

// U * A * V = D with U, V unimodular and D diagonal, diag[0] | diag[1] | ...
// (nonnegative).  Uinv and Vinv are maintained alongside so callers never
// invert anything.
struct SmithDecomposition {
    IntMat U, Uinv, V, Vinv;
    std::vector<Int> diag; // length min(rows, cols)
    int rank = 0;          // nonzero diagonal entries
};

SmithDecomposition smith_form(const IntMat& A);

// Witness that b is not in the image of a linear map: an integer functional u
// and a modulus m such that u.(col) ≡ 0 (mod m) for every generator `col` of
// the image, while u.b is nonzero mod m (m = 0 means "over Z": u.col = 0 and
// u.b != 0; m = 1 is the mod-one case with rational b: u.b not an integer).
struct LinearObstruction {
    IntVec functional;
    Int modulus = 0;
    Rat value = 0;
};

template <typename Vec>
struct LinearSolveResult {
    std::optional<Vec> solution;
    std::optional<LinearObstruction> obstruction;
    bool ok() const { return solution.has_value(); }
};

// A x = b over the integers.
LinearSolveResult<IntVec> solve_integer(const IntMat& A, const IntVec& b);

// Reusable integer solver: one Smith decomposition, many right-hand sides.
class IntegerSolver {
public:
    explicit IntegerSolver(const IntMat& A) : rows_(A.rows), cols_(A.cols), s_(smith_form(A)) {}
    LinearSolveResult<IntVec> solve(const IntVec& b) const;
    const SmithDecomposition& smith() const { return s_; }

private:
    int rows_, cols_;
    SmithDecomposition s_;
};

// A x ≡ b (mod n), x integer, entries returned in [0, n).
LinearSolveResult<IntVec> solve_mod(const IntMat& A, const IntVec& b, const Int& n);

// A x ≡ b (mod 1) with A integer, b rational, x rational.
LinearSolveResult<RatVec> solve_mod_one(const IntMat& A, const RatVec& b);

// Basis of { x integer : A x = 0 }.
std::vector<IntVec> kernel_integer(const IntMat& A);

// Basis of { x in [0,n)^c : A x ≡ 0 (mod n) } generating all solutions mod n.
std::vector<IntVec> kernel_mod(const IntMat& A, const Int& n);

// Exact rational elimination.
std::optional<RatVec> solve_rational(const RatMat& A, const RatVec& b);
std::vector<RatVec> kernel_rational(const RatMat& A);
std::vector<RatVec> left_kernel_rational(const RatMat& A);
int rank_rational(const RatMat& A);

// A x + B k = b with x rational and k integer.  Returns (x, k); on failure an
// integer functional u (after clearing denominators) with u.A = 0,
// u.B ≡ 0 (mod m), u.b nonzero mod m.
struct MixedSolveResult {
    std::optional<std::pair<RatVec, IntVec>> solution;
    std::optional<LinearObstruction> obstruction;
    bool ok() const { return solution.has_value(); }
};
MixedSolveResult solve_mixed(const RatMat& A, const RatMat& B, const RatVec& b);

} // namespace gerbecalc

#endif
