#include "gerbecalc/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace gerbecalc {

IntMat IntMat::identity(int n)
{
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.a[i][i] = 1;
    return m;
}

IntVec mat_vec(const IntMat& m, const IntVec& v)
{
    assert(static_cast<int>(v.size()) == m.cols);
    IntVec out(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.a[i][j] != 0 && v[j] != 0)
                out[i] += m.a[i][j] * v[j];
    return out;
}

RatVec mat_vec(const RatMat& m, const RatVec& v)
{
    assert(static_cast<int>(v.size()) == m.cols);
    RatVec out(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.a[i][j] != 0 && v[j] != 0)
                out[i] += m.a[i][j] * v[j];
    return out;
}

IntMat mat_mul(const IntMat& x, const IntMat& y)
{
    assert(x.cols == y.rows);
    IntMat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k)
            if (x.a[i][k] != 0)
                for (int j = 0; j < y.cols; ++j)
                    if (y.a[k][j] != 0)
                        out.a[i][j] += x.a[i][k] * y.a[k][j];
    return out;
}

namespace {

struct SmithWorker {
    IntMat A;
    IntMat U, Uinv, V, Vinv;

    explicit SmithWorker(const IntMat& m)
        : A(m),
          U(IntMat::identity(m.rows)),
          Uinv(IntMat::identity(m.rows)),
          V(IntMat::identity(m.cols)),
          Vinv(IntMat::identity(m.cols))
    {
    }

    void swap_rows(int i, int j)
    {
        if (i == j)
            return;
        std::swap(A.a[i], A.a[j]);
        std::swap(U.a[i], U.a[j]);
        for (int r = 0; r < Uinv.rows; ++r)
            std::swap(Uinv.a[r][i], Uinv.a[r][j]);
    }

    void swap_cols(int i, int j)
    {
        if (i == j)
            return;
        for (int r = 0; r < A.rows; ++r)
            std::swap(A.a[r][i], A.a[r][j]);
        for (int r = 0; r < V.rows; ++r)
            std::swap(V.a[r][i], V.a[r][j]);
        std::swap(Vinv.a[i], Vinv.a[j]);
    }

    // row i += k * row j
    void add_row(int i, int j, const Int& k)
    {
        if (k == 0)
            return;
        for (int c = 0; c < A.cols; ++c)
            A.a[i][c] += k * A.a[j][c];
        for (int c = 0; c < U.cols; ++c)
            U.a[i][c] += k * U.a[j][c];
        for (int r = 0; r < Uinv.rows; ++r)
            Uinv.a[r][j] -= k * Uinv.a[r][i];
    }

    // col i += k * col j
    void add_col(int i, int j, const Int& k)
    {
        if (k == 0)
            return;
        for (int r = 0; r < A.rows; ++r)
            A.a[r][i] += k * A.a[r][j];
        for (int r = 0; r < V.rows; ++r)
            V.a[r][i] += k * V.a[r][j];
        for (int c = 0; c < Vinv.cols; ++c)
            Vinv.a[j][c] -= k * Vinv.a[i][c];
    }

    void negate_row(int i)
    {
        for (int c = 0; c < A.cols; ++c)
            A.a[i][c] = -A.a[i][c];
        for (int c = 0; c < U.cols; ++c)
            U.a[i][c] = -U.a[i][c];
        for (int r = 0; r < Uinv.rows; ++r)
            Uinv.a[r][i] = -Uinv.a[r][i];
    }

    void run()
    {
        int n = std::min(A.rows, A.cols);
        for (int t = 0; t < n; ++t)
            reduce_block(t);
        // Enforce the divisibility chain d_t | d_{t+1}.
        for (int t = 0; t + 1 < n; ++t) {
            if (A.a[t][t] == 0)
                break;
            for (int s = t + 1; s < n; ++s) {
                if (A.a[s][s] % A.a[t][t] != 0) {
                    add_col(t, s, 1);
                    reduce_block(t);
                    s = t; // restart the scan for this t
                }
            }
        }
        for (int t = 0; t < n; ++t)
            if (A.a[t][t] < 0)
                negate_row(t);
    }

private:
    void reduce_block(int t)
    {
        while (true) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < A.rows; ++i)
                for (int j = t; j < A.cols; ++j)
                    if (A.a[i][j] != 0) {
                        Int v = abs(A.a[i][j]);
                        if (pi < 0 || v < best) {
                            best = v;
                            pi = i;
                            pj = j;
                        }
                    }
            if (pi < 0)
                return; // block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (int i = t + 1; i < A.rows; ++i) {
                Int q = A.a[i][t] / A.a[t][t];
                add_row(i, t, -q);
                if (A.a[i][t] != 0)
                    clean = false;
            }
            for (int j = t + 1; j < A.cols; ++j) {
                Int q = A.a[t][j] / A.a[t][t];
                add_col(j, t, -q);
                if (A.a[t][j] != 0)
                    clean = false;
            }
            if (clean)
                return;
        }
    }
};

} // namespace

SmithDecomposition smith_form(const IntMat& A)
{
    SmithWorker w(A);
    w.run();
    SmithDecomposition out;
    out.U = std::move(w.U);
    out.Uinv = std::move(w.Uinv);
    out.V = std::move(w.V);
    out.Vinv = std::move(w.Vinv);
    int n = std::min(A.rows, A.cols);
    out.diag.resize(n);
    for (int t = 0; t < n; ++t) {
        out.diag[t] = w.A.a[t][t];
        if (out.diag[t] != 0)
            out.rank = t + 1;
    }
    return out;
}

LinearSolveResult<IntVec> IntegerSolver::solve(const IntVec& b) const
{
    LinearSolveResult<IntVec> res;
    IntVec c = mat_vec(s_.U, b);
    IntVec y(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
        Int d = (i < static_cast<int>(s_.diag.size())) ? s_.diag[i] : Int(0);
        if (d != 0) {
            if (c[i] % d != 0) {
                res.obstruction = LinearObstruction{s_.U.a[i], d, Rat(c[i])};
                return res;
            }
            y[i] = c[i] / d;
        } else if (c[i] != 0) {
            res.obstruction = LinearObstruction{s_.U.a[i], 0, Rat(c[i])};
            return res;
        }
    }
    res.solution = mat_vec(s_.V, y);
    return res;
}

LinearSolveResult<IntVec> solve_integer(const IntMat& A, const IntVec& b)
{
    return IntegerSolver(A).solve(b);
}

std::vector<IntVec> kernel_integer(const IntMat& A)
{
    SmithDecomposition s = smith_form(A);
    std::vector<IntVec> basis;
    for (int j = s.rank; j < A.cols; ++j) {
        IntVec v(A.cols);
        for (int i = 0; i < A.cols; ++i)
            v[i] = s.V.a[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolveResult<IntVec> solve_mod(const IntMat& A, const IntVec& b, const Int& n)
{
    assert(n > 0);
    IntMat aug(A.rows, A.cols + A.rows);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j)
            aug.a[i][j] = A.a[i][j];
        aug.a[i][A.cols + i] = n;
    }
    auto r = solve_integer(aug, b);
    LinearSolveResult<IntVec> res;
    if (!r.ok()) {
        res.obstruction = r.obstruction;
        return res;
    }
    IntVec x(A.cols);
    for (int j = 0; j < A.cols; ++j)
        x[j] = mod_int((*r.solution)[j], n);
    res.solution = std::move(x);
    return res;
}

std::vector<IntVec> kernel_mod(const IntMat& A, const Int& n)
{
    IntMat aug(A.rows, A.cols + A.rows);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j)
            aug.a[i][j] = A.a[i][j];
        aug.a[i][A.cols + i] = n;
    }
    std::vector<IntVec> basis;
    for (const auto& v : kernel_integer(aug)) {
        IntVec x(A.cols);
        bool nonzero = false;
        for (int j = 0; j < A.cols; ++j) {
            x[j] = mod_int(v[j], n);
            if (x[j] != 0)
                nonzero = true;
        }
        if (nonzero)
            basis.push_back(std::move(x));
    }
    return basis;
}

LinearSolveResult<RatVec> solve_mod_one(const IntMat& A, const RatVec& b)
{
    LinearSolveResult<RatVec> res;
    SmithDecomposition s = smith_form(A);
    RatVec c(A.rows, 0);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.rows; ++j)
            if (s.U.a[i][j] != 0)
                c[i] += Rat(s.U.a[i][j]) * b[j];
    RatVec y(A.cols, 0);
    for (int i = 0; i < A.rows; ++i) {
        Int d = (i < static_cast<int>(s.diag.size())) ? s.diag[i] : Int(0);
        if (d != 0) {
            y[i] = c[i] / Rat(d); // Q/Z is divisible: always solvable here
        } else if (!is_integer(c[i])) {
            res.obstruction = LinearObstruction{s.U.a[i], 1, mod_one(c[i])};
            return res;
        }
    }
    RatVec x(A.cols, 0);
    for (int i = 0; i < A.cols; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (s.V.a[i][j] != 0 && y[j] != 0)
                x[i] += Rat(s.V.a[i][j]) * y[j];
    for (auto& v : x)
        v = mod_one(v);
    res.solution = std::move(x);
    return res;
}

namespace {

// Reduced row echelon form; returns pivot column per row (-1 past the rank).
std::vector<int> rref(RatMat& m)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.a[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(m.a[row], m.a[p]);
        Rat inv = Rat(1) / m.a[row][col];
        for (int j = col; j < m.cols; ++j)
            m.a[row][j] *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.a[i][col] == 0)
                continue;
            Rat f = m.a[i][col];
            for (int j = col; j < m.cols; ++j)
                m.a[i][j] -= f * m.a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<RatVec> solve_rational(const RatMat& A, const RatVec& b)
{
    RatMat aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j)
            aug.a[i][j] = A.a[i][j];
        aug.a[i][A.cols] = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols)
        return std::nullopt; // inconsistent
    RatVec x(A.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.a[r][A.cols];
    return x;
}

std::vector<RatVec> kernel_rational(const RatMat& A)
{
    RatMat m = A;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (int j = 0; j < A.cols; ++j) {
        if (is_pivot[j])
            continue;
        RatVec v(A.cols, 0);
        v[j] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.a[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatVec> left_kernel_rational(const RatMat& A)
{
    RatMat t(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            t.a[j][i] = A.a[i][j];
    return kernel_rational(t);
}

int rank_rational(const RatMat& A)
{
    RatMat m = A;
    return static_cast<int>(rref(m).size());
}

MixedSolveResult solve_mixed(const RatMat& A, const RatMat& B, const RatVec& b)
{
    assert(A.rows == B.rows && static_cast<int>(b.size()) == A.rows);
    MixedSolveResult res;

    auto lk = left_kernel_rational(A);
    int l = static_cast<int>(lk.size());

    // Project the system onto coker(A): (L B) k = L b must be solved in
    // integers after clearing denominators row by row.
    IntMat M(l, B.cols);
    IntVec c(l, 0);
    std::vector<RatVec> scaled_rows(l);
    for (int i = 0; i < l; ++i) {
        RatVec row(B.cols + 1, 0);
        for (int j = 0; j < B.cols; ++j)
            for (int r = 0; r < B.rows; ++r)
                if (lk[i][r] != 0 && B.a[r][j] != 0)
                    row[j] += lk[i][r] * B.a[r][j];
        for (int r = 0; r < B.rows; ++r)
            if (lk[i][r] != 0 && b[r] != 0)
                row[B.cols] += lk[i][r] * b[r];
        // Clear denominators of the functional and of the projected row.
        Int scale = 1;
        for (int r = 0; r < B.rows; ++r)
            scale = lcm(scale, rat_den(lk[i][r]));
        for (const auto& v : row)
            scale = lcm(scale, rat_den(v));
        scaled_rows[i].resize(B.rows);
        for (int r = 0; r < B.rows; ++r)
            scaled_rows[i][r] = lk[i][r] * Rat(scale);
        for (int j = 0; j < B.cols; ++j) {
            Rat v = row[j] * Rat(scale);
            assert(is_integer(v));
            M.a[i][j] = rat_num(v);
        }
        Rat v = row[B.cols] * Rat(scale);
        assert(is_integer(v));
        c[i] = rat_num(v);
    }

    auto kr = solve_integer(M, c);
    if (!kr.ok()) {
        // Pull the obstruction back through L: u' = sum_i u_i * scaled L_i.
        const auto& ob = *kr.obstruction;
        RatVec w(B.rows, 0);
        for (int i = 0; i < l; ++i)
            if (ob.functional[i] != 0)
                for (int r = 0; r < B.rows; ++r)
                    w[r] += Rat(ob.functional[i]) * scaled_rows[i][r];
        Int den = 1;
        for (const auto& v : w)
            den = lcm(den, rat_den(v));
        LinearObstruction out;
        out.functional.resize(B.rows);
        for (int r = 0; r < B.rows; ++r)
            out.functional[r] = rat_num(w[r] * Rat(den));
        out.modulus = ob.modulus * den;
        Rat val = 0;
        for (int r = 0; r < B.rows; ++r)
            if (out.functional[r] != 0)
                val += Rat(out.functional[r]) * b[r];
        out.value = val;
        res.obstruction = std::move(out);
        return res;
    }

    const IntVec& k = *kr.solution;
    RatVec rhs(b);
    for (int r = 0; r < B.rows; ++r)
        for (int j = 0; j < B.cols; ++j)
            if (B.a[r][j] != 0 && k[j] != 0)
                rhs[r] -= B.a[r][j] * Rat(k[j]);
    auto x = solve_rational(A, rhs);
    assert(x.has_value()); // rhs is orthogonal to the left kernel by design
    res.solution = std::make_pair(std::move(*x), k);
    return res;
}

} // namespace gerbecalc
