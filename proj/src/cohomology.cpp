#include "gerbecalc/cohomology.hpp"

#include <algorithm>

namespace gerbecalc {

namespace {

// Basis (as columns) of the lattice spanned by the columns of G.
std::vector<IntVec> lattice_basis(const IntMat& G)
{
    SmithDecomposition s = smith_form(G);
    std::vector<IntVec> basis;
    for (int t = 0; t < s.rank; ++t) {
        IntVec v(G.rows);
        for (int i = 0; i < G.rows; ++i)
            v[i] = s.diag[t] * s.Uinv.a[i][t];
        basis.push_back(std::move(v));
    }
    return basis;
}

CohomologyResult cohomology_rational(const ComplexPtr& K, int p)
{
    CohomologyResult out;
    int dim_p = K->count(p);
    if (dim_p == 0)
        return out;
    IntMat dp = coboundary_matrix(*K, p);
    RatMat dpq(dp.rows, dp.cols);
    for (int i = 0; i < dp.rows; ++i)
        for (int j = 0; j < dp.cols; ++j)
            dpq.a[i][j] = Rat(dp.a[i][j]);
    auto ker = kernel_rational(dpq);

    std::vector<RatVec> image_cols;
    if (p > 0) {
        IntMat dm = coboundary_matrix(*K, p - 1);
        for (int j = 0; j < dm.cols; ++j) {
            RatVec col(dm.rows);
            for (int i = 0; i < dm.rows; ++i)
                col[i] = Rat(dm.a[i][j]);
            image_cols.push_back(std::move(col));
        }
    }
    // Select kernel vectors independent modulo the image: greedily extend the
    // column space of [image] by kernel vectors.
    RatMat acc(dim_p, static_cast<int>(image_cols.size()));
    for (size_t j = 0; j < image_cols.size(); ++j)
        for (int i = 0; i < dim_p; ++i)
            acc.a[i][j] = image_cols[j][i];
    int cur_rank = rank_rational(acc);
    for (const auto& v : ker) {
        RatMat trial(dim_p, acc.cols + 1);
        for (int i = 0; i < dim_p; ++i) {
            for (int j = 0; j < acc.cols; ++j)
                trial.a[i][j] = acc.a[i][j];
            trial.a[i][acc.cols] = v[i];
        }
        if (rank_rational(trial) > cur_rank) {
            ++cur_rank;
            acc = std::move(trial);
            out.free_reps.push_back(vec_to_cochain(K, p, CoeffGroup::rationals(), v));
        }
    }
    out.free_rank = static_cast<int>(out.free_reps.size());
    return out;
}

} // namespace

CohomologyResult cohomology(const ComplexPtr& K, int p, const CoeffGroup& coeff)
{
    if (coeff.tag() == CoeffTag::RationalsModOne)
        throw CoeffError("cohomology over Q/Z is reached through the exact sequence");
    if (p < 0)
        throw CochainError("negative degree");
    if (coeff.tag() == CoeffTag::Rationals)
        return cohomology_rational(K, p);

    CohomologyResult out;
    int dim_p = K->count(p);
    if (dim_p == 0)
        return out;

    bool mod_n = coeff.tag() == CoeffTag::Cyclic;
    Int n = mod_n ? coeff.modulus() : Int(0);

    // Cocycle lattice L = { x : d_p x = 0 (mod n) }.
    IntMat dp = coboundary_matrix(*K, p);
    std::vector<IntVec> Lgens;
    if (dp.rows == 0) {
        for (int j = 0; j < dim_p; ++j) {
            IntVec e(dim_p, 0);
            e[j] = 1;
            Lgens.push_back(std::move(e));
        }
    } else if (!mod_n) {
        Lgens = kernel_integer(dp);
    } else {
        IntMat aug(dp.rows, dp.cols + dp.rows);
        for (int i = 0; i < dp.rows; ++i) {
            for (int j = 0; j < dp.cols; ++j)
                aug.a[i][j] = dp.a[i][j];
            aug.a[i][dp.cols + i] = n;
        }
        for (const auto& v : kernel_integer(aug))
            Lgens.push_back(IntVec(v.begin(), v.begin() + dim_p));
    }
    if (mod_n) // n Z^c is always a sublattice of L
        for (int j = 0; j < dim_p; ++j) {
            IntVec e(dim_p, 0);
            e[j] = n;
            Lgens.push_back(std::move(e));
        }
    IntMat Lmat(dim_p, static_cast<int>(Lgens.size()));
    for (size_t j = 0; j < Lgens.size(); ++j)
        for (int i = 0; i < dim_p; ++i)
            Lmat.a[i][j] = Lgens[j][i];
    auto basis = lattice_basis(Lmat);
    int r = static_cast<int>(basis.size());
    IntMat B(dim_p, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < dim_p; ++i)
            B.a[i][j] = basis[j][i];

    // Coboundary sublattice M, expressed in the basis of L.
    std::vector<IntVec> Mgens;
    if (p > 0) {
        IntMat dm = coboundary_matrix(*K, p - 1);
        for (int j = 0; j < dm.cols; ++j) {
            IntVec col(dm.rows);
            for (int i = 0; i < dm.rows; ++i)
                col[i] = dm.a[i][j];
            Mgens.push_back(std::move(col));
        }
    }
    if (mod_n)
        for (int j = 0; j < dim_p; ++j) {
            IntVec e(dim_p, 0);
            e[j] = n;
            Mgens.push_back(std::move(e));
        }
    IntMat R(r, static_cast<int>(Mgens.size()));
    IntegerSolver bsolver(B);
    for (size_t j = 0; j < Mgens.size(); ++j) {
        auto sol = bsolver.solve(Mgens[j]);
        if (!sol.ok())
            throw CochainError("coboundary outside the cocycle lattice");
        for (int i = 0; i < r; ++i)
            R.a[i][j] = (*sol.solution)[i];
    }

    // L/M from the Smith form of R: change basis by Uinv, then diagonal
    // entries give the orders.
    SmithDecomposition s = smith_form(R);
    auto rep_from_col = [&](int t) {
        IntVec v(dim_p, 0);
        for (int i = 0; i < dim_p; ++i)
            for (int k = 0; k < r; ++k)
                if (s.Uinv.a[k][t] != 0)
                    v[i] += B.a[i][k] * s.Uinv.a[k][t];
        RatVec rv(dim_p);
        for (int i = 0; i < dim_p; ++i)
            rv[i] = Rat(v[i]);
        return vec_to_cochain(K, p, coeff, rv);
    };
    for (int t = 0; t < r; ++t) {
        Int d = (t < static_cast<int>(s.diag.size())) ? s.diag[t] : Int(0);
        if (d == 1)
            continue;
        if (d == 0) {
            out.free_reps.push_back(rep_from_col(t));
            ++out.free_rank;
        } else {
            out.torsion.push_back(d);
            out.torsion_reps.emplace_back(rep_from_col(t), d);
        }
    }
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

} // namespace gerbecalc
