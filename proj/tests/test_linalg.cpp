#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerbecalc/linalg.hpp"

#include <random>

using namespace gerbecalc;

namespace {

IntMat random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.a[i][j] = d(rng);
    return m;
}

bool is_diagonal(const IntMat& m)
{
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (i != j && m.a[i][j] != 0)
                return false;
    return true;
}

} // namespace

TEST_CASE("smith form reconstructs the matrix and orders divisors")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6);
        int c = 1 + static_cast<int>(rng() % 6);
        IntMat A = random_matrix(rng, r, c, -4, 4);
        auto s = smith_form(A);
        IntMat D = mat_mul(mat_mul(s.U, A), s.V);
        CHECK(is_diagonal(D));
        for (size_t t = 0; t + 1 < s.diag.size(); ++t) {
            if (s.diag[t + 1] != 0) {
                REQUIRE(s.diag[t] != 0);
                CHECK(s.diag[t + 1] % s.diag[t] == 0);
            }
        }
        CHECK(mat_mul(s.U, s.Uinv).a == IntMat::identity(r).a);
        CHECK(mat_mul(s.V, s.Vinv).a == IntMat::identity(c).a);
        for (size_t t = 0; t < s.diag.size(); ++t)
            CHECK(D.a[t][t] == s.diag[t]);
    }
}

TEST_CASE("integer solve round trip and obstruction functional")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 5);
        IntMat A = random_matrix(rng, r, c, -3, 3);
        IntVec x(c);
        for (auto& v : x)
            v = static_cast<int>(rng() % 7) - 3;
        IntVec b = mat_vec(A, x);
        auto res = solve_integer(A, b);
        REQUIRE(res.ok());
        CHECK(mat_vec(A, *res.solution) == b);

        // perturbed right-hand sides: either solvable or certified unsolvable
        IntVec b2 = b;
        b2[rng() % r] += 1;
        auto res2 = solve_integer(A, b2);
        if (!res2.ok()) {
            const auto& ob = *res2.obstruction;
            // functional annihilates every column of A modulo the modulus
            for (int j = 0; j < c; ++j) {
                Int dot = 0;
                for (int i = 0; i < r; ++i)
                    dot += ob.functional[i] * A.a[i][j];
                if (ob.modulus == 0)
                    CHECK(dot == 0);
                else
                    CHECK(dot % ob.modulus == 0);
            }
            Int val = 0;
            for (int i = 0; i < r; ++i)
                val += ob.functional[i] * b2[i];
            if (ob.modulus == 0)
                CHECK(val != 0);
            else
                CHECK(val % ob.modulus != 0);
        } else {
            CHECK(mat_vec(A, *res2.solution) == b2);
        }
    }
}

TEST_CASE("kernel basis spans the kernel")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        IntMat A = random_matrix(rng, 3, 5, -2, 2);
        auto basis = kernel_integer(A);
        for (const auto& v : basis) {
            IntVec image = mat_vec(A, v);
            for (const auto& e : image)
                CHECK(e == 0);
        }
    }
}

TEST_CASE("mod-n solving")
{
    IntMat A(1, 1);
    A.a[0][0] = 2;
    auto r = solve_mod(A, {1}, 4); // 2x = 1 mod 4: unsolvable
    CHECK(!r.ok());
    auto r2 = solve_mod(A, {2}, 4); // 2x = 2 mod 4: x = 1
    REQUIRE(r2.ok());
    CHECK(mod_int((*r2.solution)[0] * 2 - 2, 4) == 0);
}

TEST_CASE("mod-one solving is divisible in the nonzero directions")
{
    IntMat A(2, 1);
    A.a[0][0] = 3;
    A.a[1][0] = 0;
    RatVec b = {Rat(1) / 2, Rat(0)};
    auto r = solve_mod_one(A, b);
    REQUIRE(r.ok());
    Rat v = (*r.solution)[0] * 3 - Rat(1) / 2;
    CHECK(is_integer(v));

    // inconsistent: second row forces 0 = 1/3 mod 1
    RatVec b2 = {Rat(1) / 2, Rat(1) / 3};
    auto r2 = solve_mod_one(A, b2);
    CHECK(!r2.ok());
    CHECK(r2.obstruction->modulus == 1);
}

TEST_CASE("rational solve and kernels")
{
    RatMat A(2, 3);
    A.a[0][0] = 1;
    A.a[0][1] = 2;
    A.a[0][2] = 3;
    A.a[1][0] = 2;
    A.a[1][1] = 4;
    A.a[1][2] = 6;
    auto k = kernel_rational(A);
    CHECK(k.size() == 2);
    for (const auto& v : k) {
        RatVec im = mat_vec(A, v);
        for (const auto& e : im)
            CHECK(e == 0);
    }
    auto lk = left_kernel_rational(A);
    CHECK(lk.size() == 1);
    auto sol = solve_rational(A, {Rat(6), Rat(12)});
    REQUIRE(sol.has_value());
    RatVec im = mat_vec(A, *sol);
    CHECK(im[0] == 6);
    CHECK(im[1] == 12);
    CHECK(!solve_rational(A, {Rat(6), Rat(11)}).has_value());
}

TEST_CASE("mixed rational/integer solve")
{
    // x + k = 1/2 with x rational, k integer: solvable.
    RatMat A(1, 1), B(1, 1);
    A.a[0][0] = 1;
    B.a[0][0] = 1;
    auto r = solve_mixed(A, B, {Rat(1) / 2});
    REQUIRE(r.ok());

    // 0*x + 2k = 1: unsolvable; functional must certify it.
    RatMat A2(1, 1), B2(1, 1);
    A2.a[0][0] = 0;
    B2.a[0][0] = 2;
    auto r2 = solve_mixed(A2, B2, {Rat(1)});
    REQUIRE(!r2.ok());
    const auto& ob = *r2.obstruction;
    CHECK(ob.modulus != 0);

    // x free kills everything: x + 2k = 7/3 solvable.
    auto r3 = solve_mixed(A, B2, {Rat(7) / 3});
    REQUIRE(r3.ok());
    Rat lhs = r3.solution->first[0] + Rat(2) * Rat(r3.solution->second[0]);
    CHECK(lhs == Rat(7) / 3);
}
