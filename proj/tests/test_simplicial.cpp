#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerbecalc/cochain.hpp"
#include "gerbecalc/cohomology.hpp"
#include "gerbecalc/simplicial.hpp"

using namespace gerbecalc;

TEST_CASE("downward closure of a single triangle")
{
    auto K = build_complex({0, 1, 2}, {{0, 1, 2}});
    CHECK(K->count(0) == 3);
    CHECK(K->count(1) == 3);
    CHECK(K->count(2) == 1);
    CHECK(K->total_count() == 7);
    CHECK(K->contains({0, 2}));
}

TEST_CASE("boundary of the 3-simplex has 14 simplices")
{
    auto K = boundary_simplex(3);
    CHECK(K->count(0) == 4);
    CHECK(K->count(1) == 6);
    CHECK(K->count(2) == 4);
    CHECK(K->total_count() == 14);
    CHECK(!K->contains({0, 1, 2, 3}));
}

TEST_CASE("empty facet list keeps declared vertices")
{
    auto K = build_complex({0}, {});
    CHECK(K->total_count() == 1);
    CHECK(K->dim() == 0);
}

TEST_CASE("duplicate vertex in a facet is rejected")
{
    CHECK_THROWS_WITH_AS(build_complex({0, 1}, {{0, 0}}),
                         doctest::Contains("MalformedFacet"), SimplicialError);
}

TEST_CASE("every face of every simplex is present")
{
    for (auto K : {boundary_simplex(4), projective_plane_6(), hexagon_circle()}) {
        for (int p = 1; p <= K->dim(); ++p)
            for (const auto& s : K->simplices(p))
                for (int j = 0; j <= p; ++j)
                    CHECK(K->contains(face_of(s, j)));
    }
}

TEST_CASE("barycentric subdivision of the circle doubles the edges")
{
    auto K = hexagon_circle();
    auto sd = barycentric_subdivision(*K);
    CHECK(sd.complex->count(0) == 12);
    CHECK(sd.complex->count(1) == 12);
    CHECK(sd.complex->connected());
}

TEST_CASE("subdivision preserves the euler characteristic")
{
    for (auto K : {boundary_simplex(3), projective_plane_6()}) {
        auto sd = barycentric_subdivision(*K);
        auto chi = [](const SimplicialComplex& c) {
            int e = 0;
            for (int p = 0; p <= c.dim(); ++p)
                e += (p % 2 == 0 ? 1 : -1) * c.count(p);
            return e;
        };
        CHECK(chi(*K) == chi(*sd.complex));
    }
}

TEST_CASE("orientation cycle of a sphere boundary validates and subdivides")
{
    auto K = boundary_simplex(3);
    auto z = sphere_orientation_cycle(K, 3);
    z.validate();
    auto sd = barycentric_subdivision(*K);
    auto zs = subdivide_cycle(z, sd);
    zs.validate();
    CHECK(zs.weights().size() == 24); // 4 triangles x 3! flags
}

TEST_CASE("projective plane is a closed surface with chi = 1")
{
    auto K = projective_plane_6();
    CHECK(K->count(0) == 6);
    CHECK(K->count(1) == 15);
    CHECK(K->count(2) == 10);
    // each edge in exactly two triangles
    std::map<Simplex, int> inc;
    for (const auto& t : K->simplices(2))
        for (int j = 0; j < 3; ++j)
            inc[face_of(t, j)]++;
    for (const auto& [e, n] : inc)
        CHECK(n == 2);
}

TEST_CASE("cohomology of spheres and projective spaces")
{
    auto Z = CoeffGroup::integers();
    auto Q = CoeffGroup::rationals();

    auto s2 = boundary_simplex(3);
    auto h0 = cohomology(s2, 0, Z);
    auto h1 = cohomology(s2, 1, Z);
    auto h2 = cohomology(s2, 2, Z);
    CHECK(h0.free_rank == 1);
    CHECK(h0.torsion.empty());
    CHECK(h1.free_rank == 0);
    CHECK(h1.torsion.empty());
    CHECK(h2.free_rank == 1);
    CHECK(h2.torsion.empty());
    // representatives are cocycles and pair to +-1 with the orientation
    REQUIRE(h2.free_reps.size() == 1);
    CHECK(coboundary_d(h2.free_reps[0]).is_zero());
    auto z = sphere_orientation_cycle(s2, 3);
    Rat pairing = pair_cycle(h2.free_reps[0], z);
    CHECK((pairing == 1 || pairing == -1));

    auto rp2 = projective_plane_6();
    auto r1 = cohomology(rp2, 1, Z);
    auto r2 = cohomology(rp2, 2, Z);
    CHECK(r1.free_rank == 0);
    CHECK(r1.torsion.empty());
    CHECK(r2.free_rank == 0);
    REQUIRE(r2.torsion.size() == 1);
    CHECK(r2.torsion[0] == 2);
    REQUIRE(r2.torsion_reps.size() == 1);
    CHECK(coboundary_d(r2.torsion_reps[0].first).is_zero());

    auto s4 = boundary_simplex(5);
    auto h4 = cohomology(s4, 4, Z);
    CHECK(h4.free_rank == 1);
    CHECK(h4.torsion.empty());
    auto h3 = cohomology(s4, 3, Z);
    CHECK(h3.free_rank == 0);
    CHECK(h3.torsion.empty());

    // over Q the torsion disappears
    auto r2q = cohomology(rp2, 2, Q);
    CHECK(r2q.free_rank == 0);
    CHECK(r2q.torsion.empty());

    auto pt = single_point();
    CHECK(cohomology(pt, 0, Z).free_rank == 1);
    CHECK(cohomology(pt, 1, Z).free_rank == 0);
}

TEST_CASE("mod 2 cohomology of the projective plane")
{
    auto rp2 = projective_plane_6();
    auto Z2 = CoeffGroup::cyclic(2);
    for (int p = 0; p <= 2; ++p) {
        auto h = cohomology(rp2, p, Z2);
        CHECK(h.free_rank == 0);
        REQUIRE(h.torsion.size() == 1);
        CHECK(h.torsion[0] == 2);
    }
}

TEST_CASE("projective 3-space from the quotient construction")
{
    auto rp3 = projective_space_3();
    CHECK(rp3->count(0) == 40);
    CHECK(rp3->count(3) == 192);
    CHECK(rp3->connected());
    auto Z = CoeffGroup::integers();
    auto h0 = cohomology(rp3, 0, Z);
    auto h1 = cohomology(rp3, 1, Z);
    auto h2 = cohomology(rp3, 2, Z);
    auto h3 = cohomology(rp3, 3, Z);
    CHECK(h0.free_rank == 1);
    CHECK(h1.free_rank == 0);
    CHECK(h1.torsion.empty());
    CHECK(h2.free_rank == 0);
    REQUIRE(h2.torsion.size() == 1);
    CHECK(h2.torsion[0] == 2);
    CHECK(h3.free_rank == 1);
    CHECK(h3.torsion.empty());

    auto Z2 = CoeffGroup::cyclic(2);
    for (int p = 0; p <= 3; ++p) {
        auto h = cohomology(rp3, p, Z2);
        CHECK(h.free_rank == 0);
        REQUIRE(h.torsion.size() == 1);
        CHECK(h.torsion[0] == 2);
    }

    auto z = top_cycle_by_kernel(rp3);
    z.validate();
    CHECK(z.weights().size() == 192);
}

TEST_CASE("euler characteristic matches rational betti numbers")
{
    auto Q = CoeffGroup::rationals();
    for (auto K : {boundary_simplex(3), projective_plane_6(), hexagon_circle()}) {
        int chi_simp = 0, chi_betti = 0;
        for (int p = 0; p <= K->dim(); ++p) {
            int sgn = (p % 2 == 0) ? 1 : -1;
            chi_simp += sgn * K->count(p);
            chi_betti += sgn * cohomology(K, p, Q).free_rank;
        }
        CHECK(chi_simp == chi_betti);
    }
}
