#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerbecalc/cech.hpp"
#include "gerbecalc/cohomology.hpp"

#include <random>

using namespace gerbecalc;

namespace {

// arcs U_0={0,1,2}, U_1={2,3,4}, U_2={4,5,0} with their edges
CoverPtr three_arc_cover()
{
    auto base = hexagon_circle();
    auto u0 = build_complex({0, 1, 2}, {{0, 1}, {1, 2}});
    auto u1 = build_complex({2, 3, 4}, {{2, 3}, {3, 4}});
    auto u2 = build_complex({0, 4, 5}, {{4, 5}, {0, 5}});
    return std::make_shared<Cover>(base, std::vector<std::string>{"U0", "U1", "U2"},
                                   std::vector<ComplexPtr>{u0, u1, u2});
}

Rat random_rat(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return Rat(num(rng)) / Rat(den(rng));
}

CechCochain random_form_cochain(const CoverPtr& cover, int p, int q, std::mt19937_64& rng)
{
    auto out = CechCochain::forms(cover, p, q, CoeffGroup::rationals());
    const auto& nerve = *cover->nerve();
    for (const auto& t : nerve.simplices(p)) {
        Cochain f(cover->base(), q, CoeffGroup::rationals());
        for (const auto& s : cover->base()->simplices(q))
            if (cover->simplex_in_tuple(s, t) && rng() % 3 != 0)
                f.set(s, random_rat(rng));
        out.set_form(t, f);
    }
    return out;
}

CechCochain random_element_cochain(const CoverPtr& cover, int p, const CoeffGroup& g,
                                   std::mt19937_64& rng)
{
    auto out = CechCochain::elements(cover, p, g);
    for (const auto& t : cover->nerve()->simplices(p)) {
        Rat v;
        if (g.tag() == CoeffTag::Cyclic || g.tag() == CoeffTag::Integers)
            v = Rat(static_cast<int>(rng() % 9) - 4);
        else
            v = random_rat(rng);
        out.set_element(t, v);
    }
    return out;
}

} // namespace

TEST_CASE("hexagon with three arcs has the triangle boundary as nerve")
{
    auto cover = three_arc_cover();
    const auto& nerve = *cover->nerve();
    CHECK(nerve.count(0) == 3);
    CHECK(nerve.count(1) == 3);
    CHECK(nerve.dim() == 1); // no triple intersection
    // pairwise intersections are single vertices
    CHECK(cover->intersection({0, 1})->total_count() == 1);
    CHECK(cover->intersection({1, 2})->total_count() == 1);
    CHECK(cover->intersection({0, 2})->total_count() == 1);
}

TEST_CASE("one member equal to the base gives a point nerve")
{
    auto base = boundary_simplex(3);
    Cover cover(base, {"all"}, {base});
    CHECK(cover.nerve()->total_count() == 1);
}

TEST_CASE("vertex star cover of a sphere has the sphere as nerve")
{
    auto K = boundary_simplex(3);
    auto star = vertex_star_cover(K);
    const auto& nerve = *star.cover->nerve();
    CHECK(nerve.count(0) == 4);
    CHECK(nerve.count(1) == 6);
    CHECK(nerve.count(2) == 4);
    CHECK(nerve.dim() == 2); // the 4-fold intersection is empty
    CHECK(check_partition(*star.cover, star.partition).empty());
    auto goodness = cover_goodness(*star.cover, 2);
    CHECK(goodness.good);
}

TEST_CASE("incomplete covers are rejected")
{
    auto base = hexagon_circle();
    auto u0 = build_complex({0, 1, 2}, {{0, 1}, {1, 2}});
    CHECK_THROWS_WITH_AS((Cover{base, {"U0"}, {u0}}), doctest::Contains("IncompleteCover"),
                         CoverError);
}

TEST_CASE("refining a member never removes retained nerve patterns")
{
    auto base = hexagon_circle();
    auto u0 = build_complex({0, 1, 2}, {{0, 1}, {1, 2}});
    auto u1 = build_complex({2, 3, 4}, {{2, 3}, {3, 4}});
    auto u2 = build_complex({0, 4, 5}, {{4, 5}, {0, 5}});
    Cover before(base, {"U0", "U1", "U2"}, {u0, u1, u2});
    // split U1 into two pieces whose union is U1
    auto u1a = build_complex({2, 3}, {{2, 3}});
    auto u1b = build_complex({3, 4}, {{3, 4}});
    Cover after(base, {"U0", "U1a", "U1b", "U2"}, {u0, u1a, u1b, u2});
    // patterns among retained members {U0, U2} = indices {0,2} before, {0,3} after
    CHECK(before.nerve()->contains({0, 2}));
    CHECK(after.nerve()->contains({0, 3}));
}

TEST_CASE("cech delta: constants die, two-member difference")
{
    auto base = hexagon_circle();
    auto u0 = build_complex({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
    auto u1 = build_complex({0, 3, 4, 5}, {{3, 4}, {4, 5}, {0, 5}});
    auto cover = std::make_shared<Cover>(base, std::vector<std::string>{"a", "b"},
                                         std::vector<ComplexPtr>{u0, u1});
    auto Q = CoeffGroup::rationals();
    auto h = CechCochain::elements(cover, 0, Q);
    h.set_element({0}, Rat(7));
    h.set_element({1}, Rat(7));
    CHECK(cech_delta(h).is_zero());

    h.set_element({0}, Rat(2)); // a
    h.set_element({1}, Rat(5)); // b
    auto dh = cech_delta(h);
    CHECK(dh.element_at({0, 1}) == Rat(3)); // b - a
}

TEST_CASE("delta squared vanishes on random cochains")
{
    auto star = vertex_star_cover(boundary_simplex(3));
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        auto c = random_form_cochain(star.cover, 0, 1, rng);
        CHECK(cech_delta(cech_delta(c)).is_zero());
        auto e = random_element_cochain(star.cover, 1, CoeffGroup::rationals_mod_one(), rng);
        CHECK(cech_delta(cech_delta(e)).is_zero());
    }
}

TEST_CASE("total differential squares to zero")
{
    auto star = vertex_star_cover(boundary_simplex(3));
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        TotalCochain x(star.cover, 2, CoeffGroup::rationals());
        x.set_piece(random_form_cochain(star.cover, 0, 2, rng));
        x.set_piece(random_form_cochain(star.cover, 1, 1, rng));
        x.set_piece(random_form_cochain(star.cover, 2, 0, rng));
        CHECK(total_differential(total_differential(x)).is_zero());
    }
}

TEST_CASE("pure top-form piece has delta-only differential")
{
    auto star = vertex_star_cover(boundary_simplex(3));
    std::mt19937_64 rng(5);
    auto top = random_form_cochain(star.cover, 0, 2, rng); // q = top simplicial degree
    TotalCochain x(star.cover, 2, CoeffGroup::rationals());
    x.set_piece(top);
    auto dx = total_differential(x);
    // d part vanishes in the top degree, only the (1,2) piece remains
    for (const auto& [p, piece] : dx.pieces())
        CHECK(p == 1);
}

TEST_CASE("solve_delta round trips and certifies obstructions")
{
    auto star = vertex_star_cover(boundary_simplex(3));
    std::mt19937_64 rng(777);

    // exact input: x = delta y0
    auto y0 = random_element_cochain(star.cover, 1, CoeffGroup::integers(), rng);
    auto x = cech_delta(y0);
    auto r = solve_delta(x, DeltaMode::Cech);
    REQUIRE(r.ok());
    CHECK(cech_delta(*r.cech_solution) == x);

    // generator of H^2 of the nerve (a sphere): not exact
    auto h2 = cohomology(star.cover->nerve(), 2, CoeffGroup::integers());
    REQUIRE(h2.free_rank == 1);
    auto gen = nerve_cochain_as_cech(star.cover, h2.free_reps[0]);
    auto rg = solve_delta(gen, DeltaMode::Cech);
    CHECK(!rg.ok());
    REQUIRE(rg.obstruction.has_value());
    // re-verify the certificate: functional annihilates coboundaries but not x
    {
        const auto& ob = *rg.obstruction;
        auto y = random_element_cochain(star.cover, 1, CoeffGroup::integers(), rng);
        auto dy = cech_as_nerve_cochain(cech_delta(y));
        RatVec dyv = cochain_to_vec(dy);
        Rat on_image = 0, on_x = 0;
        RatVec xv = cochain_to_vec(cech_as_nerve_cochain(gen));
        for (size_t i = 0; i < dyv.size(); ++i) {
            on_image += Rat(ob.functional[i]) * dyv[i];
            on_x += Rat(ob.functional[i]) * xv[i];
        }
        if (ob.modulus == 0) {
            CHECK(on_image == 0);
            CHECK(on_x != 0);
        } else {
            CHECK(is_integer(on_image / Rat(ob.modulus)));
            CHECK(!is_integer(on_x / Rat(ob.modulus)));
        }
    }

    // zero input of positive degree
    auto zero = CechCochain::elements(star.cover, 1, CoeffGroup::integers());
    auto rz = solve_delta(zero, DeltaMode::Cech);
    REQUIRE(rz.ok());
    CHECK(rz.cech_solution->is_zero());

    // non-closed input is rejected
    auto open_input = random_element_cochain(star.cover, 1, CoeffGroup::integers(), rng);
    if (!cech_delta(open_input).is_zero())
        CHECK_THROWS_WITH_AS(solve_delta(open_input, DeltaMode::Cech),
                             doctest::Contains("NotClosed"), CechError);
}

TEST_CASE("contracting homotopy solves closed form cochains")
{
    auto star = vertex_star_cover(boundary_simplex(3));
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int q = static_cast<int>(rng() % 3);
        auto y0 = random_form_cochain(star.cover, 0, q, rng);
        auto x = cech_delta(y0);
        auto y = homotopy_solve_delta(x);
        CHECK(cech_delta(y) == x);

        auto y1 = random_form_cochain(star.cover, 1, q, rng);
        auto x2 = cech_delta(y1);
        auto y2 = homotopy_solve_delta(x2);
        CHECK(cech_delta(y2) == x2);
    }
}

TEST_CASE("simplicial-mode solving works per intersection")
{
    auto star = vertex_star_cover(boundary_simplex(3));
    std::mt19937_64 rng(415);
    auto y0 = random_form_cochain(star.cover, 1, 0, rng);
    auto x = form_coboundary(y0);
    auto r = solve_delta(x, DeltaMode::Simplicial);
    REQUIRE(r.ok());
    CHECK(form_coboundary(*r.cech_solution) == x);
}

TEST_CASE("total-mode solving recovers a total coboundary")
{
    auto star = vertex_star_cover(boundary_simplex(3));
    std::mt19937_64 rng(98);
    TotalCochain y(star.cover, 1, CoeffGroup::rationals());
    y.set_piece(random_form_cochain(star.cover, 0, 1, rng));
    y.set_piece(random_form_cochain(star.cover, 1, 0, rng));
    TotalCochain x = total_differential(y);
    auto r = solve_delta_total(x);
    REQUIRE(r.ok());
    TotalCochain check = total_differential(*r.total_solution);
    CHECK((check - x).is_zero());
}

TEST_CASE("connecting homomorphism on the projective plane")
{
    auto star = vertex_star_cover(projective_plane_6());
    auto nerve = star.cover->nerve();
    auto seq = CoeffSequence::exponential();

    // H^1(RP^2; Z_2) generator mapped into Q/Z by k -> k/2
    auto h1 = cohomology(nerve, 1, CoeffGroup::cyclic(2));
    REQUIRE(h1.torsion.size() == 1);
    auto gen = CechCochain::elements(star.cover, 1, CoeffGroup::rationals_mod_one());
    for (const auto& [t, v] : h1.torsion_reps[0].first.values())
        gen.set_element(t, v / Rat(2));
    REQUIRE(cech_delta(gen).is_zero());

    auto res = connecting_hom(gen, seq);
    CHECK(!res.class_is_zero);
    // the image generates H^2(RP^2; Z) = Z_2: it must equal the torsion rep
    auto h2 = cohomology(nerve, 2, CoeffGroup::integers());
    REQUIRE(h2.torsion.size() == 1);
    CHECK(h2.torsion[0] == 2);
    auto h2rep = nerve_cochain_as_cech(star.cover, h2.torsion_reps[0].first);
    CHECK(classes_equal(res.cocycle, h2rep));

    // two lift conventions give cohomologous outputs: shift the lift by an
    // integer cochain pattern, i.e. add a Q/Z coboundary to gen first
    std::mt19937_64 rng(3);
    auto shift = random_element_cochain(star.cover, 0, CoeffGroup::rationals_mod_one(), rng);
    auto gen2 = gen + cech_delta(shift);
    auto res2 = connecting_hom(gen2, seq);
    CHECK(classes_equal(res.cocycle, res2.cocycle));

    // globally liftable cocycle: zero class
    auto liftable = cech_delta(shift);
    auto res3 = connecting_hom(liftable, seq);
    CHECK(res3.class_is_zero);

    // rational coefficients: connecting output of any cocycle is a coboundary
    // (torsion-only image) - exercised through the cyclic sequence instead
    auto cyc = CoeffSequence::cyclic(2, 2); // Z_2 -> Z_4 -> Z_2
    auto genc = CechCochain::elements(star.cover, 1, CoeffGroup::cyclic(2));
    for (const auto& [t, v] : h1.torsion_reps[0].first.values())
        genc.set_element(t, v);
    auto resc = connecting_hom(genc, cyc);
    CHECK(!resc.class_is_zero);
    // Bockstein output lands in Z_2 and matches the mod-2 reduction pattern
    auto h2z2 = cohomology(nerve, 2, CoeffGroup::cyclic(2));
    REQUIRE(h2z2.torsion.size() == 1);
    auto h2z2rep = nerve_cochain_as_cech(star.cover, h2z2.torsion_reps[0].first);
    CHECK(classes_equal(resc.cocycle, h2z2rep));
}

TEST_CASE("classes_equal basics")
{
    auto star = vertex_star_cover(boundary_simplex(3));
    std::mt19937_64 rng(55);
    auto a = cech_delta(random_element_cochain(star.cover, 1, CoeffGroup::integers(), rng));
    auto y = random_element_cochain(star.cover, 1, CoeffGroup::integers(), rng);
    CHECK(classes_equal(a, a + cech_delta(y)));

    auto h2 = cohomology(star.cover->nerve(), 2, CoeffGroup::integers());
    auto gen = nerve_cochain_as_cech(star.cover, h2.free_reps[0]);
    auto zero = CechCochain::elements(star.cover, 2, CoeffGroup::integers());
    CHECK(!classes_equal(gen, zero));
    CHECK(classes_equal(zero, zero));
}
