#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerbecalc/cech.hpp"
#include "gerbecalc/cohomology.hpp"
#include "gerbecalc/words.hpp"

#include <random>

using namespace gerbecalc;

namespace {

// random words with small-denominator times so that ties actually occur
EGWord random_eg(const GroupPtr& G, std::mt19937_64& rng, int max_len = 4)
{
    std::uniform_int_distribution<int> den(2, 6), letter(0, G->order() - 1);
    int len = static_cast<int>(rng() % (max_len + 1));
    std::vector<Rat> times;
    for (int i = 0; i < len; ++i) {
        int d = den(rng);
        times.push_back(Rat(1 + static_cast<int>(rng() % d)) / Rat(d + 1));
    }
    std::sort(times.begin(), times.end());
    std::vector<int> letters(len);
    for (auto& l : letters)
        l = letter(rng);
    return EGWord::normalized(G, times, letter(rng), letters);
}

BGWord random_bg(const GroupPtr& G, std::mt19937_64& rng, int max_len = 4)
{
    auto w = random_eg(G, rng, max_len);
    return project_p(w);
}

} // namespace

TEST_CASE("normalization rules from the relation list")
{
    auto z4 = FiniteGroup::cyclic(4);
    // |0, t, h0[h1|h2]| -> |t, h0h1[h2]|
    auto w = EGWord::normalized(z4, {Rat(0), Rat(1) / 2}, 1, {2, 3});
    CHECK(w.base() == 3); // 1+2
    CHECK(w.letters() == std::vector<int>{3});
    CHECK(w.times() == std::vector<Rat>{Rat(1) / 2});

    // |1/2, 1/2, h0[h1|h2]| -> |1/2, h0[h1h2]|
    auto w2 = EGWord::normalized(z4, {Rat(1) / 2, Rat(1) / 2}, 1, {2, 3});
    CHECK(w2.letters() == std::vector<int>{1}); // 2+3 mod 4
    CHECK(w2.times() == std::vector<Rat>{Rat(1) / 2});

    // |1/3, h0[e]| -> |h0[]|
    auto w3 = EGWord::normalized(z4, {Rat(1) / 3}, 2, {0});
    CHECK(w3.letters().empty());
    CHECK(w3.base() == 2);

    // the derived rule: a time 1 drops its letter
    auto w4 = EGWord::normalized(z4, {Rat(1)}, 2, {3});
    CHECK(w4.letters().empty());
    CHECK(w4.base() == 2);

    CHECK_THROWS_WITH_AS(EGWord::normalized(z4, {Rat(3) / 2}, 0, {1}),
                         doctest::Contains("MalformedWord"), WordError);
}

TEST_CASE("normalization is idempotent")
{
    auto s3 = FiniteGroup::symmetric(3);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        auto w = random_eg(s3, rng);
        auto again = EGWord::normalized(s3, w.times(), w.base(), w.letters());
        CHECK(w == again);
    }
}

TEST_CASE("step conversion is a bijection on normal forms")
{
    auto s3 = FiniteGroup::symmetric(3);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        auto w = random_eg(s3, rng);
        CHECK(from_step(to_step(w)) == w);
    }
}

TEST_CASE("eg_mul agrees with the step-function oracle")
{
    std::mt19937_64 rng(29);
    for (auto G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(6), FiniteGroup::symmetric(3)}) {
        for (int i = 0; i < 300; ++i) {
            auto a = random_eg(G, rng);
            auto b = random_eg(G, rng);
            auto prod = eg_mul(a, b);
            auto oracle = from_step(step_multiply(to_step(a), to_step(b)));
            CHECK(prod == oracle);
        }
    }
}

TEST_CASE("eg group axioms")
{
    std::mt19937_64 rng(31);
    auto s3 = FiniteGroup::symmetric(3);
    auto e = EGWord::identity(s3);
    for (int i = 0; i < 100; ++i) {
        auto a = random_eg(s3, rng);
        auto b = random_eg(s3, rng);
        auto c = random_eg(s3, rng);
        CHECK(eg_mul(e, a) == a);
        CHECK(eg_mul(a, e) == a);
        CHECK(eg_mul(eg_mul(a, b), c) == eg_mul(a, eg_mul(b, c)));
        CHECK(eg_mul(a, eg_inv(a)) == e);
        CHECK(eg_mul(eg_inv(a), a) == e);
    }
}

TEST_CASE("abelian product takes the sorted-merge form")
{
    auto z3 = FiniteGroup::cyclic(3);
    // |1/3, a[b]| * |2/3, c[d]| = |1/3, 2/3, a+c[b|d]|
    int a = 1, b = 2, c = 2, d = 1;
    auto w1 = EGWord::normalized(z3, {Rat(1) / 3}, a, {b});
    auto w2 = EGWord::normalized(z3, {Rat(2) / 3}, c, {d});
    auto prod = eg_mul(w1, w2);
    CHECK(prod.base() == (a + c) % 3);
    CHECK(prod.times() == std::vector<Rat>{Rat(1) / 3, Rat(2) / 3});
    CHECK(prod.letters() == std::vector<int>{b, d});

    // abelian inverse negates base and letters
    auto inv = eg_inv(w1);
    CHECK(inv.base() == 2); // -1 mod 3
    CHECK(inv.letters() == std::vector<int>{1});
    CHECK(eg_mul(w1, inv) == EGWord::identity(z3));
}

TEST_CASE("bg_mul merges and normalizes")
{
    auto z2 = FiniteGroup::cyclic(2);
    auto w = BGWord::normalized(z2, {Rat(1) / 2}, {1});
    auto prod = bg_mul(w, w); // times merge, 1+1=0 letter deleted
    CHECK(prod.is_point());

    auto pt = BGWord::point(z2);
    CHECK(bg_mul(pt, w) == w);

    auto z6 = FiniteGroup::cyclic(6);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        auto a = random_bg(z6, rng);
        auto b = random_bg(z6, rng);
        auto c = random_bg(z6, rng);
        CHECK(bg_mul(bg_mul(a, b), c) == bg_mul(a, bg_mul(b, c)));
        CHECK(bg_mul(a, b) == bg_mul(b, a));
        CHECK(bg_mul(a, bg_inv(a)).is_point());
    }

    auto s3 = FiniteGroup::symmetric(3);
    auto bad = BGWord::normalized(s3, {Rat(1) / 2}, {1});
    CHECK_THROWS_WITH_AS(bg_mul(bad, bad), doctest::Contains("RequiresAbelian"), WordError);
}

TEST_CASE("projection and section")
{
    auto z2 = FiniteGroup::cyclic(2);
    auto w = EGWord::normalized(z2, {Rat(1) / 2}, 1, {1});
    auto p = project_p(w);
    CHECK(p.times() == std::vector<Rat>{Rat(1) / 2});
    CHECK(p.letters() == std::vector<int>{1});
    CHECK(project_p(EGWord::identity(z2)).is_point());

    // s(|1/2,[1]|) = |1/2, 0[1]| and p(s(b)) = b
    auto s = section_s(p);
    CHECK(s.base() == 0);
    CHECK(s.letters() == std::vector<int>{1});
    CHECK(project_p(s) == p);

    CHECK(section_s(BGWord::point(z2)) == EGWord::identity(z2));

    std::mt19937_64 rng(43);
    for (auto G : {FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::cyclic(6)}) {
        for (int i = 0; i < 100; ++i) {
            auto a = random_eg(G, rng);
            auto b = random_eg(G, rng);
            CHECK(project_p(eg_mul(a, b)) == bg_mul(project_p(a), project_p(b)));
            auto ba = random_bg(G, rng);
            auto bb = random_bg(G, rng);
            CHECK(section_s(bg_mul(ba, bb)) == eg_mul(section_s(ba), section_s(bb)));
            CHECK(project_p(section_s(ba)) == ba);
        }
    }
}

TEST_CASE("classifying construction on the sphere cover")
{
    auto star = vertex_star_cover(boundary_simplex(3));
    auto nerve = star.cover->nerve();
    auto z2 = FiniteGroup::cyclic(2);

    auto h2 = cohomology(nerve, 2, CoeffGroup::cyclic(2));
    REQUIRE(h2.torsion.size() == 1); // H^2(S^2; Z_2) = Z_2
    std::map<Simplex, int> g;
    for (const auto& [t, v] : h2.torsion_reps[0].first.values())
        g[t] = static_cast<int>(rat_num(v));

    std::mt19937_64 rng(47);
    std::vector<WeightedSample> samples;
    for (int i = 0; i < 8; ++i) {
        // supports are nerve 2-simplices (all triples meet on this cover)
        const auto& tris = nerve->simplices(2);
        Simplex sup = tris[rng() % tris.size()];
        // random positive rationals summing to one
        int a = 1 + static_cast<int>(rng() % 5);
        int b = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 5);
        Rat s = Rat(a + b + c);
        samples.push_back({sup, {Rat(a) / s, Rat(b) / s, Rat(c) / s}});
    }
    auto res = classify_cocycle(nerve, z2, g, samples);
    CHECK(res.all_ok);
    for (const auto& sr : res.samples) {
        CHECK(sr.cocycle_ok);
        CHECK(sr.lift_ok);
    }

    // the zero cocycle gives point words everywhere
    auto res0 = classify_cocycle(nerve, z2, {}, samples);
    CHECK(res0.all_ok);
    for (const auto& sr : res0.samples)
        for (const auto& [key, pd] : sr.pairs)
            CHECK(pd.word.is_point());

    // shifting by a coboundary preserves the conditions
    auto shift = CechCochain::elements(star.cover, 1, CoeffGroup::cyclic(2));
    std::mt19937_64 rng2(53);
    for (const auto& t : nerve->simplices(1))
        shift.set_element(t, Rat(static_cast<int>(rng2() % 2)));
    auto dshift = cech_delta(shift);
    std::map<Simplex, int> g2 = g;
    for (const auto& t : nerve->simplices(2)) {
        Rat v = Rat(g2.count(t) ? g2[t] : 0) + dshift.element_at(t);
        g2[t] = static_cast<int>(mod_int(rat_num(v), 2));
        if (g2[t] == 0)
            g2.erase(t);
    }
    CHECK(classify_cocycle(nerve, z2, g2, samples).all_ok);

    // a non-cocycle is rejected (needs a nerve with 3-simplices)
    {
        auto star4 = vertex_star_cover(boundary_simplex(4));
        auto nerve4 = star4.cover->nerve();
        std::map<Simplex, int> broken;
        broken[nerve4->simplices(2)[0]] = 1;
        CHECK_THROWS_WITH_AS(classify_cocycle(nerve4, z2, broken, {}),
                             doctest::Contains("NotClosed"), WordError);
    }

    // support that is not a nerve simplex
    std::vector<WeightedSample> bad = {{{0, 1, 2, 3}, {Rat(1) / 4, Rat(1) / 4, Rat(1) / 4, Rat(1) / 4}}};
    CHECK_THROWS_WITH_AS(classify_cocycle(nerve, z2, g, bad),
                         doctest::Contains("BadSupport"), WordError);
}
