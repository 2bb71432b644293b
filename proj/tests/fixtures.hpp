// Shared constructions for the test suites.
#ifndef GERBECALC_TESTS_FIXTURES_HPP
#define GERBECALC_TESTS_FIXTURES_HPP

#include "gerbecalc/cech.hpp"
#include "gerbecalc/cover.hpp"

#include <random>

namespace gerbecalc::fixtures {

inline Rat random_rat(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return Rat(num(rng)) / Rat(den(rng));
}

inline CechCochain random_form_cochain(const CoverPtr& cover, int p, int q,
                                       std::mt19937_64& rng)
{
    auto out = CechCochain::forms(cover, p, q, CoeffGroup::rationals());
    for (const auto& t : cover->nerve()->simplices(p)) {
        Cochain f(cover->base(), q, CoeffGroup::rationals());
        for (const auto& s : cover->base()->simplices(q))
            if (cover->simplex_in_tuple(s, t) && rng() % 3 != 0)
                f.set(s, random_rat(rng));
        out.set_form(t, f);
    }
    return out;
}

inline CechCochain random_element_cochain(const CoverPtr& cover, int p, const CoeffGroup& g,
                                          std::mt19937_64& rng)
{
    auto out = CechCochain::elements(cover, p, g);
    for (const auto& t : cover->nerve()->simplices(p)) {
        Rat v;
        if (g.tag() == CoeffTag::Cyclic)
            v = Rat(static_cast<int>(rng() % 5));
        else if (g.tag() == CoeffTag::Integers)
            v = Rat(static_cast<int>(rng() % 9) - 4);
        else
            v = random_rat(rng);
        out.set_element(t, v);
    }
    return out;
}

inline CechCochain random_integer_branches(const CoverPtr& cover, int p,
                                           std::mt19937_64& rng)
{
    auto out = CechCochain::forms(cover, p, 0, CoeffGroup::integers());
    for (const auto& t : cover->nerve()->simplices(p)) {
        Cochain f(cover->base(), 0, CoeffGroup::integers());
        for (const auto& s : cover->base()->simplices(0))
            if (cover->simplex_in_tuple(s, t) && rng() % 2 == 0)
                f.set(s, Rat(static_cast<int>(rng() % 5) - 2));
        out.set_form(t, f);
    }
    return out;
}

// Circle cover by three overlapping arcs; admits a front-star partition of
// unity (the spec's single-vertex-overlap arcs do not, because the lowest
// vertex fronts edges in two different members).
struct ArcCover {
    CoverPtr cover;
    std::vector<Cochain> partition;
};

inline ArcCover extended_three_arc_cover()
{
    auto base = hexagon_circle();
    auto u0 = build_complex({0, 1, 2}, {{0, 1}, {1, 2}});
    auto u1 = build_complex({2, 3, 4}, {{2, 3}, {3, 4}});
    auto u2 = build_complex({0, 1, 4, 5}, {{4, 5}, {0, 5}, {0, 1}});
    auto cover = std::make_shared<Cover>(base, std::vector<std::string>{"U0", "U1", "U2"},
                                         std::vector<ComplexPtr>{u0, u1, u2});
    auto Q = CoeffGroup::rationals();
    std::vector<Cochain> psi;
    for (int m = 0; m < 3; ++m)
        psi.emplace_back(base, 0, Q);
    psi[0].set({1}, 1);
    psi[1].set({2}, 1);
    psi[1].set({3}, 1);
    psi[2].set({0}, 1);
    psi[2].set({4}, 1);
    psi[2].set({5}, 1);
    return {cover, std::move(psi)};
}

} // namespace gerbecalc::fixtures

#endif
