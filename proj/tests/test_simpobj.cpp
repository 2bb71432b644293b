#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerbecalc/simpobj.hpp"

using namespace gerbecalc;

TEST_CASE("nerve sizes and displayed formulas")
{
    auto z2 = FiniteGroup::cyclic(2);
    auto ng = nerve_of_group(z2, 3);
    CHECK(ng.size(2) == 4); // |G|^2

    // Z_3 additive: d_1(1,2) = (1+2) = (0)
    auto z3 = FiniteGroup::cyclic(3);
    auto n3 = nerve_of_group(z3, 2);
    // tuple (1,2) has index 1 + 2*3 = 7 little-endian; d_1 merges letters
    CHECK(n3.label(2, 7) == "(1,2)");
    CHECK(n3.face(2, 1, 7) == 0);
    CHECK(n3.label(1, 0) == "(0)");

    // s_0(g) = (1,g) at level 1
    for (int g = 0; g < 3; ++g) {
        int up = n3.degeneracy(1, 0, g);
        CHECK(n3.label(2, up) == "(0," + std::to_string(g) + ")");
    }
}

TEST_CASE("simplicial identities hold for group nerves")
{
    for (auto G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4)}) {
        auto rep = verify_simplicial_identities(nerve_of_group(G, 4));
        CHECK(rep.pass);
    }
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(verify_simplicial_identities(nerve_of_group(s3, 3)).pass);
    CHECK(verify_simplicial_identities(nerve_bar_and_projection(s3, 3).bar).pass);
}

TEST_CASE("swapped faces are detected with witnesses")
{
    auto z2 = FiniteGroup::cyclic(2);
    auto ng = nerve_of_group(z2, 3);
    ng.swap_faces(2, 0, 1);
    auto rep = verify_simplicial_identities(ng);
    CHECK(!rep.pass);
    REQUIRE(!rep.violations.empty());
    bool has_dd = false;
    for (const auto& v : rep.violations) {
        CHECK(!v.witness.empty());
        if (v.identity.find("d_") == 0)
            has_dd = true;
    }
    CHECK(has_dd);
}

TEST_CASE("level-0-only truncation passes vacuously")
{
    // A single level with no maps at all: nothing to check.
    TruncatedSimplicialObject X({3}, {{}}, {{}}, {{"a", "b", "c"}});
    CHECK(verify_simplicial_identities(X).pass);
}

TEST_CASE("bar projection formula and commutation")
{
    auto z2 = FiniteGroup::cyclic(2);
    auto b = nerve_bar_and_projection(z2, 3);
    // p(1,1) = (1^-1 * 1) = (0)
    int x = -1;
    for (int i = 0; i < b.bar.size(1); ++i)
        if (b.bar.label(1, i) == "(1,1)")
            x = i;
    REQUIRE(x >= 0);
    CHECK(b.nerve.label(1, b.projection[1][x]) == "(0)");

    CHECK(projection_commutation_failures(b).empty());

    auto s3 = FiniteGroup::symmetric(3);
    CHECK(projection_commutation_failures(nerve_bar_and_projection(s3, 3)).empty());

    // a corrupted projection is caught
    auto bad = nerve_bar_and_projection(z2, 2);
    std::swap(bad.projection[1][0], bad.projection[1][1]);
    CHECK(!projection_commutation_failures(bad).empty());
}

TEST_CASE("groups validate their axioms")
{
    CHECK(FiniteGroup::cyclic(6)->abelian());
    CHECK(!FiniteGroup::symmetric(3)->abelian());
    CHECK(FiniteGroup::symmetric(3)->order() == 6);
    auto z2xz4 = FiniteGroup::direct_product(*FiniteGroup::cyclic(2), *FiniteGroup::cyclic(4));
    CHECK(z2xz4->order() == 8);
    CHECK(z2xz4->abelian());
    CHECK_THROWS_AS(FiniteGroup("bad", {"e", "x"}, {{0, 1}, {1, 1}}), GroupError);
}
