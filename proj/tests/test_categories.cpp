#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wreath/category.hpp"

using namespace wreath;

static FiniteGroup z2() { return FiniteGroup::cyclic_product({2}); }
static FiniteGroup z3() { return FiniteGroup::cyclic_product({3}); }

TEST_CASE("product-constrained membership over Z2") {
    auto spec = CategorySpec::gamma_coloured(Family::NC, z2());
    // cup coloured (s,s): block product s*s = e equals the (empty) upper
    // product.
    CHECK(spec.contains(ColouredPartition{cup_partition(), {1, 1}}));
    CHECK_FALSE(spec.contains(ColouredPartition{cup_partition(), {0, 1}}));
    // Identity partition with every diagonal colouring is a member.
    for (int c = 0; c < 2; ++c)
        CHECK(spec.contains(ColouredPartition{identity_partition(), {c, c}}));
    // Crossing base is rejected for NC even when products match.
    CHECK_FALSE(spec.contains(ColouredPartition{cross_partition(),
                                                {0, 0, 0, 0}}));
    CHECK_THROWS_AS(spec.contains(ColouredPartition{cup_partition(), {0, 5}}),
                    std::invalid_argument);
}

TEST_CASE("two-colour mod-s membership") {
    auto s2 = CategorySpec::two_colour_mod_s(2);
    auto sinf = CategorySpec::two_colour_mod_s(CategorySpec::kInfinity);
    // cup (white, white): differences upper 0, lower 2.
    CHECK(s2.contains(ColouredPartition{cup_partition(), {0, 0}}));
    CHECK(s2.contains(ColouredPartition{cup_partition(), {0, 1}}));
    CHECK_FALSE(sinf.contains(ColouredPartition{cup_partition(), {0, 0}}));
    CHECK(sinf.contains(ColouredPartition{cup_partition(), {0, 1}}));
    CHECK_FALSE(s2.contains(ColouredPartition{cross_partition(),
                                              {0, 0, 0, 0}}));
    // mod 1 is vacuous on noncrossing diagrams.
    auto s1 = CategorySpec::two_colour_mod_s(1);
    CHECK(s1.contains(ColouredPartition{singleton_lower(), {0}}));
    CHECK_FALSE(sinf.contains(ColouredPartition{singleton_lower(), {0}}));
}

TEST_CASE("underlying partitions of the two-colour categories") {
    // Forgetting colours: mod-1 members cover exactly NC, while mod-2 and
    // mod-infinity members cover exactly the even-block noncrossing
    // diagrams (a block admits balanced colourings iff its rows have the
    // same parity, i.e. the block size is even).
    auto s1 = CategorySpec::two_colour_mod_s(1);
    auto s2 = CategorySpec::two_colour_mod_s(2);
    auto sinf = CategorySpec::two_colour_mod_s(CategorySpec::kInfinity);
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; k + l <= 5; ++l) {
            std::set<Partition> u1, u2, uinf;
            for (auto& p : s1.enumerate(k, l)) u1.insert(p.base);
            for (auto& p : s2.enumerate(k, l)) u2.insert(p.base);
            for (auto& p : sinf.enumerate(k, l)) uinf.insert(p.base);
            auto nc = enumerate_family(Family::NC, k, l);
            auto ncev = enumerate_family(Family::NCEV, k, l);
            CHECK(u1 == std::set<Partition>(nc.begin(), nc.end()));
            CHECK(u2 == std::set<Partition>(ncev.begin(), ncev.end()));
            CHECK(uinf == std::set<Partition>(ncev.begin(), ncev.end()));
        }
}

TEST_CASE("boundary enumeration") {
    auto nc2z2 = CategorySpec::gamma_coloured(Family::NC2, z2());
    CHECK(nc2z2.enumerate_boundary({}, {1, 1}).size() == 1);
    auto ncz2 = CategorySpec::gamma_coloured(Family::NC, z2());
    CHECK(ncz2.enumerate_boundary({}, {0, 0}).size() == 2);
    auto nc2 = CategorySpec::uncoloured(Family::NC2);
    CHECK(nc2.enumerate_boundary({}, {0, 0, 0}).empty());
    CHECK(nc2.enumerate_boundary({}, std::vector<int>(5, 0)).empty());
}

TEST_CASE("closure of the empty generator set is the pairing category") {
    auto cs = ColourSet::single();
    auto got = closure({}, cs, 4);
    std::set<ColouredPartition> want;
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; k + l <= 4; ++l)
            for (auto& p : enumerate_family(Family::NC2, k, l))
                want.insert(colour_all(p));
    CHECK(got == want);
}

TEST_CASE("closure with a four-block generator contains the cup") {
    auto cs = ColourSet::single();
    auto got = closure({colour_all(one_block(0, 4))}, cs, 4);
    CHECK(got.count(colour_all(cup_partition())) == 1);
    // It contains every even-size one-block diagram with <= 4 points but
    // no odd block (the generated category lives inside the even-block
    // noncrossing family).
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; k + l <= 4; ++l) {
            if (k + l == 0) continue;
            CHECK(got.count(colour_all(one_block(k, l))) ==
                  ((k + l) % 2 == 0 ? 1u : 0u));
        }
}

TEST_CASE("closure with the crossing gives all pairings") {
    auto cs = ColourSet::single();
    auto got = closure({colour_all(cross_partition())}, cs, 4);
    std::set<ColouredPartition> want;
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; k + l <= 4; ++l)
            for (auto& p : enumerate_family(Family::PAIR, k, l))
                want.insert(colour_all(p));
    CHECK(got == want);
    // And the abelianization claim at 6 points for pairings.
    auto got6 = closure({colour_all(cross_partition())}, cs, 6);
    std::set<ColouredPartition> want6;
    for (int k = 0; k <= 6; ++k)
        for (int l = 0; k + l <= 6; ++l)
            for (auto& p : enumerate_family(Family::PAIR, k, l))
                want6.insert(colour_all(p));
    CHECK(got6 == want6);
}

TEST_CASE("generated spec membership") {
    auto cs = ColourSet::single();
    auto spec = CategorySpec::generated({colour_all(cross_partition())}, cs, 4);
    CHECK(spec.contains(colour_all(cross_partition())));
    CHECK(spec.contains(colour_all(cup_partition())));
    CHECK_FALSE(spec.contains(colour_all(one_block(0, 4))));
    CHECK_THROWS_AS(spec.contains(colour_all(one_block(0, 6))),
                    std::length_error);
}

TEST_CASE("abelianize") {
    CHECK(abelianize(CategorySpec::uncoloured(Family::NC)).base_family() ==
          Family::ALL);
    CHECK(abelianize(CategorySpec::uncoloured(Family::ALL)).base_family() ==
          Family::ALL);
    CHECK(abelianize(CategorySpec::uncoloured(Family::NC2)).base_family() ==
          Family::PAIR);
    CHECK(abelianize(CategorySpec::uncoloured(Family::NCEV)).base_family() ==
          Family::EVEN);
    auto g = abelianize(CategorySpec::group_coloured(Family::NC, z3()));
    CHECK(g.base_family() == Family::ALL);
    CHECK(g.kind() == ColouringKind::GroupColoured);
    CHECK_THROWS_AS(
        abelianize(CategorySpec::generated({}, ColourSet::single(), 4)),
        std::invalid_argument);
}

TEST_CASE("block stability") {
    CHECK(is_block_stable(CategorySpec::uncoloured(Family::NC), 6));
    CHECK(is_block_stable(CategorySpec::uncoloured(Family::NC2), 6));
    CHECK(is_block_stable(CategorySpec::uncoloured(Family::NCEV), 6));
    CHECK(is_block_stable(CategorySpec::gamma_coloured(Family::NC, z2()), 5));
    CHECK(is_block_stable(CategorySpec::group_coloured(Family::NC, z2()), 5));
    auto gen = CategorySpec::generated({colour_all(cross_partition())},
                                       ColourSet::single(), 4);
    CHECK(is_block_stable(gen, 4));
}

TEST_CASE("stability of membership under the category operations") {
    std::vector<CategorySpec> specs;
    specs.push_back(CategorySpec::gamma_coloured(Family::NC, z2()));
    specs.push_back(CategorySpec::gamma_coloured(Family::ALL, z3()));
    specs.push_back(CategorySpec::group_coloured(Family::NC, z2()));
    specs.push_back(CategorySpec::two_colour_mod_s(2));
    specs.push_back(CategorySpec::two_colour_mod_s(CategorySpec::kInfinity));
    for (const auto& spec : specs) {
        std::vector<ColouredPartition> members;
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; k + l <= 3; ++l)
                for (auto& p : spec.enumerate(k, l)) members.push_back(p);
        for (const auto& p : members) {
            CHECK(spec.contains(involution(p)));
            if (p.base.k > 0) {
                CHECK(spec.contains(
                    rotate(p, Corner::UpperLeft, spec.colour_set())));
                CHECK(spec.contains(
                    rotate(p, Corner::UpperRight, spec.colour_set())));
            }
            if (p.base.l > 0) {
                CHECK(spec.contains(
                    rotate(p, Corner::LowerLeft, spec.colour_set())));
                CHECK(spec.contains(
                    rotate(p, Corner::LowerRight, spec.colour_set())));
            }
            for (const auto& q : members) {
                CHECK(spec.contains(tensor(p, q)));
                if (composable(p, q))
                    CHECK(spec.contains(compose(p, q).result));
            }
        }
    }
}

TEST_CASE("block recolouring and the product constraint") {
    // Multiplying one block's colours by g changes the two row products
    // by g^{points in that row}; membership survives iff they stay equal.
    auto spec = CategorySpec::gamma_coloured(Family::NC, z3());
    const auto& G = spec.group();
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; k + l <= 4; ++l)
            for (const auto& p : spec.enumerate(k, l))
                for (int id = 0; id < p.base.num_blocks(); ++id)
                    for (int g = 0; g < G.size(); ++g) {
                        ColouredPartition q = p;
                        int up = 0, down = 0;
                        for (int i = 0; i < p.base.points(); ++i)
                            if (p.base.block[(size_t)i] == id) {
                                q.colours[(size_t)i] =
                                    G.mult(g, q.colours[(size_t)i]);
                                (i < p.base.k ? up : down) += 1;
                            }
                        // Z3: g^up = g^down iff up = down mod 3.
                        int gu = G.identity(), gd = G.identity();
                        for (int t = 0; t < up; ++t) gu = G.mult(gu, g);
                        for (int t = 0; t < down; ++t) gd = G.mult(gd, g);
                        CHECK(spec.contains(q) == (gu == gd));
                    }
}
