#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "wreath/action.hpp"
#include "wreath/freeprob.hpp"
#include "wreath/operators.hpp"

using namespace wreath;

namespace {

GroupAction z2_swap(int extra_fixed = 0) {
    auto Z2 = FiniteGroup::cyclic_product({2});
    int nx = 2 + extra_fixed;
    std::vector<std::vector<int>> map(2, std::vector<int>(nx));
    for (int x = 0; x < nx; ++x) {
        map[0][x] = x;
        map[1][x] = x < 2 ? 1 - x : x;
    }
    return GroupAction(std::move(Z2), nx, std::move(map));
}

GroupAction z4_parity() {
    auto Z4 = FiniteGroup::cyclic_product({4});
    std::vector<std::vector<int>> map(4, std::vector<int>(2));
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < 2; ++x) map[g][x] = (x + g) % 2;
    return GroupAction(std::move(Z4), 2, std::move(map));
}

}  // namespace

TEST_CASE("action construction and structure") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    SUBCASE("validation") {
        CHECK_THROWS_AS(GroupAction(Z2, 2, {{0, 1}, {0, 0}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(GroupAction(Z2, 2, {{1, 0}, {0, 1}}),
                        std::invalid_argument);
        // Z3-like table under Z2 breaks compatibility with the law.
        CHECK_THROWS_AS(GroupAction(FiniteGroup::cyclic_product({4}), 3,
                                    {{0, 1, 2},
                                     {1, 2, 0},
                                     {2, 0, 1},
                                     {0, 1, 2}}),
                        std::invalid_argument);
    }
    SUBCASE("orbits, stabilizers, kernel") {
        auto a = z2_swap(1);
        CHECK(a.orbits() == std::vector<std::vector<int>>{{0, 1}, {2}});
        CHECK(a.stabilizer(0) == std::vector<int>{0});
        CHECK(a.stabilizer(2) == std::vector<int>{0, 1});
        CHECK(a.kernel() == std::vector<int>{0});
        CHECK(a.is_faithful());
        CHECK_FALSE(a.is_transitive());
        CHECK_THROWS_AS(a.stabilizer(7), std::out_of_range);
    }
    SUBCASE("classification") {
        CHECK(classify(GroupAction::trivial(Z2, 3)) == ActionClass::Trivial);
        CHECK(classify(GroupAction::left_translation(Z2)) ==
              ActionClass::Free);
        CHECK(classify(z4_parity()) == ActionClass::Transitive);
        CHECK(classify(z2_swap(1)) == ActionClass::General);
    }
}

TEST_CASE("action-averaged operators") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    SUBCASE("trivial action scales the constrained spreading map") {
        auto a = GroupAction::trivial(Z2, 2);
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; k + l <= 3; ++l)
                for (const auto& p : enumerate_family(Family::ALL, k, l)) {
                    std::vector<int> w(k + l, 1);
                    auto cp = ColouredPartition{p, w};
                    CHECK(M_alpha_of(cp, a, 2) ==
                          T_of(cp, 2, 2).scaled(1L << p.num_blocks()));
                }
    }
    SUBCASE("left translation reproduces the blockwise average") {
        auto a = GroupAction::left_translation(Z2);
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; k + l <= 3; ++l)
                for (const auto& p : enumerate_family(Family::ALL, k, l)) {
                    std::vector<int> w(k + l, 0);
                    do {
                        auto cp = ColouredPartition{p, w};
                        CHECK(M_alpha_of(cp, a, 2) == M_of(cp, Z2, 2));
                    } while ([&] {
                        for (int i = (int)w.size() - 1; i >= 0; --i) {
                            if (++w[i] < 2) return true;
                            w[i] = 0;
                        }
                        return false;
                    }());
                }
    }
    SUBCASE("swap action on the identity diagram at N=1") {
        auto m = M_alpha_of(colour_rows(identity_partition(), {0}, {0}),
                            z2_swap(), 1);
        REQUIRE(m.ent.size() == 2);
        CHECK(m.ent[0].row == 0);
        CHECK(m.ent[0].col == 0);
        CHECK(m.ent[1].row == 1);
        CHECK(m.ent[1].col == 1);
    }
    SUBCASE("colour out of range is rejected") {
        CHECK_THROWS_AS(M_alpha_of(colour_rows(identity_partition(), {2},
                                               {2}),
                                   z2_swap(), 1),
                        std::invalid_argument);
    }
    SUBCASE("operators never connect different orbits") {
        auto a = z2_swap(1);
        for (const auto& p : enumerate_family(Family::NC, 1, 2)) {
            std::vector<int> w{0, 1, 2};
            auto rep = orbit_support_check(ColouredPartition{p, w}, a, 2);
            CHECK(rep.violations.empty());
        }
    }
}

TEST_CASE("span closure of the averaged operators") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    SUBCASE("swap action") {
        auto rep = closure_check_alpha(Family::NC, z2_swap(), 2, 3);
        CHECK(rep.cases > 0);
        CHECK(rep.violations.empty());
    }
    SUBCASE("trivial action") {
        auto rep =
            closure_check_alpha(Family::NC, GroupAction::trivial(Z2, 2), 2, 3);
        CHECK(rep.cases > 0);
        CHECK(rep.violations.empty());
    }
    SUBCASE("even-block family under the swap coloured action") {
        REQUIRE(coloured_action_check(z2_swap(), {1, 0}));
        auto rep = closure_check_alpha(Family::NCEV, z2_swap(), 2, 4);
        CHECK(rep.cases > 0);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("reduction to a faithful action") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    SUBCASE("trivial action reduces to the trivial group") {
        auto r = reduce_action(GroupAction::trivial(Z2, 2));
        CHECK(r.kernel.size() == 2);
        CHECK(r.action.group().size() == 1);
        CHECK(r.action.is_faithful());
    }
    SUBCASE("faithful actions keep their group") {
        auto r = reduce_action(z2_swap());
        CHECK(r.kernel == std::vector<int>{0});
        CHECK(r.action.group().size() == 2);
    }
    SUBCASE("parity action of the 4-cycle halves") {
        auto a = z4_parity();
        auto r = reduce_action(a);
        CHECK(r.kernel == std::vector<int>{0, 2});
        CHECK(r.action.group().size() == 2);
        CHECK(r.action.is_faithful());
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; k + l <= 2; ++l)
                for (const auto& p : enumerate_family(Family::ALL, k, l)) {
                    std::vector<int> w(k + l, 0);
                    CHECK(reduction_preserves_operator(
                        a, r, ColouredPartition{p, w}, 2));
                    std::vector<int> w1(k + l, 1);
                    CHECK(reduction_preserves_operator(
                        a, r, ColouredPartition{p, w1}, 2));
                }
    }
}

TEST_CASE("rank identifications of degenerate actions") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    SUBCASE("trivial action collapses to the uncoloured ranks") {
        auto a = GroupAction::trivial(Z2, 3);
        for (int n = 1; n <= 3; ++n)
            CHECK(span_rank_alpha(Family::NC, a, 4, n, 0) ==
                  (long)enumerate_family(Family::NC, 0, n).size());
    }
    SUBCASE("free action matches the regular wreath ranks") {
        auto a = GroupAction::left_translation(Z2);
        auto m = wreath_moments(Family::NC, 2, 3);
        for (int n = 1; n <= 3; ++n)
            CHECK(Rat(span_rank_alpha(Family::NC, a, 4, n)) == m.m[n]);
    }
}

TEST_CASE("coloured actions") {
    CHECK(coloured_action_check(z2_swap(), {1, 0}));
    CHECK(coloured_action_check(GroupAction::trivial(
                                    FiniteGroup::cyclic_product({2}), 2),
                                {1, 0}));
    CHECK(coloured_action_check(GroupAction::trivial(
                                    FiniteGroup::cyclic_product({2}), 2),
                                {0, 1}));
    SUBCASE("action moving one fixed point of the involution fails") {
        // Z2 exchanges 0 and 2 while the involution exchanges 0 and 1.
        auto Z2 = FiniteGroup::cyclic_product({2});
        GroupAction a(Z2, 3, {{0, 1, 2}, {2, 1, 0}});
        CHECK_FALSE(coloured_action_check(a, {1, 0, 2}));
    }
    SUBCASE("non-involutions are rejected") {
        CHECK_THROWS_AS(coloured_action_check(z2_swap(), {1, 1}),
                        std::invalid_argument);
        CHECK_THROWS_AS(coloured_action_check(z2_swap(), {0}),
                        std::invalid_argument);
    }
}
