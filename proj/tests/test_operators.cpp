#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "wreath/operators.hpp"
#include "wreath/rank.hpp"
#include "wreath/verify.hpp"

using namespace wreath;

namespace {

Character chr(std::vector<int> e) { return Character{std::move(e)}; }

bool next_tuple(std::vector<int>& t, int base) {
    for (int i = (int)t.size() - 1; i >= 0; --i) {
        if (++t[i] < base) return true;
        t[i] = 0;
    }
    return false;
}

// Coordinates of e_a - e_b in the basis v1 = e0 - e1, v2 = e1 - e2 of the
// zero-sum plane of C^3.
std::pair<long, long> zero_sum_coords(int a, int b) {
    if (a == b) return {0, 0};
    if (a == 0 && b == 1) return {1, 0};
    if (a == 1 && b == 2) return {0, 1};
    if (a == 0 && b == 2) return {1, 1};
    auto r = zero_sum_coords(b, a);
    return {-r.first, -r.second};
}

}  // namespace

TEST_CASE("plain spreading maps: small examples") {
    CHECK(T_of(identity_partition(), 3) == OpMatrix<long>::identity(1, 3, 1));
    auto cup = T_of(cup_partition(), 3);
    CHECK(cup.k == 0);
    CHECK(cup.l == 2);
    REQUIRE(cup.ent.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(cup.ent[i].row == (uint64_t)(i * 3 + i));
        CHECK(cup.ent[i].col == 0);
        CHECK(cup.ent[i].val == 1);
    }
    for (int N = 2; N <= 5; ++N) {
        auto prod = T_of(cap_partition(), N).matmul(T_of(cup_partition(), N));
        REQUIRE(prod.ent.size() == 1);
        CHECK(prod.ent[0].val == N);
    }
    for (int N = 2; N <= 4; ++N) {
        auto cr = T_of(cross_partition(), N);
        auto idid =
            T_of(tensor(identity_partition(), identity_partition()), N);
        CHECK(cr.matmul(cr) == idid);
    }
}

TEST_CASE("composition, adjoint and tensor rules hold exhaustively") {
    auto rep = verify_T_ops(2, 2, 2, {2, 3});
    CHECK(rep.cases > 0);
    CHECK(rep.violations.empty());
}

TEST_CASE("coloured composition rule at the matrix level") {
    auto repz2 = verify_T_coloured(FiniteGroup::cyclic_product({2}), 2, 3);
    CHECK(repz2.cases > 0);
    CHECK(repz2.violations.empty());
}

TEST_CASE("averaged operators: expansions and identities") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    SUBCASE("blockwise average of the identity is the identity") {
        for (int N = 1; N <= 3; ++N)
            CHECK(M_of(colour_rows(identity_partition(), {0}, {0}), Z2, N) ==
                  OpMatrix<long>::identity(1, N, 2));
    }
    SUBCASE("blockwise average of the colour-shifted identity swaps sectors") {
        auto M = M_of(colour_rows(identity_partition(), {1}, {0}), Z2, 1);
        REQUIRE(M.ent.size() == 2);
        CHECK(M.ent[0].row == 0);
        CHECK(M.ent[0].col == 1);
        CHECK(M.ent[1].row == 1);
        CHECK(M.ent[1].col == 0);
    }
    SUBCASE("global and blockwise averages agree on one-block diagrams") {
        for (int k = 0; k <= 4; ++k)
            for (int l = 0; k + l <= 4; ++l) {
                if (k + l == 0) continue;
                Partition p = one_block(k, l);
                std::vector<int> w(k + l, 0);
                do {
                    ColouredPartition cp{p, w};
                    CHECK(L_of(cp, Z2, 2) == M_of(cp, Z2, 2));
                } while (next_tuple(w, 2));
            }
    }
    SUBCASE("average depends only on the recolouring class") {
        auto Z3 = FiniteGroup::cyclic_product({3});
        for (auto& p : enumerate_family(Family::ALL, 1, 2)) {
            std::vector<int> w(3, 0);
            do {
                ColouredPartition cp{p, w};
                auto cano = canonical_e_form(cp, Z3.mult_fn(), Z3.inv_fn());
                CHECK(M_of(cp, Z3, 2) == M_of(cano, Z3, 2));
            } while (next_tuple(w, 3));
        }
    }
}

TEST_CASE("averaged composition rule") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    auto Z3 = FiniteGroup::cyclic_product({3});
    SUBCASE("cap and cup, scalar (|G|N)^1") {
        ColouredPartition cap = colour_rows(cap_partition(), {0, 0}, {});
        ColouredPartition cup = colour_rows(cup_partition(), {}, {0, 0});
        auto prod = M_of(cap, Z2, 3).matmul(M_of(cup, Z2, 3));
        REQUIRE(prod.ent.size() == 1);
        CHECK(prod.ent[0].val == 6);
        CHECK(verify_M_pair(cap, cup, Z2, 3).ok());
    }
    SUBCASE("no matching recolourings: zero product") {
        ColouredPartition cap = colour_rows(cap_partition(), {0, 1}, {});
        ColouredPartition cup = colour_rows(cup_partition(), {}, {0, 0});
        CHECK(M_of(cap, Z3, 2).matmul(M_of(cup, Z3, 2)).is_zero());
        CHECK(verify_M_pair(cap, cup, Z3, 2).ok());
    }
    SUBCASE("formal sweep") {
        auto rep = verify_M_composition_formal(Z2, 3);
        CHECK(rep.cases > 0);
        CHECK(rep.violations.empty());
    }
    SUBCASE("direct matrix sweep on small shapes") {
        auto rep = verify_M_composition_direct(Z2, 2, 2);
        CHECK(rep.cases > 0);
        CHECK(rep.violations.empty());
    }
    SUBCASE("inner size mismatch is rejected") {
        ColouredPartition cup = colour_rows(cup_partition(), {}, {0, 0});
        CHECK_THROWS_AS(verify_M_pair(cup, cup, Z2, 2),
                        std::invalid_argument);
    }
}

TEST_CASE("translation and permutation operators") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    auto Z3 = FiniteGroup::cyclic_product({3});
    for (int i = 0; i < 2; ++i)
        CHECK(rho_site(Z2, 2, i, 0) == OpMatrix<long>::identity(1, 2, 2));
    SUBCASE("global translation swaps colour sectors in every site slot") {
        auto r = rho_full(Z2, 2, 1);
        REQUIRE(r.ent.size() == 4);
        for (auto& e : r.ent) CHECK(e.row == (e.col ^ 1));
    }
    SUBCASE("sitewise translations at different sites commute") {
        for (int g = 0; g < 3; ++g)
            for (int h = 0; h < 3; ++h)
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        if (i == j) continue;
                        auto a = rho_site(Z3, 3, i, g);
                        auto b = rho_site(Z3, 3, j, h);
                        CHECK(a.matmul(b) == b.matmul(a));
                    }
    }
    CHECK_THROWS_AS(rho_site(Z2, 2, 5, 0), std::out_of_range);
    SUBCASE("site permutation is a permutation matrix") {
        auto p = pi_perm(Z2, 3, {1, 2, 0});
        CHECK(p.ent.size() == 6);
        CHECK(p.matmul(p).matmul(p) == OpMatrix<long>::identity(1, 3, 2));
    }
}

TEST_CASE("equivariance of averaged operators") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    SUBCASE("forward, sitewise and global") {
        auto spec = CategorySpec::group_coloured(Family::NC, Z2);
        auto rep = verify_equivariance(spec, Z2, 2, 1, 1);
        CHECK(rep.cases > 0);
        CHECK(rep.violations.empty());
    }
    SUBCASE("permutation conjugation invariance") {
        auto spec = CategorySpec::group_coloured(Family::ALL, Z2);
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; k + l <= 3; ++l) {
                auto rep = verify_equivariance(spec, Z2, 3, k, l, true);
                CHECK(rep.violations.empty());
            }
    }
    SUBCASE("converse: fixed space is spanned by the averaged maps") {
        auto mult = Z2.mult_fn();
        auto inv = Z2.inv_fn();
        std::set<ColouredPartition> classes;
        for (auto& p : enumerate_family(Family::ALL, 1, 1)) {
            std::vector<int> w(2, 0);
            do {
                classes.insert(
                    canonical_e_form(ColouredPartition{p, w}, mult, inv));
            } while (next_tuple(w, 2));
        }
        CHECK(classes.size() == 3);
        CHECK(equivariant_fixed_dim(Z2, 2, 1, 1) == 3);
    }
}

TEST_CASE("character projections") {
    for (auto orders : {std::vector<int>{2}, std::vector<int>{3},
                        std::vector<int>{2, 2}}) {
        auto G = FiniteGroup::cyclic_product(orders);
        for (int N = 1; N <= 3; ++N) {
            auto rep = verify_P(G, N);
            CHECK(rep.cases > 0);
            CHECK(rep.violations.empty());
        }
    }
    SUBCASE("rank-1 symmetric and antisymmetric projections on Z2, N=1") {
        auto Z2 = FiniteGroup::cyclic_product({2});
        auto Pe = P_of(chr({0}), Z2, 1);
        auto Ps = P_of(chr({1}), Z2, 1);
        Rat half(1, 2);
        for (auto& e : Pe.ent) CHECK(e.val == Cyclo(half));
        REQUIRE(Ps.ent.size() == 4);
        for (auto& e : Ps.ent)
            CHECK(e.val == (e.row == e.col ? Cyclo(half) : Cyclo(-half)));
    }
    SUBCASE("non-abelian groups are rejected") {
        CHECK_THROWS_AS(P_of(chr({0}), FiniteGroup::symmetric(3), 2),
                        std::invalid_argument);
    }
}

TEST_CASE("projections from an explicit representation of S3") {
    auto S3 = FiniteGroup::symmetric(3);
    int N = 2;
    // Permutations in lexicographic order match the group's element order.
    std::vector<std::vector<int>> perms;
    std::vector<int> s{0, 1, 2};
    do {
        perms.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    auto c = [](long v) { return Cyclo(Rat(v)); };
    std::vector<std::vector<std::vector<Cyclo>>> triv, sign, two;
    for (auto& sg : perms) {
        triv.push_back({{c(1)}});
        int sgn = 1;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (sg[i] > sg[j]) sgn = -sgn;
        sign.push_back({{c(sgn)}});
        // Action on the zero-sum plane: sigma(v_j) back in (v1, v2)
        // coordinates.
        auto c1 = zero_sum_coords(sg[0], sg[1]);
        auto c2 = zero_sum_coords(sg[1], sg[2]);
        two.push_back({{c(c1.first), c(c2.first)},
                       {c(c1.second), c(c2.second)}});
    }
    auto Pt = P_nonabelian(triv, 0, S3, N);
    auto Psg = P_nonabelian(sign, 0, S3, N);
    auto P1 = P_nonabelian(two, 0, S3, N);
    auto P2 = P_nonabelian(two, 1, S3, N);
    for (auto* P : {&Pt, &Psg, &P1, &P2}) CHECK(P->matmul(*P) == *P);
    CHECK(Pt.matmul(Psg).is_zero());
    CHECK(Pt.matmul(P1).is_zero());
    CHECK(Psg.matmul(P2).is_zero());
    CHECK(P1.matmul(P2).is_zero());
    auto sum = Pt + Psg + P1 + P2;
    CHECK(sum == OpMatrix<Cyclo>::identity(1, N, 6));
    SUBCASE("invalid representations are rejected") {
        auto bad = two;
        bad[1][0][0] = c(7);
        CHECK_THROWS_AS(P_nonabelian(bad, 0, S3, N), std::invalid_argument);
    }
}

TEST_CASE("boundary-character operators") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    Character eps = chr({0}), sig = chr({1});
    SUBCASE("admissibility rules") {
        CHECK(is_admissible(identity_partition(), {sig}, {sig}, Z2));
        CHECK(is_admissible(cup_partition(), {}, {sig, sig}, Z2));
        CHECK_FALSE(is_admissible(one_block(1, 2), {sig}, {sig, sig}, Z2));
    }
    SUBCASE("inadmissible tuples give the zero operator") {
        CHECK(F_of(cup_partition(), {}, {sig, eps}, Z2, 2).is_zero());
    }
    SUBCASE("admissible cup is nonzero of rank 1") {
        auto F = F_of(cup_partition(), {}, {sig, sig}, Z2, 2);
        CHECK_FALSE(F.is_zero());
        CHECK(span_rank(std::vector<OpMatrix<Cyclo>>{F}) == 1);
    }
    SUBCASE("cap o cup composition scalar 32") {
        auto prod = F_of(cap_partition(), {sig, sig}, {}, Z2, 2)
                        .matmul(F_of(cup_partition(), {}, {sig, sig}, Z2, 2));
        REQUIRE(prod.ent.size() == 1);
        CHECK(prod.ent[0].val == Cyclo(Rat(32)));
    }
    SUBCASE("mismatched inner tuples annihilate") {
        auto prod = F_of(cap_partition(), {sig, eps}, {}, Z2, 2)
                        .matmul(F_of(cup_partition(), {}, {sig, sig}, Z2, 2));
        CHECK(prod.is_zero());
    }
    SUBCASE("adjoint and tensor identities") {
        auto duals = dual_group(Z2);
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; k + l <= 3; ++l)
                for (auto& p : enumerate_family(Family::ALL, k, l)) {
                    std::vector<int> tup(k + l, 0);
                    do {
                        std::vector<Character> chis, rhos;
                        for (int j = 0; j < k; ++j)
                            chis.push_back(duals[tup[j]]);
                        for (int j = 0; j < l; ++j)
                            rhos.push_back(duals[tup[k + j]]);
                        CHECK(F_of(p, chis, rhos, Z2, 2).adjoint() ==
                              F_of(involution(p), rhos, chis, Z2, 2));
                    } while (next_tuple(tup, 2));
                }
        auto Fa = F_of(identity_partition(), {sig}, {sig}, Z2, 2);
        auto Fb = F_of(cup_partition(), {}, {sig, sig}, Z2, 2);
        auto Fab = F_of(tensor(identity_partition(), cup_partition()),
                        {sig}, {sig, sig, sig}, Z2, 2);
        CHECK(Fa.tensor(Fb) == Fab);
    }
    SUBCASE("normalized variant carries half powers on the scale tag") {
        auto Fs = F_of(singleton_lower(), {}, {eps}, Z2, 2, true);
        CHECK(Fs.sqrt_tag == 1);
        CHECK(Fs.sqrt_base == 2);
        auto Fc = F_of(cup_partition(), {}, {sig, sig}, Z2, 2, true);
        CHECK(Fc.sqrt_tag == 0);
        CHECK(Fc == F_of(cup_partition(), {}, {sig, sig}, Z2, 2));
        CHECK(Fs.adjoint() ==
              F_of(singleton_upper(), {eps}, {}, Z2, 2, true));
    }
    SUBCASE("non-abelian groups are rejected") {
        CHECK_THROWS_AS(
            F_of(cup_partition(), {}, {sig, sig}, FiniteGroup::symmetric(3),
                 2),
            std::invalid_argument);
    }
}

TEST_CASE("boundary-operator sweeps") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    auto rep1 = verify_F_expansion(Z2, 4);
    CHECK(rep1.cases > 0);
    CHECK(rep1.violations.empty());
    auto rep2 = verify_F_composition_formal(Z2, 3);
    CHECK(rep2.cases > 0);
    CHECK(rep2.violations.empty());
    auto rep3 = verify_F_composition_direct(Z2, 2, 5);
    CHECK(rep3.cases > 0);
    CHECK(rep3.violations.empty());
}

TEST_CASE("exact span ranks") {
    SUBCASE("noncrossing 4-point family at N=4 and the degeneracy at N=2") {
        auto fam = enumerate_family(Family::NC, 0, 4);
        REQUIRE(fam.size() == 14);
        CHECK(span_rank_T_family(fam, 4) == 14);
        long r2 = span_rank_T_family(fam, 2);
        CHECK(r2 < 14);
        // Cross-check the Gram shortcut against vectorized elimination.
        std::vector<OpMatrix<long>> ops, ops2;
        for (auto& p : fam) {
            ops.push_back(T_of(p, 4));
            ops2.push_back(T_of(p, 2));
        }
        CHECK(span_rank(ops) == 14);
        CHECK(span_rank(ops2) == r2);
    }
    SUBCASE("rank is order-independent and bounded by the family size") {
        auto fam = enumerate_family(Family::ALL, 1, 2);
        std::vector<OpMatrix<long>> ops;
        for (auto& p : fam) ops.push_back(T_of(p, 2));
        long r = span_rank(ops);
        CHECK(r <= (long)ops.size());
        std::reverse(ops.begin(), ops.end());
        CHECK(span_rank(ops) == r);
    }
    SUBCASE("averaged family rank equals the morphism dimension") {
        auto Z2 = FiniteGroup::cyclic_product({2});
        auto spec = CategorySpec::group_coloured(Family::NC, Z2);
        CHECK(dim_mor_M(spec, Z2, 4, 0, 2) == 3);
        // Cross-check against vectorized elimination.
        std::set<ColouredPartition> reps;
        for (auto& p : spec.enumerate(0, 2))
            reps.insert(canonical_e_form(p, Z2.mult_fn(), Z2.inv_fn()));
        std::vector<OpMatrix<long>> ops;
        std::vector<ColouredPartition> fam(reps.begin(), reps.end());
        for (auto& p : fam) ops.push_back(M_of(p, Z2, 4));
        CHECK(span_rank(ops) == 3);
        CHECK(span_rank_M_family(fam, Z2, 4) == 3);
    }
}

TEST_CASE("morphism space dimensions") {
    auto Z2 = FiniteGroup::cyclic_product({2});
    SUBCASE("boundary-character family vs coloured member count") {
        CHECK(dim_mor_F(Family::NC, Z2, 4, {}, {chr({1}), chr({1})}) == 1);
        auto gamma = CategorySpec::gamma_coloured(Family::NC, Z2);
        CHECK((long)gamma.enumerate_boundary({}, {1, 1}).size() == 1);
    }
    SUBCASE("mismatched parity boundary words have no morphisms") {
        auto spec = CategorySpec::gamma_coloured(Family::NC2, Z2);
        CHECK(dim_mor_T(spec, 4, {0}, {1, 1}) == 0);
    }
    SUBCASE("coloured identity boundaries") {
        auto spec = CategorySpec::group_coloured(Family::NC, Z2);
        CHECK(dim_mor_T(spec, 4, {0, 1}, {0, 1}) ==
              (long)spec.enumerate_boundary({0, 1}, {0, 1}).size());
    }
}
