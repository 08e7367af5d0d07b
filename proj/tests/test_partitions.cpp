#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "wreath/partition.hpp"

using namespace wreath;

// ------------------------------------------------------------------
// Independent counting oracles.
// ------------------------------------------------------------------

static long bell_number(int n) {
    // Bell triangle recursion.
    std::vector<std::vector<long>> tri = {{1}};
    for (int i = 1; i <= n; ++i) {
        std::vector<long> row = {tri.back().back()};
        for (long v : tri.back()) row.push_back(row.back() + v);
        tri.push_back(row);
    }
    return tri[(size_t)n][0];
}

static long catalan_number(int n) {
    // C_0 = 1, C_{n+1} = sum C_i C_{n-i}.
    std::vector<long> c = {1};
    for (int i = 1; i <= n; ++i) {
        long s = 0;
        for (int j = 0; j < i; ++j) s += c[(size_t)j] * c[(size_t)(i - 1 - j)];
        c.push_back(s);
    }
    return c[(size_t)n];
}

static long double_factorial_odd(int n) {  // (2n-1)!!
    long v = 1;
    for (int i = 2 * n - 1; i > 0; i -= 2) v *= i;
    return v;
}

// Brute-force crossing test straight from the four-point definition on
// the cyclic reading, independent of the production implementation.
static bool brute_noncrossing(const Partition& p) {
    std::vector<int> seq;
    for (int i = 0; i < p.k; ++i) seq.push_back(p.block[(size_t)i]);
    for (int i = p.l - 1; i >= 0; --i) seq.push_back(p.block[(size_t)(p.k + i)]);
    int n = (int)seq.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (seq[(size_t)a] == seq[(size_t)c] &&
                        seq[(size_t)b] == seq[(size_t)d] &&
                        seq[(size_t)a] != seq[(size_t)b])
                        return false;
    return true;
}

// Composition oracle: independent union-find over the joined diagram.
static std::pair<Partition, int> brute_compose(const Partition& p,
                                               const Partition& q) {
    int k = q.k, l = q.l, m = p.l;
    int n = k + l + m;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[(size_t)i] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[(size_t)x] == x ? x : parent[(size_t)x] = find(parent[(size_t)x]);
    };
    auto unite = [&](int a, int b) { parent[(size_t)find(a)] = find(b); };
    for (int i = 0; i < k + l; ++i)
        for (int j = i + 1; j < k + l; ++j)
            if (q.block[(size_t)i] == q.block[(size_t)j]) unite(i, j);
    for (int i = 0; i < l + m; ++i)
        for (int j = i + 1; j < l + m; ++j)
            if (p.block[(size_t)i] == p.block[(size_t)j]) unite(k + i, k + j);
    std::vector<int> raw;
    std::set<int> outer_classes;
    for (int i = 0; i < k; ++i) {
        raw.push_back(find(i));
        outer_classes.insert(find(i));
    }
    for (int i = 0; i < m; ++i) {
        raw.push_back(find(k + l + i));
        outer_classes.insert(find(k + l + i));
    }
    std::set<int> loop_classes;
    for (int i = 0; i < l; ++i)
        if (!outer_classes.count(find(k + i))) loop_classes.insert(find(k + i));
    return {canonicalize(k, m, raw), (int)loop_classes.size()};
}

TEST_CASE("canonical form and basic accessors") {
    Partition p = canonicalize(2, 2, {7, 3, 3, 7});
    CHECK(p.block == std::vector<int>{0, 1, 1, 0});
    CHECK(p.num_blocks() == 2);
    CHECK(p.through_blocks() == 2);
    CHECK(p == cross_partition());
    // Idempotence of canonicalization.
    CHECK(canonicalize(p.k, p.l, p.block) == p);
    CHECK(one_block(2, 1).through_blocks() == 1);
    CHECK(empty_partition().num_blocks() == 0);
}

TEST_CASE("tensor") {
    Partition id = identity_partition();
    Partition t = tensor(id, id);
    CHECK(t.k == 2);
    CHECK(t.l == 2);
    CHECK(t.block == std::vector<int>{0, 1, 0, 1});

    Partition cc = tensor(cup_partition(), cup_partition());
    CHECK(cc == canonicalize(0, 4, {0, 0, 1, 1}));

    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 5; ++l)
            for (auto& p : enumerate_family(Family::ALL, k, l)) {
                CHECK(tensor(p, empty_partition()) == p);
                CHECK(tensor(empty_partition(), p) == p);
            }
}

TEST_CASE("compose examples") {
    auto [r1, loops1] = compose(cap_partition(), cup_partition());
    CHECK(r1 == empty_partition());
    CHECK(loops1 == 1);

    auto cc = tensor(cap_partition(), cap_partition());
    auto uu = tensor(cup_partition(), cup_partition());
    auto [r2, loops2] = compose(cc, uu);
    CHECK(r2 == empty_partition());
    CHECK(loops2 == 2);

    Partition two_singletons = canonicalize(2, 0, {0, 1});
    auto [r3, loops3] = compose(two_singletons, cup_partition());
    CHECK(r3 == empty_partition());
    CHECK(loops3 == 1);

    CHECK_THROWS_AS(compose(identity_partition(), cap_partition()),
                    std::invalid_argument);
}

TEST_CASE("compose agrees with independent union-find oracle") {
    for (int l = 0; l <= 3; ++l)
        for (int k = 0; k + l <= 5; ++k)
            for (int m = 0; m + l <= 5 && k + m <= 5; ++m)
                for (auto& q : enumerate_family(Family::ALL, k, l))
                    for (auto& p : enumerate_family(Family::ALL, l, m)) {
                        auto got = compose(p, q);
                        auto want = brute_compose(p, q);
                        CHECK(got.result == want.first);
                        CHECK(got.loops == want.second);
                    }
}

TEST_CASE("involution") {
    CHECK(involution(cup_partition()) == cap_partition());
    CHECK(involution(identity_partition()) == identity_partition());
    CHECK(involution(cross_partition()) == cross_partition());
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 6; ++l)
            for (auto& p : enumerate_family(Family::ALL, k, l))
                CHECK(involution(involution(p)) == p);
}

TEST_CASE("crossing detection") {
    CHECK_FALSE(is_noncrossing(cross_partition()));
    CHECK(is_noncrossing(tensor(identity_partition(), identity_partition())));
    CHECK_FALSE(is_noncrossing(canonicalize(0, 4, {0, 1, 0, 1})));
    CHECK(is_noncrossing(canonicalize(0, 4, {0, 1, 1, 0})));
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 6; ++l)
            for (auto& p : enumerate_family(Family::ALL, k, l))
                CHECK(is_noncrossing(p) == brute_noncrossing(p));
}

TEST_CASE("family enumeration counts") {
    long catalan_expect[] = {1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 5; ++n) {
        CHECK((long)enumerate_family(Family::NC, 0, n).size() ==
              catalan_expect[n]);
        CHECK((long)enumerate_family(Family::NC, 0, n).size() ==
              catalan_number(n));
    }
    CHECK(enumerate_family(Family::ALL, 0, 3).size() == 5);
    CHECK(enumerate_family(Family::ALL, 0, 4).size() == 15);
    for (int n = 0; n <= 8; ++n)
        CHECK((long)enumerate_family(Family::ALL, 0, n).size() ==
              bell_number(n));
    CHECK(enumerate_family(Family::NCEV, 0, 4).size() == 3);
    CHECK(enumerate_family(Family::NC2, 0, 4).size() == 2);
    for (int n = 0; n <= 4; ++n) {
        CHECK((long)enumerate_family(Family::PAIR, 0, 2 * n).size() ==
              double_factorial_odd(n));
        CHECK(enumerate_family(Family::PAIR, 0, 2 * n + 1).empty());
        CHECK((long)enumerate_family(Family::NC2, 0, 2 * n).size() ==
              catalan_number(n));
    }
    // Split across rows: counts depend only on k+l for ALL.
    CHECK(enumerate_family(Family::ALL, 2, 2).size() ==
          enumerate_family(Family::ALL, 0, 4).size());
    CHECK_THROWS_AS(enumerate_family(Family::ALL, 0, 13),
                    std::length_error);
    // No duplicates, all canonical.
    auto nc = enumerate_family(Family::NC, 2, 3);
    std::set<Partition> uniq(nc.begin(), nc.end());
    CHECK(uniq.size() == nc.size());
    for (auto& p : nc) CHECK(canonicalize(p.k, p.l, p.block) == p);
}

TEST_CASE("category laws on small diagrams") {
    // (p tensor q)* = p* tensor q*,  (pq)* = q* p*, associativity of
    // composition including accumulated loop counts.
    auto all3 = std::vector<std::pair<int, int>>{};
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 3; ++l) all3.push_back({k, l});
    for (auto [k1, l1] : all3)
        for (auto [k2, l2] : all3) {
            if (k1 + l1 + k2 + l2 > 6 || k1 + l1 + k2 + l2 == 0) continue;
            for (auto& p : enumerate_family(Family::ALL, k1, l1))
                for (auto& q : enumerate_family(Family::ALL, k2, l2)) {
                    CHECK(involution(tensor(p, q)) ==
                          tensor(involution(p), involution(q)));
                    if (l2 == k1) {
                        // q applied first, then p.
                        auto pq = compose(p, q);
                        CHECK(involution(pq.result) ==
                              compose(involution(q), involution(p)).result);
                    }
                }
        }
    // Associativity with loop bookkeeping.
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int d = 0; d <= 2; ++d) {
                    if (a + b > 4 || b + c > 4 || c + d > 4) continue;
                    for (auto& r : enumerate_family(Family::ALL, a, b))
                        for (auto& q : enumerate_family(Family::ALL, b, c))
                            for (auto& p : enumerate_family(Family::ALL, c, d)) {
                                auto pq = compose(p, q);
                                auto left = compose(pq.result, r);
                                auto qr = compose(q, r);
                                auto right = compose(p, qr.result);
                                CHECK(left.result == right.result);
                                CHECK(left.loops + pq.loops ==
                                      right.loops + qr.loops);
                            }
                }
}

TEST_CASE("noncrossing closed under the category operations") {
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 6; ++l)
            for (auto& p : enumerate_family(Family::NC, k, l)) {
                CHECK(is_noncrossing(involution(p)));
                auto cp = colour_all(p);
                auto cs = ColourSet::single();
                if (p.k > 0) {
                    CHECK(is_noncrossing(rotate(cp, Corner::UpperLeft, cs).base));
                    CHECK(is_noncrossing(rotate(cp, Corner::UpperRight, cs).base));
                }
                if (p.l > 0) {
                    CHECK(is_noncrossing(rotate(cp, Corner::LowerLeft, cs).base));
                    CHECK(is_noncrossing(rotate(cp, Corner::LowerRight, cs).base));
                }
            }
    for (auto& p : enumerate_family(Family::NC, 0, 3))
        for (auto& q : enumerate_family(Family::NC, 0, 3))
            CHECK(is_noncrossing(tensor(p, q)));
    for (auto& p : enumerate_family(Family::NC, 3, 2))
        for (auto& q : enumerate_family(Family::NC, 2, 3))
            CHECK(is_noncrossing(compose(p, q).result));
}

TEST_CASE("rotation") {
    auto cs = ColourSet::two_colour();  // w <-> b conjugate
    // id coloured (w upper, w lower) rotated at upper-left:
    // cup coloured (b, w).
    ColouredPartition id_ww{identity_partition(), {0, 0}};
    auto rot = rotate(id_ww, Corner::UpperLeft, cs);
    CHECK(rot.base == cup_partition());
    CHECK(rot.colours == std::vector<int>{1, 0});

    // Rotating the crossing at the upper-left corner.
    auto r = rotate(colour_all(cross_partition()), Corner::UpperLeft,
                    ColourSet::single());
    CHECK(r.base == parse_partition("P(1,3) {u1 l2} {l1 l3}"));

    // Inverse rotations, uncoloured via one-colour set.
    auto single = ColourSet::single();
    for (int k = 1; k <= 3; ++k)
        for (int l = 0; k + l <= 5; ++l)
            for (auto& p : enumerate_family(Family::ALL, k, l)) {
                auto cp = colour_all(p);
                CHECK(rotate(rotate(cp, Corner::UpperLeft, single),
                             Corner::LowerLeft, single) == cp);
                CHECK(rotate(rotate(cp, Corner::UpperRight, single),
                             Corner::LowerRight, single) == cp);
            }
    CHECK_THROWS_AS(rotate(colour_all(cup_partition()), Corner::UpperLeft,
                           single),
                    std::invalid_argument);
}

TEST_CASE("block action") {
    // Z2 = {e, s} acting by left multiplication.
    auto mult = [](int a, int b) { return a ^ b; };
    ColouredPartition cup_ee{cup_partition(), {0, 0}};
    auto acted = act_blocks(cup_ee, {1}, mult);
    CHECK(acted.colours == std::vector<int>{1, 1});
    // Identity tuple fixes everything.
    for (auto& p : enumerate_family(Family::NC, 0, 3)) {
        auto cp = colour_all(p);
        CHECK(act_blocks(cp, std::vector<int>(p.num_blocks(), 0), mult) == cp);
    }
    // Group action law act(act(p,x),y) = act(p, yx); exhaustive over
    // NC(0,3), Z2 tuples.
    for (auto& p : enumerate_family(Family::NC, 0, 3)) {
        int b = p.num_blocks();
        int total = 1 << b;
        for (int cmask = 0; cmask < (1 << p.points()); ++cmask) {
            ColouredPartition cp{p, {}};
            for (int i = 0; i < p.points(); ++i)
                cp.colours.push_back((cmask >> i) & 1);
            for (int xm = 0; xm < total; ++xm)
                for (int ym = 0; ym < total; ++ym) {
                    std::vector<int> x(b), y(b), yx(b);
                    for (int j = 0; j < b; ++j) {
                        x[(size_t)j] = (xm >> j) & 1;
                        y[(size_t)j] = (ym >> j) & 1;
                        yx[(size_t)j] = y[(size_t)j] ^ x[(size_t)j];
                    }
                    CHECK(act_blocks(act_blocks(cp, x, mult), y, mult) ==
                          act_blocks(cp, yx, mult));
                }
        }
    }
}

TEST_CASE("canonical e-form") {
    auto mult = [](int a, int b) { return a ^ b; };
    auto inv = [](int a) { return a; };
    ColouredPartition cup_ss{cup_partition(), {1, 1}};
    CHECK(canonical_e_form(cup_ss, mult, inv) ==
          ColouredPartition{cup_partition(), {0, 0}});
    ColouredPartition cup_es{cup_partition(), {0, 1}};
    CHECK(canonical_e_form(cup_es, mult, inv) == cup_es);

    // Orbit structure of {{l1,l2},{l3}} under Z2 block actions: orbit
    // size 4, exactly one canonical representative.
    Partition p = canonicalize(0, 3, {0, 0, 1});
    std::set<ColouredPartition> orbit;
    ColouredPartition start{p, {0, 1, 1}};
    for (int xm = 0; xm < 4; ++xm)
        orbit.insert(act_blocks(start, {xm & 1, (xm >> 1) & 1}, mult));
    CHECK(orbit.size() == 4);
    int canonical_count = 0;
    for (auto& q : orbit)
        if (canonical_e_form(q, mult, inv) == q) ++canonical_count;
    CHECK(canonical_count == 1);
    for (auto& q : orbit)
        CHECK(canonical_e_form(q, mult, inv) ==
              canonical_e_form(start, mult, inv));
}

TEST_CASE("text round trip") {
    CHECK(to_text(cross_partition()) == "P(2,2) {u1 l2} {u2 l1}");
    CHECK(parse_partition("P(2,2) {u1 l1}{u2 l2}") ==
          tensor(identity_partition(), identity_partition()));
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 5; ++l)
            for (auto& p : enumerate_family(Family::ALL, k, l))
                CHECK(parse_partition(to_text(p)) == p);
    // Coloured round trip.
    auto cs = ColourSet::from_names({"e", "s"}, {0, 1});
    ColouredPartition cp{cross_partition(), {0, 1, 1, 0}};
    CHECK(parse_coloured(to_text(cp, cs), cs) == cp);
    CHECK(to_text(cp, cs) == "P(2,2) {u1@e l2@e} {u2@s l1@s}");
    CHECK_THROWS_AS(parse_partition("P(1,1) {u1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("P(1,0) {u1 u1}"), std::invalid_argument);
}
