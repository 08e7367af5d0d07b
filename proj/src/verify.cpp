#include "wreath/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "wreath/rank.hpp"

namespace wreath {

namespace {

uint64_t pow64(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Int int_pow(long base, int e) {
    Int r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

bool next_tuple(std::vector<int>& t, int base) {
    for (int i = (int)t.size() - 1; i >= 0; --i) {
        if (++t[i] < base) return true;
        t[i] = 0;
    }
    return false;
}

// Column-major 0/1 support of T_p: for each domain tuple, the list of
// codomain tuples carrying a 1.
std::vector<std::vector<uint32_t>> t_columns(const Partition& p, int N) {
    std::vector<std::vector<uint32_t>> cols((size_t)pow64(N, p.k));
    int b = p.num_blocks();
    std::vector<int> site(b, 0);
    do {
        uint64_t col = 0, row = 0;
        for (int u = 0; u < p.k; ++u)
            col = col * (uint64_t)N + (uint64_t)site[p.block[u]];
        for (int j = 0; j < p.l; ++j)
            row = row * (uint64_t)N + (uint64_t)site[p.block[p.k + j]];
        cols[col].push_back((uint32_t)row);
    } while (next_tuple(site, N));
    return cols;
}

void digits_of(uint64_t idx, int len, int base, std::vector<int>& out) {
    out.assign(len, 0);
    for (int j = len - 1; j >= 0; --j) {
        out[j] = (int)(idx % (uint64_t)base);
        idx /= (uint64_t)base;
    }
}

}  // namespace

VerifyReport verify_T_ops(int kmax, int lmax, int mmax,
                          const std::vector<int>& Ns) {
    VerifyReport rep;
    for (int N : Ns) {
        for (int k = 0; k <= kmax; ++k)
            for (int l = 0; l <= lmax; ++l)
                for (int m = 0; m <= mmax; ++m) {
                    auto qs = enumerate_family(Family::ALL, k, l);
                    auto ps = enumerate_family(Family::ALL, l, m);
                    std::vector<std::vector<std::vector<uint32_t>>> qc, pc;
                    for (auto& q : qs) qc.push_back(t_columns(q, N));
                    for (auto& p : ps) pc.push_back(t_columns(p, N));
                    uint64_t ncols = pow64(N, k), nrows = pow64(N, m);
                    std::vector<long> acc(nrows, 0);
                    std::vector<uint32_t> touched;
                    std::vector<int> dc, dr, blockval;
                    for (size_t pi = 0; pi < ps.size(); ++pi)
                        for (size_t qi = 0; qi < qs.size(); ++qi) {
                            auto comp = compose(ps[pi], qs[qi]);
                            const Partition& pq = comp.result;
                            long expect =
                                (long)pow64((uint64_t)N, comp.loops);
                            int bpq = pq.num_blocks();
                            std::vector<char> has_upper(bpq, 0);
                            for (int u = 0; u < k; ++u)
                                has_upper[pq.block[u]] = 1;
                            int free_blocks = 0;
                            for (int bb = 0; bb < bpq; ++bb)
                                if (!has_upper[bb]) ++free_blocks;
                            bool bad = false;
                            for (uint64_t c = 0; c < ncols && !bad; ++c) {
                                touched.clear();
                                for (uint32_t mid : qc[qi][c])
                                    for (uint32_t r : pc[pi][mid]) {
                                        if (acc[r] == 0) touched.push_back(r);
                                        ++acc[r];
                                    }
                                digits_of(c, k, N, dc);
                                blockval.assign(bpq, -1);
                                bool consistent = true;
                                for (int u = 0; u < k; ++u) {
                                    int& v = blockval[pq.block[u]];
                                    if (v < 0)
                                        v = dc[u];
                                    else if (v != dc[u])
                                        consistent = false;
                                }
                                long valid = 0;
                                std::vector<int> base_val = blockval;
                                for (uint32_t r : touched) {
                                    bool in_supp = consistent;
                                    if (in_supp) {
                                        digits_of(r, m, N, dr);
                                        blockval = base_val;
                                        for (int j = 0; j < m; ++j) {
                                            int& v =
                                                blockval[pq.block[k + j]];
                                            if (v < 0)
                                                v = dr[j];
                                            else if (v != dr[j]) {
                                                in_supp = false;
                                                break;
                                            }
                                        }
                                    }
                                    long want = in_supp ? expect : 0;
                                    if (acc[r] != want) bad = true;
                                    if (in_supp) ++valid;
                                    acc[r] = 0;
                                }
                                long want_count =
                                    consistent
                                        ? (long)pow64(N, free_blocks)
                                        : 0;
                                if (valid != want_count) bad = true;
                            }
                            ++rep.cases;
                            if (bad)
                                rep.violations.push_back(
                                    "composition: " + to_text(ps[pi]) +
                                    " o " + to_text(qs[qi]) +
                                    " N=" + std::to_string(N));
                        }
                }
    }
    // Adjoint and tensor identities on reduced bounds.
    for (int N : {2, 3}) {
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l)
                for (auto& p : enumerate_family(Family::ALL, k, l)) {
                    ++rep.cases;
                    if (!(T_of(involution(p), N) == T_of(p, N).adjoint()))
                        rep.violations.push_back("adjoint: " + to_text(p));
                }
    }
    {
        int N = 3;
        std::vector<Partition> small;
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l)
                for (auto& p : enumerate_family(Family::ALL, k, l))
                    small.push_back(p);
        for (auto& p : small)
            for (auto& q : small) {
                if (p.points() + q.points() > 5) continue;
                ++rep.cases;
                if (!(T_of(tensor(p, q), N) == T_of(p, N).tensor(T_of(q, N))))
                    rep.violations.push_back("tensor: " + to_text(p) + " , " +
                                             to_text(q));
            }
    }
    return rep;
}

VerifyReport verify_T_coloured(const FiniteGroup& G, int N, int max_points) {
    VerifyReport rep;
    int gs = G.size();
    for (int l = 0; l <= max_points; ++l)
        for (int k = 0; k + l <= max_points; ++k)
            for (int m = 0; m + l <= max_points; ++m)
                for (auto& q0 : enumerate_family(Family::ALL, k, l))
                    for (auto& p0 : enumerate_family(Family::ALL, l, m)) {
                        auto comp = compose(p0, q0);
                        Int scal = int_pow(N, comp.loops);
                        std::vector<int> cq(k + l, 0);
                        do {
                            std::vector<int> cp(l + m, 0);
                            do {
                                ColouredPartition Q{q0, cq}, P{p0, cp};
                                auto prod = T_of(P, N, gs).matmul(
                                    T_of(Q, N, gs));
                                ++rep.cases;
                                bool match =
                                    Q.lower_colours() == P.upper_colours();
                                bool good;
                                if (!match) {
                                    good = prod.is_zero();
                                } else {
                                    std::vector<int> cr(k + m);
                                    for (int u = 0; u < k; ++u) cr[u] = cq[u];
                                    for (int j = 0; j < m; ++j)
                                        cr[k + j] = cp[l + j];
                                    auto want =
                                        T_of(ColouredPartition{comp.result,
                                                               cr},
                                             N, gs)
                                            .scaled(scal.get_si());
                                    good = prod == want;
                                }
                                if (!good)
                                    rep.violations.push_back(
                                        "coloured composition: " +
                                        to_text(p0) + " o " + to_text(q0));
                            } while (next_tuple(cp, gs));
                        } while (next_tuple(cq, gs));
                    }
    return rep;
}

// ---------------------------------------------------------------------
// Averaged composition, formal route
// ---------------------------------------------------------------------

namespace {

// Per-shape colouring tables: packed colour words (4 bits per point,
// first point in the highest nibble), the recolouring-class id of every
// colouring, and a verified class/orbit bijection.
struct ShapeData {
    int pts = 0, b = 0;
    uint32_t ncanon = 0;
    std::vector<uint32_t> word;   // colouring index -> packed word
    std::vector<uint32_t> canon;  // colouring index -> class id
    std::vector<uint32_t> rep;    // class id -> colouring index of rep
    bool orbit_ok = true;
};

uint32_t pack_word(const std::vector<int>& w) {
    uint32_t r = 0;
    for (int c : w) r = (r << 4) | (uint32_t)c;
    return r;
}

ShapeData build_shape(const Partition& p0, const FiniteGroup& G) {
    ShapeData d;
    d.pts = p0.points();
    d.b = p0.num_blocks();
    int gs = G.size();
    uint64_t n = pow64(gs, d.pts);
    d.word.resize(n);
    d.canon.resize(n);
    std::unordered_map<uint32_t, uint32_t> canon_ids;
    auto mult = G.mult_fn();
    auto inv = G.inv_fn();
    std::vector<int> w(d.pts, 0);
    uint64_t idx = 0;
    do {
        d.word[idx] = pack_word(w);
        ColouredPartition cano =
            canonical_e_form(ColouredPartition{p0, w}, mult, inv);
        uint32_t cw = pack_word(cano.colours);
        auto it = canon_ids.find(cw);
        if (it == canon_ids.end()) {
            it = canon_ids.emplace(cw, (uint32_t)canon_ids.size()).first;
            d.rep.push_back((uint32_t)idx);
        }
        d.canon[idx] = it->second;
        ++idx;
    } while (next_tuple(w, gs) && idx < n);
    d.ncanon = (uint32_t)canon_ids.size();
    // Orbit bijection: the blockwise-recolouring orbit of each class
    // representative is exactly the set of colourings in the class, hit
    // freely (gs^b distinct members per class).
    std::vector<int> wit(d.pts);
    for (uint32_t id = 0; id < d.ncanon && d.orbit_ok; ++id) {
        uint32_t wrep = d.word[d.rep[id]];
        for (int pt = 0; pt < d.pts; ++pt)
            wit[pt] = (int)((wrep >> (4 * (d.pts - 1 - pt))) & 15u);
        std::vector<uint32_t> orbit;
        std::vector<int> z(d.b, 0);
        do {
            std::vector<int> w2(d.pts);
            for (int pt = 0; pt < d.pts; ++pt)
                w2[pt] = G.mult(z[p0.block[pt]], wit[pt]);
            orbit.push_back(pack_word(w2));
        } while (next_tuple(z, gs));
        std::sort(orbit.begin(), orbit.end());
        if (std::adjacent_find(orbit.begin(), orbit.end()) != orbit.end())
            d.orbit_ok = false;
        // Every orbit member must canonicalize back to this class.
        uint64_t members = 0;
        for (uint64_t i = 0; i < n; ++i)
            if (d.canon[i] == id) ++members;
        if (members != orbit.size()) d.orbit_ok = false;
        for (uint32_t ow : orbit) {
            // Find the colouring index of the packed word (mixed radix
            // decode: nibbles are the colours themselves).
            uint64_t oi = 0;
            for (int pt = 0; pt < d.pts; ++pt)
                oi = oi * (uint64_t)G.size() +
                     ((ow >> (4 * (d.pts - 1 - pt))) & 15u);
            if (d.canon[oi] != id) {
                d.orbit_ok = false;
                break;
            }
        }
    }
    return d;
}

}  // namespace

VerifyReport verify_M_composition_formal(const FiniteGroup& G,
                                         int max_points) {
    VerifyReport rep;
    int gs = G.size();
    std::map<std::tuple<int, int, uint64_t>, ShapeData> cache;
    auto shape_of = [&](const Partition& p0) -> ShapeData& {
        auto key = std::make_tuple(p0.k, p0.l, p0.key());
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, build_shape(p0, G)).first;
            if (!it->second.orbit_ok)
                rep.violations.push_back("orbit bijection: " + to_text(p0));
        }
        return it->second;
    };
    struct Ent {
        uint64_t bucket;
        uint64_t key;
        bool operator<(const Ent& o) const {
            return bucket != o.bucket ? bucket < o.bucket : key < o.key;
        }
    };
    for (int l = 0; l <= max_points; ++l)
        for (int k = 0; k + l <= max_points; ++k)
            for (int m = 0; m + l <= max_points; ++m)
                for (auto& q0 : enumerate_family(Family::ALL, k, l))
                    for (auto& p0 : enumerate_family(Family::ALL, l, m)) {
                        ShapeData& sq = shape_of(q0);
                        ShapeData& sp = shape_of(p0);
                        auto comp = compose(p0, q0);
                        const Partition& r0 = comp.result;
                        int br = r0.num_blocks();
                        rep.cases += (long)sp.ncanon * sq.ncanon;
                        if (l == 0) {
                            // No inner row: the glued diagram is the
                            // disjoint union of the two diagrams, so the
                            // identity factorizes through the per-shape
                            // orbit bijections checked above. Verify the
                            // disjoint-union block structure.
                            std::vector<int> want = q0.block;
                            int bq = q0.num_blocks();
                            for (int v : p0.block) want.push_back(v + bq);
                            if (comp.loops != 0 || r0.block != want)
                                rep.violations.push_back(
                                    "stacked composition: " + to_text(p0) +
                                    " o " + to_text(q0));
                            continue;
                        }
                        // Bucket every matching colouring pair by the
                        // pair of recolouring classes; the glued diagram
                        // keeps the base r0, with the colours of q's
                        // upper and p's lower rows.
                        uint64_t np = pow64(gs, sp.pts),
                                 nq = pow64(gs, sq.pts);
                        std::unordered_map<uint32_t, std::vector<uint32_t>>
                            by_inner;
                        std::vector<uint32_t> q_outer(nq), p_outer(np),
                            p_inner(np);
                        for (uint64_t i = 0; i < nq; ++i) {
                            uint32_t w = sq.word[i];
                            uint32_t inner = w & ((1u << (4 * l)) - 1);
                            q_outer[i] = w >> (4 * l);
                            by_inner[inner].push_back((uint32_t)i);
                        }
                        for (uint64_t i = 0; i < np; ++i) {
                            uint32_t w = sp.word[i];
                            p_outer[i] = w & ((1u << (4 * m)) - 1);
                            p_inner[i] = w >> (4 * m);
                        }
                        std::vector<Ent> ents;
                        for (uint64_t cp = 0; cp < np; ++cp) {
                            auto it = by_inner.find(p_inner[cp]);
                            if (it == by_inner.end()) continue;
                            uint64_t b1 =
                                (uint64_t)sp.canon[cp] * sq.ncanon;
                            uint64_t lowbits = p_outer[cp];
                            for (uint32_t cq : it->second)
                                ents.push_back(
                                    {b1 + sq.canon[cq],
                                     ((uint64_t)q_outer[cq] << (4 * m)) |
                                         lowbits});
                        }
                        std::sort(ents.begin(), ents.end());
                        uint64_t want_count = pow64(gs, comp.loops);
                        uint64_t want_orbit = pow64(gs, br);
                        std::vector<uint64_t> keys, orbit;
                        std::vector<int> wit(k + m), z;
                        size_t i = 0;
                        while (i < ents.size()) {
                            size_t j = i;
                            uint64_t bucket = ents[i].bucket;
                            keys.clear();
                            bool bad = false;
                            while (j < ents.size() &&
                                   ents[j].bucket == bucket) {
                                size_t t = j;
                                while (t < ents.size() &&
                                       ents[t].bucket == bucket &&
                                       ents[t].key == ents[j].key)
                                    ++t;
                                if ((uint64_t)(t - j) != want_count)
                                    bad = true;
                                keys.push_back(ents[j].key);
                                j = t;
                            }
                            // The right-hand side is (|G|N)^{rl} times
                            // the averaged operator of the glued
                            // witness: its T-expansion is the free
                            // blockwise-recolouring orbit of the
                            // witness, each diagram with coefficient
                            // |G|^{rl} relative to the left side.
                            if ((uint64_t)keys.size() != want_orbit)
                                bad = true;
                            if (!bad) {
                                uint64_t w = keys[0];
                                for (int pt = 0; pt < k + m; ++pt)
                                    wit[pt] = (int)((w >> (4 * (k + m - 1 -
                                                                pt))) &
                                                    15u);
                                orbit.clear();
                                z.assign(br, 0);
                                do {
                                    uint64_t ow = 0;
                                    for (int pt = 0; pt < k + m; ++pt)
                                        ow = (ow << 4) |
                                             (uint64_t)G.mult(
                                                 z[r0.block[pt]], wit[pt]);
                                    orbit.push_back(ow);
                                } while (next_tuple(z, gs));
                                std::sort(orbit.begin(), orbit.end());
                                if (orbit != keys) bad = true;
                            }
                            if (bad)
                                rep.violations.push_back(
                                    "averaged composition: " + to_text(p0) +
                                    " o " + to_text(q0) + " classes " +
                                    std::to_string(bucket / sq.ncanon) +
                                    "," +
                                    std::to_string(bucket % sq.ncanon));
                            i = j;
                        }
                    }
    return rep;
}

VerifyReport verify_M_pair(const ColouredPartition& p,
                           const ColouredPartition& q, const FiniteGroup& G,
                           int N) {
    VerifyReport rep;
    if (q.base.l != p.base.k)
        throw std::invalid_argument("inner sizes differ");
    rep.cases = 1;
    auto prod = M_of(p, G, N).matmul(M_of(q, G, N));
    int gs = G.size();
    auto mult = G.mult_fn();
    bool found = false;
    ColouredPartition glued;
    int rl = 0;
    std::vector<int> x(p.base.num_blocks(), 0);
    do {
        ColouredPartition xp = act_blocks(p, x, mult);
        std::vector<int> y(q.base.num_blocks(), 0);
        do {
            ColouredPartition yq = act_blocks(q, y, mult);
            if (composable(xp, yq)) {
                auto comp = compose(xp, yq);
                glued = comp.result;
                rl = comp.loops;
                found = true;
            }
        } while (!found && next_tuple(y, gs));
    } while (!found && next_tuple(x, gs));
    bool good;
    if (!found) {
        good = prod.is_zero();
    } else {
        long scal = (long)pow64((uint64_t)(gs * N), rl);
        good = prod == M_of(glued, G, N).scaled(scal);
    }
    if (!good)
        rep.violations.push_back("averaged pair: " + to_text(p.base) + " o " +
                                 to_text(q.base));
    return rep;
}

VerifyReport verify_M_composition_direct(const FiniteGroup& G, int N,
                                         int max_points) {
    VerifyReport rep;
    int gs = G.size();
    auto mult = G.mult_fn();
    auto inv = G.inv_fn();
    for (int l = 0; l <= max_points; ++l)
        for (int k = 0; k + l <= max_points; ++k)
            for (int m = 0; m + l <= max_points; ++m)
                for (auto& q0 : enumerate_family(Family::ALL, k, l))
                    for (auto& p0 : enumerate_family(Family::ALL, l, m)) {
                        std::set<ColouredPartition> qreps, preps;
                        std::vector<int> w(k + l, 0);
                        do {
                            qreps.insert(canonical_e_form(
                                ColouredPartition{q0, w}, mult, inv));
                        } while (next_tuple(w, gs));
                        w.assign(l + m, 0);
                        do {
                            preps.insert(canonical_e_form(
                                ColouredPartition{p0, w}, mult, inv));
                        } while (next_tuple(w, gs));
                        for (auto& P : preps)
                            for (auto& Q : qreps) {
                                auto r = verify_M_pair(P, Q, G, N);
                                rep.cases += r.cases;
                                for (auto& v : r.violations)
                                    rep.violations.push_back(v);
                            }
                    }
    return rep;
}

// ---------------------------------------------------------------------
// Equivariance
// ---------------------------------------------------------------------

namespace {

// Multiply the colour of every factor at the given site by g (site < 0:
// every factor) in a flattened basis tuple.
uint64_t transform_tuple(uint64_t idx, int arity, int N, int gs, int site,
                         int g, const FiniteGroup& G) {
    uint64_t D = (uint64_t)N * gs, out = 0, mul = 1;
    for (int f = arity - 1; f >= 0; --f) {
        uint64_t fac = idx % D;
        idx /= D;
        int s = (int)(fac / gs), c = (int)(fac % gs);
        if (site < 0 || s == site) c = G.mult(g, c);
        out += ((uint64_t)s * gs + c) * mul;
        mul *= D;
    }
    return out;
}

uint64_t permute_sites(uint64_t idx, int arity, int N, int gs,
                       const std::vector<int>& sigma) {
    uint64_t D = (uint64_t)N * gs, out = 0, mul = 1;
    for (int f = arity - 1; f >= 0; --f) {
        uint64_t fac = idx % D;
        idx /= D;
        int s = (int)(fac / gs), c = (int)(fac % gs);
        out += ((uint64_t)sigma[s] * gs + c) * mul;
        mul *= D;
    }
    return out;
}

bool invariant_under(
    const OpMatrix<long>& M,
    const std::function<uint64_t(uint64_t, int)>& t) {  // (idx, arity)
    std::unordered_map<std::pair<uint64_t, uint64_t>, long, PairHash> vals;
    for (auto& e : M.ent) vals[{e.row, e.col}] = e.val;
    for (auto& e : M.ent) {
        auto it = vals.find({t(e.row, M.l), t(e.col, M.k)});
        if (it == vals.end() || it->second != e.val) return false;
    }
    return true;
}

}  // namespace

VerifyReport verify_equivariance(const CategorySpec& spec,
                                 const FiniteGroup& G, int N, int k, int l,
                                 bool check_permutations) {
    VerifyReport rep;
    int gs = G.size();
    auto mult = G.mult_fn();
    auto inv = G.inv_fn();
    std::set<ColouredPartition> reps;
    for (auto& p : spec.enumerate(k, l))
        reps.insert(canonical_e_form(p, mult, inv));
    for (auto& p : reps) {
        auto M = M_of(p, G, N);
        auto L = L_of(p, G, N);
        for (int g = 0; g < gs; ++g) {
            for (int i = 0; i < N; ++i) {
                ++rep.cases;
                auto t = [&](uint64_t idx, int arity) {
                    return transform_tuple(idx, arity, N, gs, i, g, G);
                };
                if (!invariant_under(M, t))
                    rep.violations.push_back("sitewise: " +
                                             to_text(p.base));
            }
            ++rep.cases;
            auto tg = [&](uint64_t idx, int arity) {
                return transform_tuple(idx, arity, N, gs, -1, g, G);
            };
            if (!invariant_under(L, tg))
                rep.violations.push_back("global: " + to_text(p.base));
        }
        if (check_permutations) {
            std::vector<int> sigma(N);
            for (int i = 0; i < N; ++i) sigma[i] = i;
            do {
                ++rep.cases;
                auto ts = [&](uint64_t idx, int arity) {
                    return permute_sites(idx, arity, N, gs, sigma);
                };
                if (!invariant_under(M, ts))
                    rep.violations.push_back("permutation: " +
                                             to_text(p.base));
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        }
    }
    return rep;
}

namespace {

// Reduced row echelon form over Q; returns a basis of the nullspace.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m,
                                        size_t cols) {
    size_t rows = m.size();
    std::vector<long> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rat d = m[r][c];
        for (size_t j = 0; j < cols; ++j) m[r][j] /= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back((long)c);
        ++r;
    }
    std::vector<char> is_pivot(cols, 0);
    for (long c : pivot_col) is_pivot[(size_t)c] = 1;
    std::vector<std::vector<Rat>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[(size_t)pivot_col[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

long equivariant_fixed_dim(const FiniteGroup& G, int N, int k, int l) {
    int gs = G.size();
    std::vector<OpMatrix<long>> fam;
    for (auto& p : enumerate_family(Family::ALL, k, l)) {
        std::vector<int> w(k + l, 0);
        do {
            fam.push_back(T_of(ColouredPartition{p, w}, N, gs));
        } while (next_tuple(w, gs));
    }
    size_t F = fam.size();
    uint64_t nrows = fam[0].rows(), ncols = fam[0].cols();
    size_t dim = (size_t)(nrows * ncols);
    std::vector<std::vector<long>> dense(F, std::vector<long>(dim, 0));
    for (size_t i = 0; i < F; ++i)
        for (auto& e : fam[i].ent)
            dense[i][(size_t)(e.row * ncols + e.col)] = e.val;
    // Constraint rows: conjugating by a sitewise translation permutes
    // matrix positions (r, c) -> (t(r), t(c)); fixed vectors satisfy
    // X[t(r)][t(c)] - X[r][c] = 0.
    std::vector<std::vector<Rat>> K;
    for (int i = 0; i < N; ++i)
        for (int g = 1; g < gs; ++g)
            for (uint64_t r = 0; r < nrows; ++r)
                for (uint64_t c = 0; c < ncols; ++c) {
                    uint64_t tr = transform_tuple(r, l, N, gs, i, g, G);
                    uint64_t tc = transform_tuple(c, k, N, gs, i, g, G);
                    std::vector<Rat> row(F, Rat(0));
                    bool nonzero = false;
                    for (size_t f = 0; f < F; ++f) {
                        long d = dense[f][(size_t)(tr * ncols + tc)] -
                                 dense[f][(size_t)(r * ncols + c)];
                        if (d != 0) {
                            row[f] = d;
                            nonzero = true;
                        }
                    }
                    if (nonzero) K.push_back(std::move(row));
                }
    std::vector<std::vector<Rat>> coeffs =
        K.empty() ? std::vector<std::vector<Rat>>() : nullspace(K, F);
    if (K.empty()) {
        coeffs.assign(F, std::vector<Rat>(F, Rat(0)));
        for (size_t i = 0; i < F; ++i) coeffs[i][i] = 1;
    }
    // The fixed subspace of the span is the image of the nullspace
    // under a |-> sum a_f T_f; its dimension is the rank of that image.
    std::vector<std::vector<Int>> img;
    for (auto& a : coeffs) {
        Int lcm(1);
        for (auto& v : a)
            lcm = lcm / gcd(lcm, Int(v.get_den())) * Int(v.get_den());
        std::vector<Int> rowv(dim, Int(0));
        for (size_t f = 0; f < F; ++f) {
            if (a[f] == 0) continue;
            Rat s = a[f] * Rat(lcm);
            Int si = s.get_num();
            for (auto& e : fam[f].ent)
                rowv[(size_t)(e.row * ncols + e.col)] += si * e.val;
        }
        img.push_back(std::move(rowv));
    }
    return bareiss_rank(img);
}

// ---------------------------------------------------------------------
// Boundary-character operators, formal route
// ---------------------------------------------------------------------

namespace {

// Exponent tables: chi(g) = zeta_m^{exps[chi][g]} with m the exponent
// of the (abelian, cyclic-product) group.
std::vector<std::vector<int>> character_exponents(const FiniteGroup& G) {
    if (!G.is_abelian() || G.orders().empty())
        throw std::invalid_argument(
            "character tables need an abelian cyclic-product group");
    int m = G.exponent();
    auto duals = dual_group(G);
    std::vector<std::vector<int>> exps(duals.size(),
                                       std::vector<int>(G.size(), 0));
    for (size_t c = 0; c < duals.size(); ++c)
        for (int g = 0; g < G.size(); ++g) {
            auto comps = G.components(g);
            long e = 0;
            for (size_t j = 0; j < comps.size(); ++j)
                e += (long)duals[c].exponents[j] * comps[j] *
                     (m / G.orders()[j]);
            exps[c][g] = (int)(e % m);
        }
    return exps;
}

// Compare two zeta_m power-count vectors as cyclotomic numbers.
bool counts_equal(const std::vector<long>& a, const std::vector<long>& b,
                  int m) {
    bool prime = m >= 2;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) prime = false;
    if (m == 1) return a[0] == b[0];
    if (prime) {
        // 1 + zeta + ... + zeta^{m-1} = 0 is the only relation.
        long diff0 = a[0] - b[0];
        for (int j = 1; j < m; ++j)
            if (a[j] - b[j] != diff0) return false;
        return true;
    }
    Cyclo s;
    for (int j = 0; j < m; ++j)
        s = s + Cyclo::zeta(m, j) * Cyclo(Rat(a[j] - b[j]));
    return s.is_zero();
}

std::vector<long> cyc_conv(const std::vector<long>& a,
                           const std::vector<long>& b, int m) {
    std::vector<long> r(m, 0);
    for (int i = 0; i < m; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < m; ++j)
            if (b[j]) r[(i + j) % m] += a[i] * b[j];
    }
    return r;
}

}  // namespace

VerifyReport verify_F_expansion(const FiniteGroup& G, int max_points) {
    VerifyReport rep;
    int gs = G.size(), m = G.exponent();
    auto exps = character_exponents(G);
    auto duals = dual_group(G);
    for (int k = 0; k <= max_points; ++k)
        for (int l = 0; l + k <= max_points; ++l)
            for (auto& p0 : enumerate_family(Family::ALL, k, l)) {
                int b = p0.num_blocks();
                auto bpts = p0.block_points();
                std::vector<int> tup(k + l, 0);  // character index per point
                do {
                    std::vector<Character> chis, rhos;
                    for (int j = 0; j < k; ++j)
                        chis.push_back(duals[tup[j]]);
                    for (int j = 0; j < l; ++j)
                        rhos.push_back(duals[tup[k + j]]);
                    bool adm = is_admissible(p0, chis, rhos, G);
                    // Point-wise exponent tables: conjugate on the
                    // lower row.
                    std::vector<std::vector<int>> f(k + l);
                    for (int pt = 0; pt < k + l; ++pt) {
                        f[pt] = exps[tup[pt]];
                        if (pt >= k)
                            for (auto& v : f[pt]) v = (m - v) % m;
                    }
                    ++rep.cases;
                    bool bad = false;
                    std::vector<int> c(k + l, 0);
                    do {
                        // Coefficient of the diagram coloured by c in
                        // the T-expansion: sum over blockwise
                        // recolourings, factorized per block.
                        std::vector<long> w(m, 0);
                        w[0] = 1;
                        for (int blk = 0; blk < b; ++blk) {
                            std::vector<long> s(m, 0);
                            for (int y = 0; y < gs; ++y) {
                                int yi = G.inverse(y);
                                long a = 0;
                                for (int pt : bpts[blk])
                                    a += f[pt][G.mult(yi, c[pt])];
                                ++s[(int)(a % m)];
                            }
                            w = cyc_conv(w, s, m);
                        }
                        std::vector<long> want(m, 0);
                        if (adm) {
                            long a0 = 0;
                            for (int pt = 0; pt < k + l; ++pt)
                                a0 += f[pt][c[pt]];
                            want[(int)(a0 % m)] =
                                (long)pow64((uint64_t)gs, b);
                        }
                        if (!counts_equal(w, want, m)) bad = true;
                    } while (!bad && next_tuple(c, gs));
                    if (bad)
                        rep.violations.push_back(
                            "expansion: " + to_text(p0) +
                            (adm ? " (admissible)" : " (inadmissible)"));
                } while (next_tuple(tup, gs));
            }
    return rep;
}

VerifyReport verify_F_composition_formal(const FiniteGroup& G,
                                         int max_points) {
    // Given the verified T-expansion F_p = |G|^{b(p)} sum_c chi
    // rho-bar(c) T_c for admissible tuples (verify_F_expansion) and the
    // coloured diagram composition rule (verify_T_coloured /
    // verify_M_composition_formal), the composition identity reduces,
    // coefficient by coefficient on glued diagrams, to
    //   prod_{i<l} sum_{v in G} chi_i(v) conj(rho'_i(v))
    //     = |G|^l delta(chi, rho') * [glued pair admissible],
    // with the |G| exponents matching because b(p)+b(q)-b(pq)+l+b(pq)
    // = b(p)+b(q)+l. That reduction is what is checked here, for every
    // shape pair and every pair of admissible tuples.
    VerifyReport rep;
    int gs = G.size(), m = G.exponent();
    auto exps = character_exponents(G);
    auto duals = dual_group(G);
    auto admissible_tuples = [&](const Partition& p0) {
        std::vector<std::vector<int>> out;
        std::vector<int> tup(p0.points(), 0);
        do {
            std::vector<Character> chis, rhos;
            for (int j = 0; j < p0.k; ++j) chis.push_back(duals[tup[j]]);
            for (int j = 0; j < p0.l; ++j)
                rhos.push_back(duals[tup[p0.k + j]]);
            if (is_admissible(p0, chis, rhos, G)) out.push_back(tup);
        } while (next_tuple(tup, gs));
        return out;
    };
    for (int l = 0; l <= max_points; ++l)
        for (int k = 0; k + l <= max_points; ++k)
            for (int m2 = 0; m2 + l <= max_points; ++m2)
                for (auto& q0 : enumerate_family(Family::ALL, k, l))
                    for (auto& p0 : enumerate_family(Family::ALL, l, m2)) {
                        auto comp = compose(p0, q0);
                        auto tp = admissible_tuples(p0);
                        auto tq = admissible_tuples(q0);
                        for (auto& a : tp)
                            for (auto& b : tq) {
                                ++rep.cases;
                                // Inner tuples: chi of p (upper, first l
                                // entries of a), rho' of q (lower, last
                                // l entries of b).
                                bool delta = true;
                                for (int i = 0; i < l; ++i)
                                    if (a[i] != b[k + i]) delta = false;
                                std::vector<long> S(m, 0);
                                S[0] = 1;
                                for (int i = 0; i < l; ++i) {
                                    std::vector<long> s(m, 0);
                                    for (int v = 0; v < gs; ++v) {
                                        int e = (exps[a[i]][v] + m -
                                                 exps[b[k + i]][v]) %
                                                m;
                                        ++s[e];
                                    }
                                    S = cyc_conv(S, s, m);
                                }
                                std::vector<long> want(m, 0);
                                if (delta) {
                                    std::vector<Character> chis, rhos;
                                    for (int j = 0; j < k; ++j)
                                        chis.push_back(duals[b[j]]);
                                    for (int j = 0; j < m2; ++j)
                                        rhos.push_back(duals[a[l + j]]);
                                    // delta holding but the glued pair
                                    // inadmissible would be a genuine
                                    // violation of the identity.
                                    if (is_admissible(comp.result, chis,
                                                      rhos, G))
                                        want[0] =
                                            (long)pow64((uint64_t)gs, l);
                                }
                                if (!counts_equal(S, want, m))
                                    rep.violations.push_back(
                                        "boundary composition: " +
                                        to_text(p0) + " o " + to_text(q0));
                            }
                    }
    return rep;
}

VerifyReport verify_F_composition_direct(const FiniteGroup& G, int N,
                                         int max_points) {
    VerifyReport rep;
    int gs = G.size();
    auto duals = dual_group(G);
    auto admissible_tuples = [&](const Partition& p0) {
        std::vector<std::pair<std::vector<Character>,
                              std::vector<Character>>> out;
        std::vector<int> tup(p0.points(), 0);
        do {
            std::vector<Character> chis, rhos;
            for (int j = 0; j < p0.k; ++j) chis.push_back(duals[tup[j]]);
            for (int j = 0; j < p0.l; ++j)
                rhos.push_back(duals[tup[p0.k + j]]);
            if (is_admissible(p0, chis, rhos, G))
                out.push_back({chis, rhos});
        } while (next_tuple(tup, gs));
        return out;
    };
    for (int l = 0; l <= max_points; ++l)
        for (int k = 0; k + l <= max_points; ++k)
            for (int m = 0; m + l <= max_points; ++m) {
                if (k + 2 * l + m > max_points) continue;
                for (auto& q0 : enumerate_family(Family::ALL, k, l))
                    for (auto& p0 : enumerate_family(Family::ALL, l, m)) {
                        auto comp = compose(p0, q0);
                        int bp = p0.num_blocks(), bq = q0.num_blocks(),
                            br = comp.result.num_blocks();
                        Cyclo scal(Rat(int_pow(gs, bp + bq - br + l) *
                                       int_pow(N, comp.loops)));
                        for (auto& [chis, rhos] : admissible_tuples(p0))
                            for (auto& [chis2, rhos2] :
                                 admissible_tuples(q0)) {
                                ++rep.cases;
                                auto prod =
                                    F_of(p0, chis, rhos, G, N)
                                        .matmul(
                                            F_of(q0, chis2, rhos2, G, N));
                                bool delta = chis == rhos2;
                                bool good;
                                if (!delta) {
                                    good = prod.is_zero();
                                } else {
                                    auto want = F_of(comp.result, chis2,
                                                     rhos, G, N)
                                                    .scaled(scal);
                                    good = prod == want;
                                }
                                if (!good)
                                    rep.violations.push_back(
                                        "boundary composition (matrix): " +
                                        to_text(p0) + " o " + to_text(q0));
                            }
                    }
            }
    return rep;
}

VerifyReport verify_P(const FiniteGroup& G, int N) {
    VerifyReport rep;
    auto duals = dual_group(G);
    std::vector<OpMatrix<Cyclo>> Ps;
    for (auto& chi : duals) Ps.push_back(P_of(chi, G, N));
    auto id = OpMatrix<Cyclo>::identity(1, N, G.size());
    OpMatrix<Cyclo> sum = Ps[0];
    for (size_t i = 1; i < Ps.size(); ++i) sum = sum + Ps[i];
    ++rep.cases;
    if (!(sum == id)) rep.violations.push_back("projections do not sum to 1");
    for (size_t i = 0; i < Ps.size(); ++i) {
        ++rep.cases;
        if (!(Ps[i].matmul(Ps[i]) == Ps[i]))
            rep.violations.push_back("not idempotent: " +
                                     character_name(duals[i]));
        ++rep.cases;
        if (!(Ps[i].adjoint() == Ps[i]))
            rep.violations.push_back("not self-adjoint: " +
                                     character_name(duals[i]));
        for (size_t j = i + 1; j < Ps.size(); ++j) {
            ++rep.cases;
            if (!Ps[i].matmul(Ps[j]).is_zero())
                rep.violations.push_back("not orthogonal: " +
                                         character_name(duals[i]) + "," +
                                         character_name(duals[j]));
        }
    }
    return rep;
}

}  // namespace wreath
