#include "wreath/operators.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "wreath/rank.hpp"

namespace wreath {

namespace {

// Iterate over all tuples in {0..base-1}^len; returns false when done.
bool next_tuple(std::vector<int>& t, int base) {
    for (int i = (int)t.size() - 1; i >= 0; --i) {
        if (++t[i] < base) return true;
        t[i] = 0;
    }
    return false;
}

OpMatrix<long> T_impl(const Partition& p, const std::vector<int>* colours,
                      int N, int A) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    OpMatrix<long> m;
    m.k = p.k;
    m.l = p.l;
    m.N = N;
    m.A = A;
    int b = p.num_blocks();
    auto colour_of = [&](int pt) { return colours ? (*colours)[pt] : 0; };
    std::vector<int> site(b, 0);
    do {
        uint64_t col = 0, row = 0;
        for (int u = 0; u < p.k; ++u)
            col = col * (uint64_t)(N * A) +
                  (uint64_t)(site[p.block[u]] * A + colour_of(u));
        for (int j = 0; j < p.l; ++j)
            row = row * (uint64_t)(N * A) +
                  (uint64_t)(site[p.block[p.k + j]] * A + colour_of(p.k + j));
        m.ent.push_back({row, col, 1L});
    } while (next_tuple(site, N));
    m.normalize();
    return m;
}

}  // namespace

OpMatrix<long> T_of(const Partition& p, int N) { return T_impl(p, nullptr, N, 1); }

OpMatrix<long> T_of(const ColouredPartition& p, int N, int num_colours) {
    return T_impl(p.base, &p.colours, N, num_colours);
}

OpMatrix<long> L_of(const ColouredPartition& p, const FiniteGroup& G, int N) {
    OpMatrix<long> m;
    bool first = true;
    for (int g = 0; g < G.size(); ++g) {
        ColouredPartition q = p;
        for (auto& c : q.colours) c = G.mult(g, c);
        OpMatrix<long> t = T_of(q, N, G.size());
        if (first) {
            m = t;
            first = false;
        } else {
            m.ent.insert(m.ent.end(), t.ent.begin(), t.ent.end());
        }
    }
    m.normalize();
    return m;
}

OpMatrix<long> M_of(const ColouredPartition& p, const FiniteGroup& G, int N) {
    int b = p.base.num_blocks();
    OpMatrix<long> m;
    std::vector<int> x(b, 0);
    bool first = true;
    do {
        ColouredPartition q = act_blocks(p, x, G.mult_fn());
        OpMatrix<long> t = T_of(q, N, G.size());
        if (first) {
            m = t;
            first = false;
        } else {
            m.ent.insert(m.ent.end(), t.ent.begin(), t.ent.end());
        }
    } while (next_tuple(x, G.size()));
    m.normalize();
    return m;
}

OpMatrix<long> rho_full(const FiniteGroup& G, int N, int g) {
    OpMatrix<long> m;
    m.k = m.l = 1;
    m.N = N;
    m.A = G.size();
    for (int i = 0; i < N; ++i)
        for (int h = 0; h < G.size(); ++h)
            m.ent.push_back({(uint64_t)(i * G.size() + G.mult(g, h)),
                             (uint64_t)(i * G.size() + h), 1L});
    m.normalize();
    return m;
}

OpMatrix<long> rho_site(const FiniteGroup& G, int N, int site, int g) {
    if (site < 0 || site >= N) throw std::out_of_range("site index");
    OpMatrix<long> m;
    m.k = m.l = 1;
    m.N = N;
    m.A = G.size();
    for (int i = 0; i < N; ++i)
        for (int h = 0; h < G.size(); ++h) {
            int h2 = (i == site) ? G.mult(g, h) : h;
            m.ent.push_back({(uint64_t)(i * G.size() + h2),
                             (uint64_t)(i * G.size() + h), 1L});
        }
    m.normalize();
    return m;
}

OpMatrix<long> pi_perm(const FiniteGroup& G, int N,
                       const std::vector<int>& sigma) {
    if ((int)sigma.size() != N) throw std::out_of_range("permutation size");
    OpMatrix<long> m;
    m.k = m.l = 1;
    m.N = N;
    m.A = G.size();
    for (int i = 0; i < N; ++i)
        for (int h = 0; h < G.size(); ++h)
            m.ent.push_back({(uint64_t)(sigma[i] * G.size() + h),
                             (uint64_t)(i * G.size() + h), 1L});
    m.normalize();
    return m;
}

namespace {

// M_of of the identity partition with upper colour g, lower the identity.
OpMatrix<long> M_translate(const FiniteGroup& G, int N, int g) {
    ColouredPartition p = colour_rows(identity_partition(), {g},
                                      {G.identity()});
    return M_of(p, G, N);
}

}  // namespace

OpMatrix<Cyclo> P_of(const Character& chi, const FiniteGroup& G, int N) {
    if (!G.is_abelian())
        throw std::invalid_argument("character projection needs abelian G");
    OpMatrix<Cyclo> m;
    bool first = true;
    Cyclo scale = Cyclo(Rat(1, G.size()));
    for (int g = 0; g < G.size(); ++g) {
        OpMatrix<Cyclo> t =
            M_translate(G, N, g).cast<Cyclo>().scaled(evaluate(chi, G, g) *
                                                      scale);
        if (first) {
            m = t;
            first = false;
        } else {
            m = m + t;
        }
    }
    return m;
}

OpMatrix<Cyclo> P_nonabelian(
    const std::vector<std::vector<std::vector<Cyclo>>>& pi, int i,
    const FiniteGroup& G, int N) {
    if ((int)pi.size() != G.size())
        throw std::invalid_argument("one matrix per group element required");
    size_t d = pi[0].size();
    for (auto& m : pi)
        if (m.size() != d || m[0].size() != d)
            throw std::invalid_argument("representation matrices not square");
    // Validate multiplicativity pi(g) pi(h) = pi(gh).
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h)
            for (size_t r = 0; r < d; ++r)
                for (size_t c = 0; c < d; ++c) {
                    Cyclo s;
                    for (size_t t = 0; t < d; ++t)
                        s = s + pi[g][r][t] * pi[h][t][c];
                    if (!(s == pi[G.mult(g, h)][r][c]))
                        throw std::invalid_argument(
                            "matrices do not form a representation");
                }
    if (i < 0 || (size_t)i >= d) throw std::out_of_range("diagonal index");
    // The diagonal-coefficient average is idempotent with the dimension
    // factor d/|G| (Schur orthogonality), matching the abelian case d=1.
    OpMatrix<Cyclo> m;
    bool first = true;
    Cyclo scale = Cyclo(Rat((long)d, G.size()));
    for (int g = 0; g < G.size(); ++g) {
        OpMatrix<Cyclo> t =
            M_translate(G, N, g).cast<Cyclo>().scaled(pi[g][i][i] * scale);
        if (first) {
            m = t;
            first = false;
        } else {
            m = m + t;
        }
    }
    return m;
}

// ---- boundary-character operators ---------------------------------------

bool is_admissible(const Partition& p, const std::vector<Character>& chis,
                   const std::vector<Character>& rhos, const FiniteGroup& G) {
    if (!G.is_abelian())
        throw std::invalid_argument("boundary characters need abelian G");
    if ((int)chis.size() != p.k || (int)rhos.size() != p.l)
        throw std::invalid_argument("tuple lengths must match the rows");
    int b = p.num_blocks();
    size_t r = dual_group(G)[0].exponents.size();
    for (int blk = 0; blk < b; ++blk) {
        Character up{std::vector<int>(r, 0)}, low{std::vector<int>(r, 0)};
        for (int pt = 0; pt < p.points(); ++pt) {
            if (p.block[pt] != blk) continue;
            if (pt < p.k)
                up = mult_characters(up, chis[pt], G);
            else
                low = mult_characters(low, rhos[pt - p.k], G);
        }
        if (!(up == low)) return false;
    }
    return true;
}

OpMatrix<Cyclo> F_of(const Partition& p, const std::vector<Character>& chis,
                     const std::vector<Character>& rhos, const FiniteGroup& G,
                     int N, bool normalized) {
    if (!G.is_abelian())
        throw std::invalid_argument("boundary characters need abelian G");
    if ((int)chis.size() != p.k || (int)rhos.size() != p.l)
        throw std::invalid_argument("tuple lengths must match the rows");
    OpMatrix<Cyclo> m;
    m.k = p.k;
    m.l = p.l;
    m.N = N;
    m.A = G.size();
    std::vector<int> g(p.k, 0);
    do {
        std::vector<int> h(p.l, 0);
        do {
            Cyclo w(Rat(1));
            for (int j = 0; j < p.k; ++j)
                w = w * evaluate(chis[j], G, g[j]);
            for (int j = 0; j < p.l; ++j)
                w = w * evaluate(rhos[j], G, h[j]).conj();
            OpMatrix<long> t = M_of(colour_rows(p, g, h), G, N);
            for (auto& e : t.ent)
                m.ent.push_back({e.row, e.col, w * Cyclo(Rat(e.val))});
        } while (next_tuple(h, G.size()));
    } while (next_tuple(g, G.size()));
    m.normalize();
    if (normalized) {
        // Scale by |G|^{(k+l)/2 - b}; an odd k+l leaves one half power,
        // carried symbolically on the sqrt tag.
        int twice = p.k + p.l - 2 * p.num_blocks();
        int whole = twice >= 0 ? twice / 2 : -((-twice + 1) / 2);
        Rat s(1);
        Rat base((long)G.size());
        for (int i = 0; i < whole; ++i) s *= base;
        for (int i = 0; i > whole; --i) s /= base;
        m = m.scaled(Cyclo(s));
        if (((twice % 2) + 2) % 2 == 1) {
            m.sqrt_tag = 1;
            m.sqrt_base = G.size();
        }
    }
    return m;
}

// ---- exact ranks ----------------------------------------------------------

namespace {

template <class S>
Int dot_int(const OpMatrix<S>& a, const OpMatrix<S>& b);

template <>
Int dot_int(const OpMatrix<long>& a, const OpMatrix<long>& b) {
    Int s(0);
    size_t i = 0, j = 0;
    while (i < a.ent.size() && j < b.ent.size()) {
        auto ka = std::make_pair(a.ent[i].row, a.ent[i].col);
        auto kb = std::make_pair(b.ent[j].row, b.ent[j].col);
        if (ka < kb)
            ++i;
        else if (kb < ka)
            ++j;
        else {
            s += Int(a.ent[i].val) * Int(b.ent[j].val);
            ++i;
            ++j;
        }
    }
    return s;
}

}  // namespace

long span_rank(const std::vector<OpMatrix<long>>& ops) {
    size_t n = ops.size();
    for (size_t i = 1; i < n; ++i)
        if (!ops[i].same_shape(ops[0]))
            throw std::invalid_argument("operator shapes differ");
    std::vector<std::vector<Int>> gram(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            gram[i][j] = gram[j][i] = dot_int(ops[i], ops[j]);
    return gram_rank(gram);
}

long span_rank(const std::vector<OpMatrix<Rat>>& ops) {
    // Row scaling does not change the rank: clear denominators.
    std::vector<OpMatrix<long>> scaled;
    for (auto& op : ops) {
        Int lcm(1);
        for (auto& e : op.ent)
            lcm = lcm / gcd(lcm, Int(e.val.get_den())) * Int(e.val.get_den());
        OpMatrix<long> m;
        m.k = op.k;
        m.l = op.l;
        m.N = op.N;
        m.A = op.A;
        for (auto& e : op.ent) {
            Rat v = e.val * Rat(lcm);
            m.ent.push_back({e.row, e.col, (long)v.get_num().get_si()});
        }
        scaled.push_back(std::move(m));
    }
    return span_rank(scaled);
}

long span_rank(const std::vector<OpMatrix<Cyclo>>& ops) {
    size_t n = ops.size();
    for (size_t i = 1; i < n; ++i)
        if (!ops[i].same_shape(ops[0]))
            throw std::invalid_argument("operator shapes differ");
    std::vector<std::vector<Cyclo>> gram(n, std::vector<Cyclo>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Cyclo s;
            size_t a = 0, b = 0;
            while (a < ops[i].ent.size() && b < ops[j].ent.size()) {
                auto ka = std::make_pair(ops[i].ent[a].row, ops[i].ent[a].col);
                auto kb = std::make_pair(ops[j].ent[b].row, ops[j].ent[b].col);
                if (ka < kb)
                    ++a;
                else if (kb < ka)
                    ++b;
                else {
                    s = s + ops[i].ent[a].val * ops[j].ent[b].val.conj();
                    ++a;
                    ++b;
                }
            }
            gram[i][j] = s;
        }
    return cyclo_rank(std::move(gram));
}

namespace {

// Number of blocks of the join p v q on the same point set.
int join_blocks(const Partition& p, const Partition& q) {
    int n = p.points();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    std::vector<int> first_p(n, -1), first_q(n, -1);
    for (int i = 0; i < n; ++i) {
        int bp = p.block[i], bq = q.block[i];
        if (first_p[bp] < 0)
            first_p[bp] = i;
        else
            unite(i, first_p[bp]);
        if (first_q[bq] < 0)
            first_q[bq] = i;
        else
            unite(i, first_q[bq]);
    }
    int blocks = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++blocks;
    return blocks;
}

Int int_pow(long base, int e) {
    Int r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

long span_rank_T_family(const std::vector<ColouredPartition>& ps, int N) {
    size_t n = ps.size();
    std::vector<std::vector<Int>> gram(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Int v(0);
            if (ps[i].colours == ps[j].colours)
                v = int_pow(N, join_blocks(ps[i].base, ps[j].base));
            gram[i][j] = gram[j][i] = v;
        }
    return gram_rank(gram);
}

long span_rank_T_family(const std::vector<Partition>& ps, int N) {
    std::vector<ColouredPartition> cs;
    cs.reserve(ps.size());
    for (auto& p : ps) cs.push_back(colour_all(p));
    return span_rank_T_family(cs, N);
}

long span_rank_M_family(const std::vector<ColouredPartition>& ps,
                        const FiniteGroup& G, int N) {
    size_t n = ps.size();
    // Colour words reachable by blockwise recolouring, packed 4 bits per
    // point (group sizes <= 16, points <= 15).
    auto word_set = [&](const ColouredPartition& p) {
        std::set<uint64_t> words;
        std::vector<int> x(p.base.num_blocks(), 0);
        do {
            ColouredPartition q = act_blocks(p, x, G.mult_fn());
            uint64_t w = 0;
            for (int c : q.colours) w = (w << 4) | (uint64_t)c;
            words.insert(w);
        } while (next_tuple(x, G.size()));
        return words;
    };
    std::vector<std::set<uint64_t>> words(n);
    for (size_t i = 0; i < n; ++i) words[i] = word_set(ps[i]);
    std::vector<std::vector<Int>> gram(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            long matches = 0;
            for (uint64_t w : words[i]) matches += words[j].count(w);
            gram[i][j] = gram[j][i] =
                Int(matches) * int_pow(N, join_blocks(ps[i].base, ps[j].base));
        }
    return gram_rank(gram);
}

long dim_mor_T(const CategorySpec& spec, int N,
               const std::vector<int>& upper_word,
               const std::vector<int>& lower_word) {
    return span_rank_T_family(spec.enumerate_boundary(upper_word, lower_word),
                              N);
}

long dim_mor_M(const CategorySpec& spec, const FiniteGroup& G, int N, int k,
               int l) {
    std::set<ColouredPartition> reps;
    for (auto& p : spec.enumerate(k, l))
        reps.insert(canonical_e_form(p, G.mult_fn(), G.inv_fn()));
    std::vector<ColouredPartition> family(reps.begin(), reps.end());
    return span_rank_M_family(family, G, N);
}

long dim_mor_F(Family base, const FiniteGroup& G, int N,
               const std::vector<Character>& chis,
               const std::vector<Character>& rhos) {
    std::vector<OpMatrix<Cyclo>> fam;
    for (auto& p :
         enumerate_family(base, (int)chis.size(), (int)rhos.size())) {
        if (!is_admissible(p, chis, rhos, G)) continue;
        fam.push_back(F_of(p, chis, rhos, G, N));
    }
    if (fam.empty()) return 0;
    return span_rank(fam);
}

}  // namespace wreath
