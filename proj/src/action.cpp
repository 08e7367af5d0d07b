#include "wreath/action.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "wreath/operators.hpp"

namespace wreath {

namespace {

bool next_tuple(std::vector<int>& t, int base) {
    for (int i = (int)t.size() - 1; i >= 0; --i) {
        if (++t[(size_t)i] < base) return true;
        t[(size_t)i] = 0;
    }
    return false;
}

long pow_long(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

// Incremental row-echelon basis over the rationals for exact span
// membership tests.
class SpanBasis {
  public:
    // Reduces v against the basis in place; true iff v reduced to zero.
    bool reduce(std::vector<Rat>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rat& c = v[pivot_[r]];
            if (c == 0) continue;
            Rat f = c;
            for (size_t j = pivot_[r]; j < v.size(); ++j)
                v[j] -= f * rows_[r][j];
        }
        for (const Rat& x : v)
            if (x != 0) return false;
        return true;
    }

    void add(std::vector<Rat> v) {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rat& c = v[pivot_[r]];
            if (c == 0) continue;
            Rat f = c;
            for (size_t j = pivot_[r]; j < v.size(); ++j)
                v[j] -= f * rows_[r][j];
        }
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                Rat inv = v[j];
                for (size_t t = j; t < v.size(); ++t) v[t] /= inv;
                pivot_.push_back(j);
                rows_.push_back(std::move(v));
                return;
            }
    }

    bool contains(std::vector<Rat> v) const { return reduce(v); }

  private:
    std::vector<std::vector<Rat>> rows_;
    std::vector<size_t> pivot_;
};

std::vector<Rat> vectorize(const OpMatrix<long>& m) {
    std::vector<Rat> v((size_t)(m.rows() * m.cols()), Rat(0));
    for (const auto& e : m.ent)
        v[(size_t)(e.row * (uint64_t)m.cols() + e.col)] = Rat(e.val);
    return v;
}

}  // namespace

GroupAction::GroupAction(FiniteGroup G, int set_size,
                         std::vector<std::vector<int>> map)
    : G_(std::move(G)), nx_(set_size), map_(std::move(map)) {
    if (nx_ < 1) throw std::invalid_argument("empty set");
    if ((int)map_.size() != G_.size())
        throw std::invalid_argument("action table has wrong group dimension");
    for (const auto& row : map_) {
        if ((int)row.size() != nx_)
            throw std::invalid_argument("action table has wrong set dimension");
        std::vector<bool> seen((size_t)nx_, false);
        for (int y : row) {
            if (y < 0 || y >= nx_ || seen[(size_t)y])
                throw std::invalid_argument("action row is not a permutation");
            seen[(size_t)y] = true;
        }
    }
    for (int x = 0; x < nx_; ++x)
        if (act(G_.identity(), x) != x)
            throw std::invalid_argument("identity must act trivially");
    for (int g = 0; g < G_.size(); ++g)
        for (int h = 0; h < G_.size(); ++h)
            for (int x = 0; x < nx_; ++x)
                if (act(G_.mult(g, h), x) != act(g, act(h, x)))
                    throw std::invalid_argument(
                        "action is not compatible with the group law");
    // Orbits.
    orbit_of_.assign((size_t)nx_, -1);
    for (int x = 0; x < nx_; ++x) {
        if (orbit_of_[(size_t)x] >= 0) continue;
        int id = (int)orbits_.size();
        std::vector<int> orbit;
        for (int g = 0; g < G_.size(); ++g) {
            int y = act(g, x);
            if (orbit_of_[(size_t)y] < 0) {
                orbit_of_[(size_t)y] = id;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits_.push_back(std::move(orbit));
    }
    for (int g = 0; g < G_.size(); ++g) {
        bool fixes_all = true;
        for (int x = 0; x < nx_ && fixes_all; ++x) fixes_all = act(g, x) == x;
        if (fixes_all) kernel_.push_back(g);
    }
}

GroupAction GroupAction::trivial(FiniteGroup G, int set_size) {
    std::vector<int> row((size_t)set_size);
    for (int x = 0; x < set_size; ++x) row[(size_t)x] = x;
    std::vector<std::vector<int>> map((size_t)G.size(), row);
    return GroupAction(std::move(G), set_size, std::move(map));
}

GroupAction GroupAction::left_translation(const FiniteGroup& G) {
    std::vector<std::vector<int>> map((size_t)G.size(),
                                      std::vector<int>((size_t)G.size()));
    for (int g = 0; g < G.size(); ++g)
        for (int x = 0; x < G.size(); ++x)
            map[(size_t)g][(size_t)x] = G.mult(g, x);
    return GroupAction(G, G.size(), std::move(map));
}

std::vector<int> GroupAction::stabilizer(int x) const {
    if (x < 0 || x >= nx_) throw std::out_of_range("point outside the set");
    std::vector<int> st;
    for (int g = 0; g < G_.size(); ++g)
        if (act(g, x) == x) st.push_back(g);
    return st;
}

bool GroupAction::is_trivial() const {
    return (int)kernel_.size() == G_.size();
}

bool GroupAction::is_free() const {
    for (int x = 0; x < nx_; ++x)
        if (stabilizer(x).size() != 1) return false;
    return true;
}

const char* action_class_name(ActionClass c) {
    switch (c) {
        case ActionClass::Trivial: return "trivial";
        case ActionClass::Free: return "free";
        case ActionClass::Transitive: return "transitive";
        default: return "general";
    }
}

ActionClass classify(const GroupAction& a) {
    if (a.is_trivial()) return ActionClass::Trivial;
    if (a.is_free()) return ActionClass::Free;
    if (a.is_transitive()) return ActionClass::Transitive;
    return ActionClass::General;
}

OpMatrix<long> M_alpha_of(const ColouredPartition& p, const GroupAction& a,
                          int N) {
    for (int c : p.colours)
        if (c < 0 || c >= a.set_size())
            throw std::invalid_argument("colour outside the acted-on set");
    GroupMult move = [&a](int g, int x) { return a.act(g, x); };
    int b = p.base.num_blocks();
    OpMatrix<long> out;
    bool first = true;
    std::vector<int> tup((size_t)std::max(b, 1), 0);
    std::vector<int> x((size_t)b, 0);
    do {
        for (int i = 0; i < b; ++i) x[(size_t)i] = tup[(size_t)i];
        auto t = T_of(act_blocks(p, x, move), N, a.set_size());
        if (first) {
            out = t;
            first = false;
        } else {
            out.ent.insert(out.ent.end(), t.ent.begin(), t.ent.end());
        }
    } while (b > 0 && next_tuple(tup, a.group().size()));
    out.normalize();
    return out;
}

long span_rank_alpha(Family base, const GroupAction& a, int N, int n,
                     int fixed_colour) {
    std::vector<OpMatrix<long>> ops;
    std::set<std::vector<long>> seen;
    for (const auto& p : enumerate_family(base, 0, n)) {
        std::vector<int> w((size_t)n, 0);
        do {
            if (fixed_colour >= 0) {
                bool constant = true;
                for (int c : w) constant = constant && c == fixed_colour;
                if (!constant) continue;
            }
            auto m = M_alpha_of(ColouredPartition{p, w}, a, N);
            std::vector<long> key;
            key.reserve(m.ent.size() * 3);
            for (const auto& e : m.ent) {
                key.push_back((long)e.row);
                key.push_back((long)e.col);
                key.push_back(e.val);
            }
            if (seen.insert(std::move(key)).second) ops.push_back(std::move(m));
        } while (next_tuple(w, a.set_size()));
    }
    return span_rank(ops);
}

VerifyReport closure_check_alpha(Family base, const GroupAction& a, int N,
                                 int max_points) {
    VerifyReport rep;
    using Shape = std::pair<int, int>;
    std::map<Shape, std::vector<OpMatrix<long>>> ops;
    std::map<Shape, SpanBasis> basis;
    for (int k = 0; k <= max_points; ++k)
        for (int l = 0; k + l <= max_points; ++l) {
            auto& list = ops[{k, l}];
            std::set<std::vector<Rat>> seen;
            for (const auto& p : enumerate_family(base, k, l)) {
                std::vector<int> w((size_t)(k + l), 0);
                do {
                    auto m = M_alpha_of(ColouredPartition{p, w}, a, N);
                    auto v = vectorize(m);
                    if (seen.insert(v).second) {
                        basis[{k, l}].add(std::move(v));
                        list.push_back(std::move(m));
                    }
                } while (k + l > 0 && next_tuple(w, a.set_size()));
                if (k + l == 0) break;
            }
        }
    auto check = [&](const OpMatrix<long>& m, const char* what) {
        ++rep.cases;
        if (!basis[{m.k, m.l}].contains(vectorize(m)))
            rep.violations.push_back(
                std::string(what) + " left the span at shape (" +
                std::to_string(m.k) + "," + std::to_string(m.l) + ")");
    };
    std::map<Shape, std::set<std::vector<Rat>>> done;
    for (const auto& [sa, la] : ops)
        for (const auto& [sb, lb] : ops) {
            bool composable = sb.second == sa.first &&
                              sb.first + sa.second <= max_points;
            bool tensorable =
                sa.first + sa.second + sb.first + sb.second <= max_points;
            if (!composable && !tensorable) continue;
            for (const auto& A : la)
                for (const auto& B : lb) {
                    if (composable) {
                        auto prod = A.matmul(B);
                        if (done[{prod.k, prod.l}].insert(vectorize(prod)).second)
                            check(prod, "a product");
                    }
                    if (tensorable) {
                        auto ten = A.tensor(B);
                        if (done[{ten.k, ten.l}].insert(vectorize(ten)).second)
                            check(ten, "a tensor product");
                    }
                }
        }
    for (const auto& [s, l] : ops) {
        (void)s;
        for (const auto& A : l) check(A.adjoint(), "an adjoint");
    }
    return rep;
}

VerifyReport orbit_support_check(const ColouredPartition& p,
                                 const GroupAction& a, int N) {
    VerifyReport rep;
    auto m = M_alpha_of(p, a, N);
    int k = p.base.k, l = p.base.l;
    long base = (long)N * a.set_size();
    auto blocks = p.base.block_points();
    for (const auto& e : m.ent) {
        // Colour of each point of p in this entry's sector.
        std::vector<int> colour((size_t)(k + l));
        for (int j = 0; j < k; ++j) {
            long digit = (long)(e.col / (uint64_t)pow_long(base, k - 1 - j)) %
                         base;
            colour[(size_t)j] = (int)(digit % a.set_size());
        }
        for (int j = 0; j < l; ++j) {
            long digit = (long)(e.row / (uint64_t)pow_long(base, l - 1 - j)) %
                         base;
            colour[(size_t)(k + j)] = (int)(digit % a.set_size());
        }
        ++rep.cases;
        (void)blocks;
        for (int j = 0; j < k + l; ++j)
            if (a.orbit_of(colour[(size_t)j]) !=
                a.orbit_of(p.colours[(size_t)j])) {
                rep.violations.push_back(
                    "an entry leaves the orbit of its point's colour");
                break;
            }
    }
    return rep;
}

ReducedAction reduce_action(const GroupAction& a) {
    const FiniteGroup& G = a.group();
    int nx = a.set_size();
    // Cosets of the kernel = distinct permutations of the set; the
    // identity permutation comes first.
    std::vector<std::vector<int>> perms;
    std::vector<int> rep_of((size_t)G.size(), -1);
    std::map<std::vector<int>, int> index;
    std::vector<int> order;
    order.push_back(G.identity());
    for (int g = 0; g < G.size(); ++g)
        if (g != G.identity()) order.push_back(g);
    for (int g : order) {
        std::vector<int> perm((size_t)nx);
        for (int x = 0; x < nx; ++x) perm[(size_t)x] = a.act(g, x);
        auto [it, fresh] = index.emplace(perm, (int)perms.size());
        if (fresh) perms.push_back(perm);
        rep_of[(size_t)g] = it->second;
    }
    int q = (int)perms.size();
    // Quotient multiplication via composition of permutations.
    std::map<std::vector<int>, int> lookup = index;
    std::vector<std::vector<int>> table((size_t)q, std::vector<int>((size_t)q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            std::vector<int> comp((size_t)nx);
            for (int x = 0; x < nx; ++x)
                comp[(size_t)x] = perms[(size_t)i][(size_t)perms[(size_t)j][(size_t)x]];
            auto it = lookup.find(comp);
            if (it == lookup.end())
                throw std::logic_error("cosets are not closed under product");
            table[(size_t)i][(size_t)j] = it->second;
        }
    auto quotient = FiniteGroup::from_table(std::move(table), 0);
    GroupAction reduced(std::move(quotient), nx, std::move(perms));
    return ReducedAction{std::move(reduced), a.kernel(), std::move(rep_of)};
}

bool reduction_preserves_operator(const GroupAction& a,
                                  const ReducedAction& r,
                                  const ColouredPartition& p, int N) {
    long h = (long)r.kernel.size();
    auto reduced = M_alpha_of(p, r.action, N);
    return M_alpha_of(p, a, N) ==
           reduced.scaled(pow_long(h, p.base.num_blocks()));
}

bool coloured_action_check(const GroupAction& a,
                           const std::vector<int>& involution) {
    if ((int)involution.size() != a.set_size())
        throw std::invalid_argument("involution has the wrong size");
    for (int x = 0; x < a.set_size(); ++x) {
        int y = involution[(size_t)x];
        if (y < 0 || y >= a.set_size() || involution[(size_t)y] != x)
            throw std::invalid_argument("not an involution");
    }
    for (int g = 0; g < a.group().size(); ++g)
        for (int x = 0; x < a.set_size(); ++x)
            if (involution[(size_t)a.act(g, x)] !=
                a.act(g, involution[(size_t)x]))
                return false;
    return true;
}

}  // namespace wreath
