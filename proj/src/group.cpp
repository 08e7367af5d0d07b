#include "wreath/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreath {

void FiniteGroup::finalize() {
    int n = (int)table_.size();
    if (n == 0) throw std::invalid_argument("group must be non-empty");
    for (auto& row : table_) {
        if ((int)row.size() != n)
            throw std::invalid_argument("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw std::invalid_argument("group table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (mult(identity_, a) != a || mult(a, identity_) != a)
            throw std::invalid_argument("designated identity is not neutral");
    inverse_.assign((size_t)n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mult(a, b) == identity_ && mult(b, a) == identity_) {
                inverse_[(size_t)a] = b;
                break;
            }
        if (inverse_[(size_t)a] < 0)
            throw std::invalid_argument("group element has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mult(mult(a, b), c) != mult(a, mult(b, c)))
                    throw std::invalid_argument("group table not associative");
    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a)
        for (int b = 0; b < n; ++b)
            if (mult(a, b) != mult(b, a)) {
                abelian_ = false;
                break;
            }
    exponent_ = 1;
    for (int a = 0; a < n; ++a) {
        int ord = 1, x = a;
        while (x != identity_) {
            x = mult(x, a);
            ++ord;
        }
        exponent_ = (int)std::lcm(exponent_, ord);
    }
    if (names_.empty())
        for (int a = 0; a < n; ++a)
            names_.push_back(a == identity_ ? "e" : "g" + std::to_string(a));
}

FiniteGroup FiniteGroup::cyclic_product(std::vector<int> orders) {
    for (int n : orders)
        if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
    int size = 1;
    for (int n : orders) size *= n;
    auto to_tuple = [&](int g) {
        std::vector<int> t(orders.size());
        for (int j = (int)orders.size() - 1; j >= 0; --j) {
            t[(size_t)j] = g % orders[(size_t)j];
            g /= orders[(size_t)j];
        }
        return t;
    };
    auto from_tuple = [&](const std::vector<int>& t) {
        int g = 0;
        for (size_t j = 0; j < orders.size(); ++j)
            g = g * orders[j] + t[j];
        return g;
    };
    FiniteGroup G;
    G.orders_ = orders;
    G.table_.assign((size_t)size, std::vector<int>((size_t)size));
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            auto ta = to_tuple(a), tb = to_tuple(b);
            for (size_t j = 0; j < orders.size(); ++j)
                ta[j] = (ta[j] + tb[j]) % orders[j];
            G.table_[(size_t)a][(size_t)b] = from_tuple(ta);
        }
    for (int a = 0; a < size; ++a) {
        if (a == 0) {
            G.names_.push_back("e");
            continue;
        }
        auto t = to_tuple(a);
        std::ostringstream os;
        if (t.size() == 1)
            os << "g" << t[0];
        else {
            os << "(";
            for (size_t j = 0; j < t.size(); ++j)
                os << (j ? "," : "") << t[j];
            os << ")";
        }
        G.names_.push_back(os.str());
    }
    G.identity_ = 0;
    G.finalize();
    return G;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    int identity) {
    FiniteGroup G;
    G.table_ = std::move(table);
    G.identity_ = identity;
    G.finalize();
    return G;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("symmetric group supported for n in 1..6");
    std::vector<std::vector<int>> perms;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    int sz = (int)perms.size();
    auto index_of = [&](const std::vector<int>& p) {
        return (int)(std::lower_bound(perms.begin(), perms.end(), p) -
                     perms.begin());
    };
    FiniteGroup G;
    G.table_.assign((size_t)sz, std::vector<int>((size_t)sz));
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[(size_t)a][(size_t)perms[(size_t)b][(size_t)i]];
            G.table_[(size_t)a][(size_t)b] = index_of(c);
        }
    for (int a = 0; a < sz; ++a) {
        std::ostringstream os;
        for (int v : perms[(size_t)a]) os << v + 1;
        G.names_.push_back(os.str());
    }
    G.identity_ = 0;
    G.finalize();
    return G;
}

int FiniteGroup::index_of(const std::string& name) const {
    for (int g = 0; g < size(); ++g)
        if (names_[(size_t)g] == name) return g;
    throw std::invalid_argument("unknown group element: " + name);
}

std::vector<int> FiniteGroup::components(int g) const {
    if (orders_.empty())
        throw std::logic_error("components: group has no cyclic factors");
    std::vector<int> t(orders_.size());
    for (int j = (int)orders_.size() - 1; j >= 0; --j) {
        t[(size_t)j] = g % orders_[(size_t)j];
        g /= orders_[(size_t)j];
    }
    return t;
}

std::vector<Character> dual_group(const FiniteGroup& G) {
    if (!G.is_abelian() || G.orders().empty())
        throw std::invalid_argument(
            "characters need an abelian cyclic-product group");
    std::vector<Character> out;
    std::vector<int> exp(G.orders().size(), 0);
    while (true) {
        out.push_back(Character{exp});
        int j = (int)exp.size() - 1;
        for (; j >= 0; --j) {
            if (++exp[(size_t)j] < G.orders()[(size_t)j]) break;
            exp[(size_t)j] = 0;
        }
        if (j < 0) break;
    }
    return out;
}

Cyclo evaluate(const Character& chi, const FiniteGroup& G, int g) {
    int m = G.exponent();
    auto t = G.components(g);
    long e = 0;
    for (size_t j = 0; j < t.size(); ++j)
        e += (long)chi.exponents[j] * t[j] * (m / G.orders()[j]);
    return Cyclo::zeta(m, e);
}

Character conj_character(const Character& chi, const FiniteGroup& G) {
    Character out = chi;
    for (size_t j = 0; j < out.exponents.size(); ++j)
        out.exponents[j] =
            (G.orders()[j] - out.exponents[j]) % G.orders()[j];
    return out;
}

Character mult_characters(const Character& a, const Character& b,
                          const FiniteGroup& G) {
    Character out = a;
    for (size_t j = 0; j < out.exponents.size(); ++j)
        out.exponents[j] = (out.exponents[j] + b.exponents[j]) %
                           G.orders()[j];
    return out;
}

bool is_trivial(const Character& chi) {
    return std::all_of(chi.exponents.begin(), chi.exponents.end(),
                       [](int a) { return a == 0; });
}

std::string character_name(const Character& chi) {
    std::ostringstream os;
    os << "chi";
    for (size_t j = 0; j < chi.exponents.size(); ++j)
        os << (j ? "." : "") << chi.exponents[j];
    return os.str();
}

bool orthogonality_check(const FiniteGroup& G) {
    auto chars = dual_group(G);
    for (auto& a : chars)
        for (auto& b : chars) {
            Cyclo sum;
            for (int g = 0; g < G.size(); ++g)
                sum += evaluate(a, G, g) * evaluate(b, G, g).conj();
            Cyclo expect(Rat(a == b ? G.size() : 0));
            if (sum != expect) return false;
        }
    return true;
}

std::pair<int, int> self_conjugate_split(const FiniteGroup& G) {
    auto chars = dual_group(G);
    int k = 0;
    for (auto& c : chars)
        if (conj_character(c, G) == c) ++k;
    return {k, (G.size() - k) / 2};
}

}  // namespace wreath
