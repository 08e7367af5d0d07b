#include "wreath/fusion.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wreath/operators.hpp"

namespace wreath {

namespace {

std::string word_str(const std::vector<int>& w, const ColourSet& cs) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << cs.names[(size_t)w[(size_t)i]];
    os << ")";
    return os.str();
}

bool next_word(std::vector<int>& w, int base) {
    for (int i = (int)w.size() - 1; i >= 0; --i) {
        if (++w[(size_t)i] < base) return true;
        w[(size_t)i] = 0;
    }
    return false;
}

}  // namespace

void FormalSum::add(const FusionWord& w, long mult) {
    long& slot = terms[w];
    slot += mult;
    if (slot == 0) terms.erase(w);
}

bool is_projective(const ColouredPartition& p) {
    if (p.base.k != p.base.l) return false;
    if (p.upper_colours() != p.lower_colours()) return false;
    if (!(involution(p) == p)) return false;
    auto sq = compose(p, p);
    return sq.loops == 0 && sq.result == p;
}

ColouredPartition one_block_coloured(const std::vector<int>& upper,
                                     const std::vector<int>& lower) {
    return colour_rows(one_block((int)upper.size(), (int)lower.size()), upper,
                       lower);
}

FusionSystem::FusionSystem(CategorySpec spec, int max_word_len)
    : spec_(std::move(spec)), max_len_(max_word_len) {
    if (max_len_ < 1 || max_len_ > 6)
        throw std::invalid_argument("word length bound out of range (1..6)");
    block_stable_ = is_block_stable(spec_, 6);
    std::set<FusionClass> found;
    int nc = spec_.colour_set().size();
    for (int len = 1; len <= max_len_; ++len) {
        std::vector<int> w((size_t)len, 0);
        do {
            if (auto c = class_of(w)) found.insert(*c);
        } while (next_word(w, nc));
    }
    classes_.assign(found.begin(), found.end());
}

std::optional<FusionClass> FusionSystem::class_of(
    const std::vector<int>& w) const {
    if (w.empty()) return FusionClass{};
    if (!spec_.contains(one_block_coloured(w, w))) return std::nullopt;
    int nc = spec_.colour_set().size();
    for (int len = 1; len <= (int)w.size(); ++len) {
        std::vector<int> v((size_t)len, 0);
        do {
            if (spec_.contains(one_block_coloured(w, v)))
                return FusionClass{v};
        } while (next_word(v, nc));
    }
    return FusionClass{w};  // unreachable: w is linked to itself
}

std::optional<FusionClass> FusionSystem::star(const FusionClass& a,
                                              const FusionClass& b) const {
    std::vector<int> c = a.word;
    c.insert(c.end(), b.word.begin(), b.word.end());
    return class_of(c);
}

FusionClass FusionSystem::conj(const FusionClass& a) const {
    std::vector<int> w(a.word.rbegin(), a.word.rend());
    const auto& cs = spec_.colour_set();
    for (int& c : w) c = cs.conj[(size_t)c];
    auto cls = class_of(w);
    if (!cls)
        throw std::logic_error("conjugate word left the category");
    return *cls;
}

FormalSum FusionSystem::tensor_decompose(const FusionWord& w,
                                         const FusionWord& w2) const {
    if (!block_stable_)
        throw std::invalid_argument(
            "tensor decomposition needs a block-stable category");
    FormalSum out;
    size_t max_z = std::min(w.size(), w2.size());
    for (size_t zl = 0; zl <= max_z; ++zl) {
        // w = a.z with |z| = zl; w2 must start with the reversed
        // conjugate of z.
        bool match = true;
        for (size_t i = 0; i < zl && match; ++i)
            match = (w2[i] == conj(w[w.size() - 1 - i]));
        if (!match) continue;
        FusionWord a(w.begin(), w.end() - (long)zl);
        FusionWord b(w2.begin() + (long)zl, w2.end());
        FusionWord ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        out.add(ab);
        if (!a.empty() && !b.empty()) {
            if (auto s = star(a.back(), b.front())) {
                FusionWord fused(a.begin(), a.end() - 1);
                fused.push_back(*s);
                fused.insert(fused.end(), b.begin() + 1, b.end());
                out.add(fused);
            }
        }
    }
    return out;
}

FormalSum FusionSystem::tensor_letters(const std::vector<int>& letters) const {
    FormalSum acc;
    acc.add(FusionWord{});
    for (int c : letters) {
        auto cls = class_of({c});
        if (!cls)
            throw std::invalid_argument(
                "letter is not a one-block projective generator");
        // The generator splits off a trivial summand exactly when the
        // category contains the one-point singleton of this colour.
        bool has_trivial =
            spec_.contains(colour_rows(singleton_lower(), {}, {c}));
        FusionWord unit{*cls};
        FormalSum next;
        for (const auto& [term, mult] : acc.terms) {
            for (const auto& [t2, m2] : tensor_decompose(term, unit).terms)
                next.add(t2, mult * m2);
            if (has_trivial) next.add(term, mult);
        }
        acc = std::move(next);
    }
    return acc;
}

VerifyReport cross_check_dim(const FusionSystem& fs,
                             const std::vector<std::vector<int>>& words,
                             int N) {
    VerifyReport rep;
    const auto& cs = fs.spec().colour_set();
    std::vector<FormalSum> sums;
    sums.reserve(words.size());
    for (const auto& w : words) sums.push_back(fs.tensor_letters(w));
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j) {
            long lhs = 0;
            for (const auto& [gamma, mult] : sums[i].terms) {
                auto it = sums[j].terms.find(gamma);
                if (it != sums[j].terms.end()) lhs += mult * it->second;
            }
            long rhs = dim_mor_T(fs.spec(), N, words[i], words[j]);
            ++rep.cases;
            if (lhs != rhs)
                rep.violations.push_back(
                    "multiplicity pairing vs rank mismatch at " +
                    word_str(words[i], cs) + " x " + word_str(words[j], cs) +
                    ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
        }
    return rep;
}

VerifyReport orthogonal_case_report(const FiniteGroup& G) {
    VerifyReport rep;
    FusionSystem fs(CategorySpec::gamma_coloured(Family::NC2, G), 4);
    ++rep.cases;
    if ((int)fs.classes().size() != G.size())
        rep.violations.push_back("expected one class per group element");
    for (int g = 0; g < G.size(); ++g) {
        auto cls = fs.class_of({g});
        ++rep.cases;
        if (!cls || cls->word != std::vector<int>{g})
            rep.violations.push_back("letter " + G.name(g) +
                                     " is not its own class");
    }
    for (const auto& a : fs.classes())
        for (const auto& b : fs.classes()) {
            ++rep.cases;
            if (fs.star(a, b))
                rep.violations.push_back(
                    "star should be empty in a pair-partition category");
        }
    int self = 0, paired = 0;
    for (const auto& a : fs.classes()) {
        auto c = fs.conj(a);
        ++rep.cases;
        if (c.word != std::vector<int>{G.inverse(a.word[0])})
            rep.violations.push_back("conjugation is not inversion at " +
                                     G.name(a.word[0]));
        if (c == a)
            ++self;
        else
            ++paired;
    }
    auto [k, l] = self_conjugate_split(G);
    ++rep.cases;
    if (self != k || paired != 2 * l)
        rep.violations.push_back(
            "self-conjugate class count does not match the character split");
    return rep;
}

VerifyReport even_block_case_report(const FiniteGroup& G, int max_word_len) {
    VerifyReport rep;
    FusionSystem fs(CategorySpec::gamma_coloured(Family::NCEV, G),
                    max_word_len);
    int e = G.identity();
    // Expected classes: (g) for odd words with colour product g, and
    // (e, g) for even ones.
    ++rep.cases;
    if ((int)fs.classes().size() != 2 * G.size())
        rep.violations.push_back("expected |G| x 2 classes");
    auto expect = [&](const std::vector<int>& w) {
        int f = e;
        for (int c : w) f = G.mult(f, c);
        return w.size() % 2 ? FusionClass{{f}} : FusionClass{{e, f}};
    };
    // Normal form of every admissible word.
    for (int len = 1; len <= max_word_len; ++len) {
        std::vector<int> w((size_t)len, 0);
        do {
            auto cls = fs.class_of(w);
            ++rep.cases;
            if (!cls || *cls != expect(w))
                rep.violations.push_back("wrong normal form for word " +
                                         word_str(w, fs.spec().colour_set()));
        } while (next_word(w, G.size()));
    }
    // Star implements the product group law on (element, parity).
    for (const auto& a : fs.classes())
        for (const auto& b : fs.classes()) {
            std::vector<int> cat = a.word;
            cat.insert(cat.end(), b.word.begin(), b.word.end());
            auto s = fs.star(a, b);
            ++rep.cases;
            if (!s || *s != expect(cat))
                rep.violations.push_back("star deviates from the group law");
        }
    return rep;
}

}  // namespace wreath
