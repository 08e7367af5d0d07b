#include "wreath/freeprob.hpp"

#include <stdexcept>

namespace wreath {

namespace {

Rat rat_pow(const Rat& base, long e) {
    Rat r(1);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

Rat int_pow(long base, long e) {
    Rat r(1);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

void DiscreteLaw::validate() const {
    Rat total(0);
    for (auto& [loc, w] : atoms) {
        (void)loc;
        if (w <= 0) throw std::invalid_argument("law weights must be positive");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("law weights must sum to 1");
}

MomentSequence wreath_moments(Family family, long group_order, int n_max) {
    if (n_max < 0 || n_max > 10)
        throw std::invalid_argument("moment order out of range (0..10)");
    if (group_order < 1) throw std::invalid_argument("group order must be >= 1");
    MomentSequence out;
    out.m.assign(n_max + 1, Rat(0));
    out.m[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        Rat sum(0);
        for (const auto& p : enumerate_family(family, 0, n)) {
            Rat w(1);
            for (int sz : p.block_sizes()) {
                (void)sz;
                w *= int_pow(group_order, sz - 1);
            }
            sum += w;
        }
        out.m[n] = sum;
    }
    return out;
}

MomentSequence cumulants_to_moments(const CumulantSequence& kappa) {
    int n_max = kappa.n_max();
    MomentSequence out;
    out.m.assign(n_max + 1, Rat(0));
    out.m[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        Rat sum(0);
        for (const auto& p : enumerate_family(Family::NC, 0, n)) {
            Rat w(1);
            for (int sz : p.block_sizes()) w *= kappa.kappa[sz];
            sum += w;
        }
        out.m[n] = sum;
    }
    return out;
}

CumulantSequence moments_to_cumulants(const MomentSequence& m) {
    int n_max = m.n_max();
    CumulantSequence out;
    out.kappa.assign(n_max + 1, Rat(0));
    for (int n = 1; n <= n_max; ++n) {
        // kappa_n = m_n minus the contribution of every noncrossing
        // partition other than the full block, which uses only
        // kappa_1..kappa_{n-1}, already known.
        Rat rest(0);
        for (const auto& p : enumerate_family(Family::NC, 0, n)) {
            if (p.num_blocks() == 1) continue;
            Rat w(1);
            for (int sz : p.block_sizes()) w *= out.kappa[sz];
            rest += w;
        }
        out.kappa[n] = m.m[n] - rest;
    }
    return out;
}

MomentSequence law_moments(const DiscreteLaw& law, int n_max) {
    law.validate();
    MomentSequence out;
    out.m.assign(n_max + 1, Rat(0));
    for (int n = 0; n <= n_max; ++n) {
        Rat sum(0);
        for (auto& [loc, w] : law.atoms) sum += w * rat_pow(loc, n);
        out.m[n] = sum;
    }
    out.m[0] = 1;
    return out;
}

CumulantSequence free_additive(const std::vector<CumulantSequence>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty convolution");
    size_t len = parts[0].kappa.size();
    for (auto& p : parts) len = std::min(len, p.kappa.size());
    CumulantSequence out;
    out.kappa.assign(len, Rat(0));
    for (auto& p : parts)
        for (size_t i = 1; i < len; ++i) out.kappa[i] += p.kappa[i];
    return out;
}

MomentSequence mult_conv_with_muG(const MomentSequence& mu, long group_order) {
    if (group_order < 1) throw std::invalid_argument("group order must be >= 1");
    auto kap = moments_to_cumulants(mu);
    for (auto& v : kap.kappa) v *= group_order;  // mu^{boxplus g}
    auto power = cumulants_to_moments(kap);
    MomentSequence out;
    out.m.assign(power.m.size(), Rat(0));
    out.m[0] = 1;
    Rat inv_g(1, group_order);
    for (int n = 1; n <= out.n_max(); ++n) out.m[n] = inv_g * power.m[n];
    return out;
}

CumulantSequence compound_free_poisson(const DiscreteLaw& initial,
                                       const Rat& lambda, int n_max) {
    auto m = law_moments(initial, n_max);
    CumulantSequence out;
    out.kappa.assign(n_max + 1, Rat(0));
    for (int n = 1; n <= n_max; ++n) out.kappa[n] = lambda * m.m[n];
    return out;
}

DiscreteLaw mu_G_law(long group_order) {
    if (group_order < 1) throw std::invalid_argument("group order must be >= 1");
    DiscreteLaw law;
    if (group_order == 1) {
        law.atoms = {{Rat(1), Rat(1)}};
    } else {
        law.atoms = {{Rat(0), Rat(group_order - 1, group_order)},
                     {Rat(group_order), Rat(1, group_order)}};
    }
    return law;
}

DiscreteLaw symmetrized_mu_G_law(long group_order) {
    if (group_order < 1) throw std::invalid_argument("group order must be >= 1");
    DiscreteLaw law;
    if (group_order == 1) {
        law.atoms = {{Rat(-1), Rat(1, 2)}, {Rat(1), Rat(1, 2)}};
    } else {
        law.atoms = {{Rat(-group_order), Rat(1, 2 * group_order)},
                     {Rat(0), Rat(group_order - 1, group_order)},
                     {Rat(group_order), Rat(1, 2 * group_order)}};
    }
    return law;
}

CumulantSequence semicircle(const Rat& variance, int n_max) {
    CumulantSequence out;
    out.kappa.assign(n_max + 1, Rat(0));
    if (n_max >= 2) out.kappa[2] = variance;
    return out;
}

CumulantSequence free_poisson(const Rat& lambda, int n_max) {
    CumulantSequence out;
    out.kappa.assign(n_max + 1, Rat(0));
    for (int n = 1; n <= n_max; ++n) out.kappa[n] = lambda;
    return out;
}

bool classical_mult_check(long group_order) {
    const int n_max = 8;
    DiscreteLaw nu;
    nu.atoms = {{Rat(-1), Rat(1, 2)}, {Rat(1), Rat(1, 2)}};
    auto lhs = law_moments(symmetrized_mu_G_law(group_order), n_max);
    auto a = law_moments(mu_G_law(group_order), n_max);
    auto b = law_moments(nu, n_max);
    for (int n = 0; n <= n_max; ++n)
        if (lhs.m[n] != a.m[n] * b.m[n]) return false;
    return true;
}

}  // namespace wreath
