#pragma once

// Exact moment and free-cumulant arithmetic for the character laws of the
// fundamental representations: diagram-counted moments, the noncrossing
// moment-cumulant transform, discrete laws, and free convolutions at the
// level of moment/cumulant sequences.

#include <vector>

#include "wreath/cyclo.hpp"
#include "wreath/partition.hpp"

namespace wreath {

// m[0..n_max], exact rationals, m[0] = 1.
struct MomentSequence {
    std::vector<Rat> m;
    int n_max() const { return (int)m.size() - 1; }
    bool operator==(const MomentSequence& o) const { return m == o.m; }
};

// kappa[1..n_max]; kappa[0] is unused and kept at 0.
struct CumulantSequence {
    std::vector<Rat> kappa;
    int n_max() const { return (int)kappa.size() - 1; }
    bool operator==(const CumulantSequence& o) const {
        return kappa == o.kappa;
    }
};

// Finitely supported probability law: atoms (location, weight), weights
// positive with total mass 1.
struct DiscreteLaw {
    std::vector<std::pair<Rat, Rat>> atoms;
    void validate() const;  // throws std::invalid_argument on bad weights
};

// m_n = sum over p in family(0,n) of prod over blocks b of
// group_order^{|b|-1}. Requires 0 <= n_max <= 10.
MomentSequence wreath_moments(Family family, long group_order, int n_max);

// The noncrossing moment-cumulant relation
// m_n = sum_{p in NC(n)} prod_{b in p} kappa_{|b|}, and its inverse.
MomentSequence cumulants_to_moments(const CumulantSequence& kappa);
CumulantSequence moments_to_cumulants(const MomentSequence& m);

// m_n = sum over atoms of weight * location^n.
MomentSequence law_moments(const DiscreteLaw& law, int n_max);

// Free additive convolution: componentwise cumulant addition. All inputs
// are truncated to the shortest length.
CumulantSequence free_additive(const std::vector<CumulantSequence>& parts);

// Moments of (1 - 1/g) delta_0 + (1/g) mu^{boxplus g} where g =
// group_order; the free multiplicative convolution of mu_G with mu.
MomentSequence mult_conv_with_muG(const MomentSequence& mu, long group_order);

// Free compound Poisson: kappa_n = lambda * m_n(initial), n = 1..n_max.
CumulantSequence compound_free_poisson(const DiscreteLaw& initial,
                                       const Rat& lambda, int n_max);

// Named laws.
DiscreteLaw mu_G_law(long group_order);          // (1-1/g) d_0 + (1/g) d_g
DiscreteLaw symmetrized_mu_G_law(long group_order);  // (1/2g) d_{-g} +
                                                     // (1-1/g) d_0 +
                                                     // (1/2g) d_g
CumulantSequence semicircle(const Rat& variance, int n_max);
CumulantSequence free_poisson(const Rat& lambda, int n_max);

// Checks m_n(symmetrized mu_G) = m_n(mu_G) * m_n(nu) for n <= 8, where
// nu = (d_{-1} + d_1)/2: the symmetrized law is the classical
// multiplicative convolution of mu_G with the symmetric Bernoulli law.
bool classical_mult_check(long group_order);

}  // namespace wreath
