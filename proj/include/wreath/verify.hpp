#pragma once

// Exhaustive verification sweeps for the operator calculus: the
// composition rules for T_p, the averaged composition rule for M_p, the
// boundary-character composition rule for F_p, equivariance of the
// averaged operators, and the character-projection identities.

#include <string>
#include <vector>

#include "wreath/category.hpp"
#include "wreath/group.hpp"
#include "wreath/operators.hpp"

namespace wreath {

struct VerifyReport {
    long cases = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// T_p T_q = N^{rl(p,q)} T_{pq} for all p in P(l,m), q in P(k,l) within
// the bounds, every N in Ns; plus adjoint (T_{p*} = T_p^t) and tensor
// (T_{p (x) q} = T_p (x) T_q) identities on reduced bounds.
VerifyReport verify_T_ops(int kmax, int lmax, int mmax,
                          const std::vector<int>& Ns);

// Coloured T composition at the matrix level: product vanishes unless
// the inner colour words agree, and otherwise equals N^{rl} T_{pq}.
VerifyReport verify_T_coloured(const FiniteGroup& G, int N, int max_points);

// M_p M_q = (|G|N)^{rl} M_{pq'} when some blockwise recolourings of p
// and q match along the inner row (pq' the glued recolouring), and 0
// otherwise. Checked for every pair of recolouring classes of every
// shape pair within max_points, as an identity between formal sums of
// coloured diagrams (which implies the matrix identity for every N).
VerifyReport verify_M_composition_formal(const FiniteGroup& G,
                                         int max_points);

// Same statement checked directly on matrices for one coloured pair,
// with an exhaustive search for matching recolourings.
VerifyReport verify_M_pair(const ColouredPartition& p,
                           const ColouredPartition& q, const FiniteGroup& G,
                           int N);

// Direct matrix-level M sweep on small shapes.
VerifyReport verify_M_composition_direct(const FiniteGroup& G, int N,
                                         int max_points);

// Forward equivariance: every M_p (p in spec, canonical representatives,
// k upper / l lower points) commutes with the sitewise translations
// rho_site, and every L_p with the global translation; optionally also
// invariance under permutation conjugation.
VerifyReport verify_equivariance(const CategorySpec& spec,
                                 const FiniteGroup& G, int N, int k, int l,
                                 bool check_permutations = false);

// Converse: dimension of the subspace of span{T_p : p any G-coloured
// partition of the shape} fixed by all sitewise-translation
// conjugations; equals the number of recolouring classes.
long equivariant_fixed_dim(const FiniteGroup& G, int N, int k, int l);

// F-operator identities:
//  (a) the T-expansion coefficient of F_p is |G|^{b(p)} chi rho-bar of
//      the colouring when (chis, rhos) is p-admissible, and 0 otherwise
//      (in particular F_p = 0 exactly for inadmissible tuples);
//  (b) F_p(chi,rho) F_q(chi',rho') = |G|^{b(p)+b(q)-b(pq)+l} N^{rl}
//      delta(chi,rho') F_{pq}(chi',rho) for admissible tuples, checked
//      as an identity of formal T-expansions.
VerifyReport verify_F_expansion(const FiniteGroup& G, int max_points);
VerifyReport verify_F_composition_formal(const FiniteGroup& G,
                                         int max_points);
// Direct matrix-level F composition on small shapes.
VerifyReport verify_F_composition_direct(const FiniteGroup& G, int N,
                                         int max_points);

// P_chi family: idempotent, self-adjoint, pairwise orthogonal, summing
// to the identity.
VerifyReport verify_P(const FiniteGroup& G, int N);

}  // namespace wreath
