#pragma once

// Exact intertwiner-style operators attached to (coloured) partitions:
// plain spreading maps T_p, globally averaged maps L_p, blockwise
// averaged maps M_p, character projections, and boundary-character
// operators F_p, together with exact rank computations for their spans.

#include <optional>
#include <vector>

#include "wreath/category.hpp"
#include "wreath/group.hpp"
#include "wreath/op_matrix.hpp"
#include "wreath/partition.hpp"

namespace wreath {

// ---- constructors -------------------------------------------------------

// T_p on (C^N)^{(x)k} -> (C^N)^{(x)l}: entry 1 at (j, i) iff the index
// assignment (i, j) is constant on the blocks of p.
OpMatrix<long> T_of(const Partition& p, int N);

// Coloured version on (C^N (x) C^A)^{(x)k}: additionally the colour word
// of (i, j) must equal the colour word of p (entries live in one sector).
OpMatrix<long> T_of(const ColouredPartition& p, int N, int num_colours);

// L_p = sum over g in G of T_{g.p}, g multiplying every colour on the left.
OpMatrix<long> L_of(const ColouredPartition& p, const FiniteGroup& G, int N);

// M_p = sum over x in G^{blocks(p)} of T_{x.p} (blockwise recolouring).
OpMatrix<long> M_of(const ColouredPartition& p, const FiniteGroup& G, int N);

// One-factor operators on C^N (x) C^G.
OpMatrix<long> rho_full(const FiniteGroup& G, int N, int g);  // e_i^h -> e_i^{gh}
OpMatrix<long> rho_site(const FiniteGroup& G, int N, int site, int g);
OpMatrix<long> pi_perm(const FiniteGroup& G, int N,
                       const std::vector<int>& sigma);  // e_i^h -> e_{sigma(i)}^h

// Character projection (1/|G|) sum_g chi(g) rho_full(g); a projection on
// C^N (x) C^G commuting with every M_p.
OpMatrix<Cyclo> P_of(const Character& chi, const FiniteGroup& G, int N);

// Non-abelian variant from an explicit matrix representation pi of G:
// pi[g] is a d x d matrix over the cyclotomics; projection uses the
// (i,i) diagonal coefficient of pi(g^{-1}).
OpMatrix<Cyclo> P_nonabelian(
    const std::vector<std::vector<std::vector<Cyclo>>>& pi, int i,
    const FiniteGroup& G, int N);

// ---- boundary-character operators ---------------------------------------

// chis: one character per upper point of p; rhos: one per lower point.
// F_p(chi, rho) = sum over upper words g and lower words h of
// chi(g) conj(rho(h)) M_{p(g,h)}.
bool is_admissible(const Partition& p, const std::vector<Character>& chis,
                   const std::vector<Character>& rhos, const FiniteGroup& G);
OpMatrix<Cyclo> F_of(const Partition& p, const std::vector<Character>& chis,
                     const std::vector<Character>& rhos, const FiniteGroup& G,
                     int N, bool normalized = false);

// ---- exact ranks ---------------------------------------------------------

// Rank of the span of a family of operators, all of the same shape.
long span_rank(const std::vector<OpMatrix<long>>& ops);
long span_rank(const std::vector<OpMatrix<Rat>>& ops);
long span_rank(const std::vector<OpMatrix<Cyclo>>& ops);

// Rank of span{T_p} computed from the Gram matrix <T_p, T_q> =
// [colour words equal] * N^{blocks(p v q)} without materializing the
// operators; suitable for large families.
long span_rank_T_family(const std::vector<ColouredPartition>& ps, int N);
long span_rank_T_family(const std::vector<Partition>& ps, int N);

// Same for {M_p}; <M_p, M_q> = #{(x, y) : colours(x.p) = colours(y.q)}
// * N^{blocks(p v q)}.
long span_rank_M_family(const std::vector<ColouredPartition>& ps,
                        const FiniteGroup& G, int N);

// ---- morphism space dimensions -------------------------------------------

// dim of span{T_p : p in spec with the given boundary colour words}.
long dim_mor_T(const CategorySpec& spec, int N,
               const std::vector<int>& upper_word,
               const std::vector<int>& lower_word);

// dim of span{M_p : p a canonical recolouring-orbit representative of a
// member of spec with k upper and l lower points}.
long dim_mor_M(const CategorySpec& spec, const FiniteGroup& G, int N, int k,
               int l);

// dim of span{F_p(chis, rhos) : p in the base family, admissible}.
long dim_mor_F(Family base, const FiniteGroup& G, int N,
               const std::vector<Character>& chis,
               const std::vector<Character>& rhos);

}  // namespace wreath
