#pragma once

// Finite group actions on colour sets and the operators obtained by
// averaging spreading maps over block-wise action tuples: construction,
// closure checking by exact span membership, reduction to a faithful
// action, and classification.

#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/op_matrix.hpp"
#include "wreath/partition.hpp"
#include "wreath/verify.hpp"

namespace wreath {

// An action of a finite group on {0..set_size-1}; validated on
// construction (identity acts trivially, compatibility with the group
// law). Orbits and the kernel are precomputed.
class GroupAction {
  public:
    GroupAction(FiniteGroup G, int set_size,
                std::vector<std::vector<int>> map);  // map[g][x] = g.x
    static GroupAction trivial(FiniteGroup G, int set_size);
    static GroupAction left_translation(const FiniteGroup& G);

    const FiniteGroup& group() const { return G_; }
    int set_size() const { return nx_; }
    int act(int g, int x) const { return map_[(size_t)g][(size_t)x]; }

    const std::vector<std::vector<int>>& orbits() const { return orbits_; }
    int orbit_of(int x) const { return orbit_of_[(size_t)x]; }
    std::vector<int> stabilizer(int x) const;
    // Elements acting as the identity on every point.
    const std::vector<int>& kernel() const { return kernel_; }

    bool is_trivial() const;
    bool is_free() const;
    bool is_transitive() const { return orbits_.size() == 1; }
    bool is_faithful() const { return kernel_.size() == 1; }

  private:
    FiniteGroup G_;
    int nx_;
    std::vector<std::vector<int>> map_;
    std::vector<std::vector<int>> orbits_;
    std::vector<int> orbit_of_;
    std::vector<int> kernel_;
};

enum class ActionClass { Trivial, Free, Transitive, General };
const char* action_class_name(ActionClass c);
ActionClass classify(const GroupAction& a);

// Sum over tuples g in G^{blocks(p)} of the spreading map of p with
// each block's colours moved by its tuple entry; acts on k/l-fold
// tensor powers of C^N (x) C^X. Colours of p index the acted-on set.
OpMatrix<long> M_alpha_of(const ColouredPartition& p, const GroupAction& a,
                          int N);

// Rank of span{M_alpha(p, w) : p in family(0,n), w a colour word};
// fixed_colour >= 0 restricts to the single word using that colour
// throughout.
long span_rank_alpha(Family base, const GroupAction& a, int N, int n,
                     int fixed_colour = -1);

// Verifies that products, tensor products and adjoints of the averaged
// operators of the family (all shapes with at most max_points points,
// all colourings) stay inside the exact span of operators of the
// resulting shape.
VerifyReport closure_check_alpha(Family base, const GroupAction& a, int N,
                                 int max_points);

// Nonzero entries never connect sectors whose colours, within one block
// of p, lie in different orbits.
VerifyReport orbit_support_check(const ColouredPartition& p,
                                 const GroupAction& a, int N);

// Faithful quotient: kernel H and the induced action of G/H on the same
// set. rep_of[g] is the index in the quotient group of the coset gH.
struct ReducedAction {
    GroupAction action;
    std::vector<int> kernel;
    std::vector<int> rep_of;
};
ReducedAction reduce_action(const GroupAction& a);

// The averaged operators agree up to the forced multiplicity: the
// operator under `a` equals |kernel|^{blocks(p)} times the operator
// under the reduced action.
bool reduction_preserves_operator(const GroupAction& a,
                                  const ReducedAction& r,
                                  const ColouredPartition& p, int N);

// True iff the action commutes with the colour involution at every
// (g, x): bar(g.x) = g.bar(x).
bool coloured_action_check(const GroupAction& a,
                           const std::vector<int>& involution);

}  // namespace wreath
