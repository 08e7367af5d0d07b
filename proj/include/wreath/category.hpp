#pragma once

// Intensional categories of (coloured) partitions: named families with a
// colouring regime, bounded closure of generator sets, abelianization,
// and block-stability checking. Categories are infinite; they are
// represented by a membership predicate plus bounded enumerators.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/partition.hpp"

namespace wreath {

enum class ColouringKind {
    Uncoloured,      // one-colour partitions of a named family
    GroupColoured,   // all G-colourings of a base family
    GammaColoured,   // per-block equal row colour products over abelian Gamma
    TwoColourModS,   // noncrossing, white/black row difference equal mod s
    Generated,       // bounded closure of explicit generators
};

class CategorySpec {
  public:
    static constexpr int kInfinity = -1;

    static CategorySpec uncoloured(Family f);
    static CategorySpec group_coloured(Family f, FiniteGroup G);
    static CategorySpec gamma_coloured(Family f, FiniteGroup Gamma);
    static CategorySpec two_colour_mod_s(int s);
    static CategorySpec generated(std::vector<ColouredPartition> gens,
                                  ColourSet cs, int max_points);

    ColouringKind kind() const { return kind_; }
    Family base_family() const { return family_; }
    const ColourSet& colour_set() const { return colours_; }
    const FiniteGroup& group() const;
    int mod_s() const { return s_; }
    int max_points() const { return max_points_; }
    std::string name() const;

    bool contains(const ColouredPartition& p) const;
    // All members with k upper and l lower points, sorted.
    std::vector<ColouredPartition> enumerate(int k, int l,
                                             int bound = 12) const;
    // Members with the given boundary colour words.
    std::vector<ColouredPartition> enumerate_boundary(
        const std::vector<int>& upper_word,
        const std::vector<int>& lower_word, int bound = 12) const;

  private:
    ColouringKind kind_ = ColouringKind::Uncoloured;
    Family family_ = Family::ALL;
    ColourSet colours_;
    std::optional<FiniteGroup> group_;
    int s_ = kInfinity;
    int max_points_ = 12;
    std::set<ColouredPartition> members_;  // Generated variant only
};

// Least set of coloured partitions containing the generators and the
// identity partition (every self-paired colouring), closed under
// tensor, composition, involution and rotation among diagrams with at
// most max_points points.
std::set<ColouredPartition> closure(
    const std::vector<ColouredPartition>& generators, const ColourSet& cs,
    int max_points);

// NC -> ALL, NC2 -> PAIR, NCEV -> EVEN; crossing-closed families fixed.
CategorySpec abelianize(const CategorySpec& spec);

// True iff every block of every member (within the point bound), taken
// as a one-block partition with the same row shape and colours, is
// itself a member.
bool is_block_stable(const CategorySpec& spec, int max_points);

// The one-block partition carrying block `id` of p (row shape and
// colours preserved).
ColouredPartition block_of(const ColouredPartition& p, int id);

}  // namespace wreath
