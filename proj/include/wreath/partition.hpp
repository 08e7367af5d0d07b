#pragma once

// Set partitions of k upper and l lower points, the category operations
// (tensor, composition with loop count, involution, rotation), crossing
// analysis, family enumeration, and block actions by group elements on
// coloured partitions.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wreath {

// A partition of the set {u1..uk, l1..ll}. Points are indexed
// 0..k-1 (upper row, left to right) then k..k+l-1 (lower row, left to
// right). block[i] is the block id of point i; ids are always in
// canonical form: numbered 0,1,2,... by first occurrence in point order.
struct Partition {
    int k = 0;
    int l = 0;
    std::vector<int> block;

    int points() const { return k + l; }
    int num_blocks() const;
    // Blocks meeting both rows.
    int through_blocks() const;
    // Points of each block, block id -> sorted point indices.
    std::vector<std::vector<int>> block_points() const;
    std::vector<int> block_sizes() const;

    bool operator==(const Partition& o) const {
        return k == o.k && l == o.l && block == o.block;
    }
    bool operator<(const Partition& o) const {
        if (k != o.k) return k < o.k;
        if (l != o.l) return l < o.l;
        return block < o.block;
    }
    // Packed form for hashing; valid for up to 15 points.
    uint64_t key() const;
};

// Renumber block ids into canonical form (first occurrence order).
Partition canonicalize(int k, int l, const std::vector<int>& raw_block);

// Named constructors for the standard small diagrams.
Partition empty_partition();             // P(0,0)
Partition identity_partition();          // P(1,1), {u1 l1}
Partition cup_partition();               // P(0,2), {l1 l2}
Partition cap_partition();               // P(2,0), {u1 u2}
Partition cross_partition();             // P(2,2), {u1 l2}{u2 l1}
Partition one_block(int k, int l);       // all points in a single block
Partition singleton_upper();             // P(1,0)
Partition singleton_lower();             // P(0,1)

// Horizontal concatenation: p placed left of q.
Partition tensor(const Partition& p, const Partition& q);

// Vertical composition pq: q in P(k,l) stacked under p in P(l,m),
// identifying q's lower row with p's upper row. Returns the result in
// P(k,m) and the number of loops (connected components made of middle
// points only).
struct Composition {
    Partition result;
    int loops = 0;
};
Composition compose(const Partition& p, const Partition& q);

// Upside-down flip; swaps the rows.
Partition involution(const Partition& p);

// Planarity of the diagram: no two blocks interleave in the cyclic
// order u1..uk, ll..l1.
bool is_noncrossing(const Partition& p);

enum class Family { ALL, NC, NC2, NCEV, PAIR, EVEN };
const char* family_name(Family f);
Family parse_family(const std::string& name);
bool family_member(Family f, const Partition& p);

// All partitions of the family on k upper and l lower points, in
// canonical form, deterministically ordered. Throws std::length_error
// when k+l exceeds the bound.
std::vector<Partition> enumerate_family(Family f, int k, int l,
                                        int bound = 12);

// ---------------------------------------------------------------------
// Coloured partitions
// ---------------------------------------------------------------------

// A finite colour set with a designated self-inverse conjugation, used
// when rotating points between rows.
struct ColourSet {
    std::vector<std::string> names;
    std::vector<int> conj;  // conj[conj[c]] == c

    int size() const { return (int)names.size(); }
    static ColourSet single();                       // one colour "x", trivial
    static ColourSet two_colour();                   // "w"/"b", conjugating
    static ColourSet from_names(std::vector<std::string> n,
                                std::vector<int> conj);
    int index_of(const std::string& name) const;
};

struct ColouredPartition {
    Partition base;
    std::vector<int> colours;  // one per point, same indexing as base.block

    std::vector<int> upper_colours() const;
    std::vector<int> lower_colours() const;
    bool operator==(const ColouredPartition& o) const {
        return base == o.base && colours == o.colours;
    }
    bool operator<(const ColouredPartition& o) const {
        if (!(base == o.base)) return base < o.base;
        return colours < o.colours;
    }
    std::pair<uint64_t, uint64_t> key() const;
};

ColouredPartition colour_all(const Partition& p, int colour = 0);
// p(g,h): colour upper row by g (size k) and lower row by h (size l).
ColouredPartition colour_rows(const Partition& p, const std::vector<int>& g,
                              const std::vector<int>& h);

ColouredPartition tensor(const ColouredPartition& p,
                         const ColouredPartition& q);
struct ColouredComposition {
    ColouredPartition result;
    int loops = 0;
};
// Requires the lower colouring of q to equal the upper colouring of p.
ColouredComposition compose(const ColouredPartition& p,
                            const ColouredPartition& q);
bool composable(const ColouredPartition& p, const ColouredPartition& q);
ColouredPartition involution(const ColouredPartition& p);

enum class Corner { UpperLeft, UpperRight, LowerLeft, LowerRight };
// Move the corner point to the other row on the same side; its colour is
// replaced by the conjugate colour.
ColouredPartition rotate(const ColouredPartition& p, Corner corner,
                         const ColourSet& cs);

// Block action: colours are group-element indices; x has one group
// element per block (blocks ordered by id, i.e. by leftmost point), and
// every point's colour is left-multiplied by its block's element.
// `mult` is the group multiplication (a,b) -> ab.
using GroupMult = std::function<int(int, int)>;
ColouredPartition act_blocks(const ColouredPartition& p,
                             const std::vector<int>& x,
                             const GroupMult& mult);

// The unique representative of the block-action orbit whose leftmost
// colour in every block is the identity. `inv` maps an element to its
// inverse; `identity` is the identity index.
ColouredPartition canonical_e_form(const ColouredPartition& p,
                                   const GroupMult& mult,
                                   const std::function<int(int)>& inv);

// ---------------------------------------------------------------------
// Text form: "P(2,2) {u1 l1}{u2 l2}", with "@colour" suffixes when a
// colour set is given.
// ---------------------------------------------------------------------
std::string to_text(const Partition& p);
std::string to_text(const ColouredPartition& p, const ColourSet& cs);
Partition parse_partition(const std::string& text);
ColouredPartition parse_coloured(const std::string& text,
                                 const ColourSet& cs);

struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
        return std::hash<uint64_t>()(p.first * 0x9e3779b97f4a7c15ULL ^
                                     p.second);
    }
};

}  // namespace wreath
