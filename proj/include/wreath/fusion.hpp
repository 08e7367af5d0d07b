#pragma once

// Fusion combinatorics of a partition category: projective diagrams,
// equivalence classes of one-block projective diagrams (the fusion set),
// the star/conjugation operations on classes, and the tensor
// decomposition rule on words of classes.

#include <map>
#include <optional>
#include <vector>

#include "wreath/category.hpp"
#include "wreath/verify.hpp"

namespace wreath {

// Equivalence class of one-block projective diagrams, named by its
// canonical representative word: the lexicographically minimal colour
// word of minimal length.
struct FusionClass {
    std::vector<int> word;

    bool operator==(const FusionClass& o) const { return word == o.word; }
    bool operator!=(const FusionClass& o) const { return word != o.word; }
    bool operator<(const FusionClass& o) const {
        if (word.size() != o.word.size())
            return word.size() < o.word.size();
        return word < o.word;
    }
};

// A word in fusion classes; the empty word is the trivial class.
using FusionWord = std::vector<FusionClass>;

// Nonnegative integer combination of fusion words.
struct FormalSum {
    std::map<FusionWord, long> terms;

    bool operator==(const FormalSum& o) const { return terms == o.terms; }
    void add(const FusionWord& w, long mult = 1);
};

// True iff p is equal-row-shaped with matching boundary colour words,
// p composed with itself gives back p with no loops, and p is
// flip-symmetric.
bool is_projective(const ColouredPartition& p);

// The one-block diagram with the given boundary colour words.
ColouredPartition one_block_coloured(const std::vector<int>& upper,
                                     const std::vector<int>& lower);

// Fusion structure of a category, discovered over words of bounded
// length. Words w, w' are equivalent iff the category contains the
// one-block diagram with upper word w and lower word w'.
class FusionSystem {
  public:
    explicit FusionSystem(CategorySpec spec, int max_word_len = 4);

    const CategorySpec& spec() const { return spec_; }
    int max_word_len() const { return max_len_; }
    const std::vector<FusionClass>& classes() const { return classes_; }

    // Canonical class of a colour word; nullopt when the category has
    // no one-block diagram with that word on both rows.
    std::optional<FusionClass> class_of(const std::vector<int>& w) const;

    // Class of the concatenated word, when its one-block diagram lies
    // in the category; nullopt otherwise.
    std::optional<FusionClass> star(const FusionClass& a,
                                    const FusionClass& b) const;
    // Word reversal plus colour conjugation.
    FusionClass conj(const FusionClass& a) const;

    // w (x) w' = sum over splittings w = a.z, w' = zbar.b of ab + a*b;
    // the starred term drops when star is empty or either factor word
    // is empty. Requires a block-stable category.
    FormalSum tensor_decompose(const FusionWord& w, const FusionWord& w2) const;
    // Iterated decomposition of a product of single-letter generators.
    FormalSum tensor_letters(const std::vector<int>& letters) const;

  private:
    CategorySpec spec_;
    int max_len_;
    bool block_stable_ = false;
    std::vector<FusionClass> classes_;
};

// Checks sum over classes gamma of mult_gamma(w) * mult_gamma(w') ==
// dim Mor(w, w') computed by exact operator rank at the given N, for
// boundary colour words w, w'.
VerifyReport cross_check_dim(const FusionSystem& fs,
                             const std::vector<std::vector<int>>& words,
                             int N);

// Specialized report for pair-partition categories over an abelian
// group: classes correspond to group elements, star is always empty,
// conjugation is inversion, and the self-conjugate/paired class counts
// match the character split of the group.
VerifyReport orthogonal_case_report(const FiniteGroup& G);

// Specialized report for the even-block noncrossing category over an
// abelian group: classes correspond to (group element, parity) pairs
// and star implements the product group law; every admissible word's
// class has the expected two-point or one-point normal form.
VerifyReport even_block_case_report(const FiniteGroup& G, int max_word_len = 4);

}  // namespace wreath
