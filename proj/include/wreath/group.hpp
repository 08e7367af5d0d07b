#pragma once

// Finite groups via multiplication tables (abelian products of cyclic
// groups get a structured constructor), their characters, and the
// character-orthogonality utilities used by the averaged-operator
// machinery.

#include <functional>
#include <string>
#include <vector>

#include "wreath/cyclo.hpp"

namespace wreath {

class FiniteGroup {
  public:
    // Direct product Z_{n1} x ... x Z_{nr}; identity is index 0.
    static FiniteGroup cyclic_product(std::vector<int> orders);
    // Generic group from a multiplication table; validated on
    // construction (associativity, identity, inverses).
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  int identity = 0);
    // Symmetric group on n letters (permutations in lexicographic
    // order, identity first). Used as the stock non-abelian example.
    static FiniteGroup symmetric(int n);

    int size() const { return (int)table_.size(); }
    int identity() const { return identity_; }
    int mult(int a, int b) const { return table_[(size_t)a][(size_t)b]; }
    int inverse(int a) const { return inverse_[(size_t)a]; }
    bool is_abelian() const { return abelian_; }
    int exponent() const { return exponent_; }
    // Cyclic factor orders; empty unless built by cyclic_product.
    const std::vector<int>& orders() const { return orders_; }
    const std::string& name(int g) const { return names_[(size_t)g]; }
    int index_of(const std::string& name) const;

    std::function<int(int, int)> mult_fn() const {
        return [this](int a, int b) { return mult(a, b); };
    }
    std::function<int(int)> inv_fn() const {
        return [this](int a) { return inverse(a); };
    }
    // Component tuple of an element (cyclic_product groups only).
    std::vector<int> components(int g) const;

  private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<int> orders_;
    std::vector<std::string> names_;
    int identity_ = 0;
    int exponent_ = 1;
    bool abelian_ = true;
    void finalize();
};

// A character of an abelian cyclic product, given by exponents
// (a1,...,ar), 0 <= aj < nj. chi(g) = zeta_m^{sum_j aj gj m/nj} where m
// is the group exponent.
struct Character {
    std::vector<int> exponents;

    bool operator==(const Character& o) const {
        return exponents == o.exponents;
    }
    bool operator<(const Character& o) const {
        return exponents < o.exponents;
    }
};

// All |G| characters in lexicographic exponent order (trivial first).
std::vector<Character> dual_group(const FiniteGroup& G);
Cyclo evaluate(const Character& chi, const FiniteGroup& G, int g);
Character conj_character(const Character& chi, const FiniteGroup& G);
Character mult_characters(const Character& a, const Character& b,
                          const FiniteGroup& G);
bool is_trivial(const Character& chi);
std::string character_name(const Character& chi);

// Verifies sum_g chi(g) * conj(rho(g)) = |G| * delta(chi, rho) exactly
// for all pairs of characters.
bool orthogonality_check(const FiniteGroup& G);

// (number of self-conjugate characters, number of conjugate pairs).
std::pair<int, int> self_conjugate_split(const FiniteGroup& G);

}  // namespace wreath
