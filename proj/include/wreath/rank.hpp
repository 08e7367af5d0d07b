#pragma once

// Exact matrix ranks: fraction-free elimination over the integers,
// Gaussian elimination over the cyclotomics, and a modular full-rank
// certificate for large positive semidefinite Gram matrices.

#include <vector>

#include "wreath/cyclo.hpp"

namespace wreath {

// Bareiss fraction-free elimination; exact, destructive on the copy.
long bareiss_rank(std::vector<std::vector<Int>> m);

// Rank over GF(p); a lower bound for the rational rank.
long rank_mod_p(const std::vector<std::vector<Int>>& m, uint64_t p);

// Exact rational rank of a square symmetric Gram matrix. For large full
// rank matrices this is certified by rank_mod_p == n (which forces the
// rational rank to be n); otherwise falls back to exact elimination.
long gram_rank(const std::vector<std::vector<Int>>& gram);

// Exact rank over the cyclotomic field (naive Gaussian elimination).
long cyclo_rank(std::vector<std::vector<Cyclo>> m);

}  // namespace wreath
