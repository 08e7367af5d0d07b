#include "wreath/rank.hpp"

#include <algorithm>
#include <cstdint>

namespace wreath {

long bareiss_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    Int prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = t / prev;  // exact by the Bareiss identity
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return (long)r;
}

long rank_mod_p(const std::vector<std::vector<Int>>& m, uint64_t p) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(cols));
    Int pp((unsigned long)p);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            Int r = m[i][j] % pp;
            if (r < 0) r += pp;
            a[i][j] = r.get_ui();
        }
    auto mulmod = [p](uint64_t x, uint64_t y) {
        return (uint64_t)((__uint128_t)x * y % p);
    };
    auto powmod = [&](uint64_t b, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        uint64_t inv = powmod(a[r][c], p - 2);
        for (size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv);
        for (size_t i = r + 1; i < rows; ++i) {
            uint64_t f = a[i][c];
            if (!f) continue;
            for (size_t j = c; j < cols; ++j) {
                uint64_t t = a[i][j] + p - mulmod(f, a[r][j]);
                a[i][j] = t >= p ? t - p : t;
            }
        }
        ++r;
    }
    return (long)r;
}

long gram_rank(const std::vector<std::vector<Int>>& gram) {
    size_t n = gram.size();
    if (n == 0) return 0;
    if (n >= 200) {
        // A modular rank is a lower bound for the rational rank, so a
        // full modular rank certifies full rational rank exactly.
        for (uint64_t p : {2147483629ULL, 2147483587ULL, 2147483563ULL}) {
            if (rank_mod_p(gram, p) == (long)n) return (long)n;
        }
    }
    return bareiss_rank(gram);
}

long cyclo_rank(std::vector<std::vector<Cyclo>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Cyclo inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Cyclo f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return (long)r;
}

}  // namespace wreath
