#pragma once

// Sparse exact matrices acting on tensor powers of C^N (x) C^A, where A
// is a colour set. Basis vectors of one tensor factor are pairs (i, a),
// i a site index in 0..N-1 and a a colour in 0..A-1, flattened to
// i*A + a. A k-fold tuple is flattened in lexicographic order with the
// first factor most significant; rows index the codomain (l factors),
// columns the domain (k factors).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wreath/cyclo.hpp"

namespace wreath {

inline Rat conj_scalar(const Rat& v) { return v; }
inline long conj_scalar(long v) { return v; }
inline Cyclo conj_scalar(const Cyclo& v) { return v.conj(); }
inline bool scalar_is_zero(const Rat& v) { return v == 0; }
inline bool scalar_is_zero(long v) { return v == 0; }
inline bool scalar_is_zero(const Cyclo& v) { return v.is_zero(); }

template <class S>
struct OpMatrix {
    int k = 0;       // domain arity
    int l = 0;       // codomain arity
    int N = 1;       // sites per factor
    int A = 1;       // colours per factor
    // A power of sqrt(sqrt_base) multiplying the whole matrix; used by
    // the normalized boundary-character operators whose scale is a
    // half-integer power of the group order. Zero for ordinary values.
    int sqrt_tag = 0;
    int sqrt_base = 1;

    struct Entry {
        uint64_t row, col;
        S val;
    };
    std::vector<Entry> ent;

    int dim() const { return N * A; }
    uint64_t rows() const { return ipow((uint64_t)dim(), l); }
    uint64_t cols() const { return ipow((uint64_t)dim(), k); }
    static uint64_t ipow(uint64_t b, int e) {
        uint64_t r = 1;
        while (e-- > 0) r *= b;
        return r;
    }

    void normalize() {
        std::sort(ent.begin(), ent.end(), [](const Entry& a, const Entry& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        std::vector<Entry> out;
        for (auto& e : ent) {
            if (!out.empty() && out.back().row == e.row &&
                out.back().col == e.col)
                out.back().val += e.val;
            else
                out.push_back(e);
        }
        ent.clear();
        for (auto& e : out)
            if (!scalar_is_zero(e.val)) ent.push_back(std::move(e));
    }

    bool same_shape(const OpMatrix& o) const {
        return k == o.k && l == o.l && N == o.N && A == o.A;
    }

    bool operator==(const OpMatrix& o) const {
        if (!same_shape(o) || sqrt_tag != o.sqrt_tag ||
            (sqrt_tag != 0 && sqrt_base != o.sqrt_base))
            return false;
        if (ent.size() != o.ent.size()) return false;
        for (size_t i = 0; i < ent.size(); ++i)
            if (ent[i].row != o.ent[i].row || ent[i].col != o.ent[i].col ||
                !scalar_is_zero(ent[i].val - o.ent[i].val))
                return false;
        return true;
    }
    bool is_zero() const { return ent.empty(); }

    OpMatrix operator+(const OpMatrix& o) const {
        if (!same_shape(o) || sqrt_tag != o.sqrt_tag)
            throw std::invalid_argument("operator shapes/scales differ");
        OpMatrix r = *this;
        r.ent.insert(r.ent.end(), o.ent.begin(), o.ent.end());
        r.normalize();
        return r;
    }
    OpMatrix operator-(const OpMatrix& o) const {
        OpMatrix neg = o;
        for (auto& e : neg.ent) e.val = S() - e.val;
        return *this + neg;
    }
    OpMatrix scaled(const S& c) const {
        OpMatrix r = *this;
        for (auto& e : r.ent) e.val = e.val * c;
        r.normalize();
        return r;
    }

    // this o other (other applied first); other.l must equal this->k.
    OpMatrix matmul(const OpMatrix& other) const {
        if (other.l != k || other.N != N || other.A != A)
            throw std::invalid_argument("operator composition shape mismatch");
        // Index this's entries by column.
        std::vector<Entry> a = ent;
        std::sort(a.begin(), a.end(), [](const Entry& x, const Entry& y) {
            return x.col != y.col ? x.col < y.col : x.row < y.row;
        });
        OpMatrix r;
        r.k = other.k;
        r.l = l;
        r.N = N;
        r.A = A;
        r.sqrt_tag = sqrt_tag + other.sqrt_tag;
        r.sqrt_base = sqrt_base != 1 ? sqrt_base : other.sqrt_base;
        for (auto& eb : other.ent) {
            auto it = std::lower_bound(
                a.begin(), a.end(), eb.row,
                [](const Entry& x, uint64_t c) { return x.col < c; });
            for (; it != a.end() && it->col == eb.row; ++it)
                r.ent.push_back({it->row, eb.col, it->val * eb.val});
        }
        r.normalize();
        return r;
    }

    OpMatrix tensor(const OpMatrix& o) const {
        if (N != o.N || A != o.A)
            throw std::invalid_argument("tensor factor dimensions differ");
        OpMatrix r;
        r.k = k + o.k;
        r.l = l + o.l;
        r.N = N;
        r.A = A;
        r.sqrt_tag = sqrt_tag + o.sqrt_tag;
        r.sqrt_base = sqrt_base != 1 ? sqrt_base : o.sqrt_base;
        uint64_t ro = o.rows(), co = o.cols();
        for (auto& e1 : ent)
            for (auto& e2 : o.ent)
                r.ent.push_back({e1.row * ro + e2.row, e1.col * co + e2.col,
                                 e1.val * e2.val});
        r.normalize();
        return r;
    }

    OpMatrix adjoint() const {
        OpMatrix r;
        r.k = l;
        r.l = k;
        r.N = N;
        r.A = A;
        r.sqrt_tag = sqrt_tag;
        r.sqrt_base = sqrt_base;
        for (auto& e : ent) r.ent.push_back({e.col, e.row, conj_scalar(e.val)});
        r.normalize();
        return r;
    }

    static OpMatrix identity(int arity, int N, int A) {
        OpMatrix r;
        r.k = r.l = arity;
        r.N = N;
        r.A = A;
        uint64_t d = r.rows();
        for (uint64_t i = 0; i < d; ++i) r.ent.push_back({i, i, S(1)});
        return r;
    }

    template <class T>
    OpMatrix<T> cast() const {
        OpMatrix<T> r;
        r.k = k;
        r.l = l;
        r.N = N;
        r.A = A;
        r.sqrt_tag = sqrt_tag;
        r.sqrt_base = sqrt_base;
        for (auto& e : ent) r.ent.push_back({e.row, e.col, T(e.val)});
        return r;
    }
};

template <class S>
OpMatrix<S> tensor_power(const OpMatrix<S>& m, int n) {
    OpMatrix<S> r;
    r.k = r.l = 0;
    r.N = m.N;
    r.A = m.A;
    r.ent.push_back({0, 0, S(1)});
    for (int i = 0; i < n; ++i) r = r.tensor(m);
    return r;
}

}  // namespace wreath
