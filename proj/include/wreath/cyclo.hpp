#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m): rational-coefficient
// polynomials in zeta_m reduced modulo the m-th cyclotomic polynomial.
// All comparisons are exact; no floating point is involved except in the
// optional display helper.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace wreath {

using Rat = mpq_class;
using Int = mpz_class;

// Coefficients of the m-th cyclotomic polynomial (monic, integer), low
// degree first. Cached per m.
const std::vector<Int>& cyclotomic_polynomial(int m);

class Cyclo {
  public:
    Cyclo() : m_(1), c_{} {}
    // Embeds a rational number (any m).
    explicit Cyclo(const Rat& r, int m = 1);
    explicit Cyclo(long v) : Cyclo(Rat(v)) {}
    // zeta_m^power.
    static Cyclo zeta(int m, long power = 1);

    int order() const { return m_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const;  // valid when is_rational()

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo conj() const;           // zeta_m -> zeta_m^{m-1}
    Cyclo inverse() const;        // throws on zero
    Cyclo pow(long e) const;

    // Re-expresses the value in Q(zeta_new) where order() divides new_m.
    Cyclo promote(int new_m) const;

    std::string str() const;      // e.g. "1/2 + z3^2" with z<m> = zeta_m
    // Approximate complex value, for human-readable report columns only.
    std::pair<double, double> approx() const;

  private:
    int m_;
    std::vector<Rat> c_;  // degree < phi(m), low first, trailing zeros trimmed
    void reduce(std::vector<Rat>& poly) const;
    void trim();
    static int lcm(int a, int b);
};

}  // namespace wreath
