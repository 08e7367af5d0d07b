#include "wreath/cyclo.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreath {

namespace {

// Exact division of integer polynomials (low degree first); the divisor
// must be monic and divide evenly.
std::vector<Int> poly_divide_exact(std::vector<Int> num,
                                   const std::vector<Int>& den) {
    int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
    std::vector<Int> quot((size_t)(dn - dd + 1), Int(0));
    for (int i = dn; i >= dd; --i) {
        Int f = num[(size_t)i];
        if (f == 0) continue;
        quot[(size_t)(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) num[(size_t)(i - dd + j)] -= f * den[(size_t)j];
    }
    for (auto& v : num)
        if (v != 0) throw std::logic_error("cyclotomic division not exact");
    return quot;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int m) {
    static std::map<int, std::vector<Int>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
    std::vector<Int> num((size_t)m + 1, Int(0));
    num[0] = -1;
    num[(size_t)m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = poly_divide_exact(num, cyclotomic_polynomial(d));
    return cache.emplace(m, std::move(num)).first->second;
}

void Cyclo::reduce(std::vector<Rat>& poly) const {
    const auto& phi = cyclotomic_polynomial(m_);
    int deg = (int)phi.size() - 1;
    for (int i = (int)poly.size() - 1; i >= deg; --i) {
        Rat f = poly[(size_t)i];
        if (f == 0) continue;
        poly[(size_t)i] = 0;
        for (int j = 0; j < deg; ++j)
            poly[(size_t)(i - deg + j)] -= f * Rat(phi[(size_t)j]);
    }
    poly.resize((size_t)deg);
}

void Cyclo::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Cyclo::Cyclo(const Rat& r, int m) : m_(m) {
    if (r != 0) c_.push_back(r);
}

Cyclo Cyclo::zeta(int m, long power) {
    Cyclo z;
    z.m_ = m;
    long p = ((power % m) + m) % m;
    std::vector<Rat> poly((size_t)p + 1, Rat(0));
    poly[(size_t)p] = 1;
    z.reduce(poly);
    z.c_ = std::move(poly);
    z.trim();
    return z;
}

bool Cyclo::is_zero() const { return c_.empty(); }

bool Cyclo::is_rational() const { return c_.size() <= 1; }

Rat Cyclo::rational_part() const {
    if (!is_rational()) throw std::logic_error("value is not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

int Cyclo::lcm(int a, int b) { return a / std::gcd(a, b) * b; }

Cyclo Cyclo::promote(int new_m) const {
    if (new_m == m_) return *this;
    if (new_m % m_ != 0)
        throw std::invalid_argument("cyclotomic promotion needs divisibility");
    int step = new_m / m_;
    Cyclo out(Rat(0), new_m);
    std::vector<Rat> poly((size_t)(m_ - 1) * (size_t)step + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) poly[i * (size_t)step] = c_[i];
    out.reduce(poly);
    out.c_ = std::move(poly);
    out.trim();
    return out;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    int m = lcm(m_, o.m_);
    if (m != m_ || m != o.m_) return promote(m) + o.promote(m);
    Cyclo out(Rat(0), m_);
    out.c_.assign(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out.c_[i] += o.c_[i];
    out.trim();
    return out;
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    int m = lcm(m_, o.m_);
    if (m != m_ || m != o.m_) return promote(m) * o.promote(m);
    if (c_.empty() || o.c_.empty()) return Cyclo(Rat(0), m_);
    std::vector<Rat> poly(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) poly[i + j] += c_[i] * o.c_[j];
    Cyclo out(Rat(0), m_);
    out.reduce(poly);
    out.c_ = std::move(poly);
    out.trim();
    return out;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (m_ == o.m_) return c_ == o.c_;
    int m = lcm(m_, o.m_);
    return promote(m).c_ == o.promote(m).c_;
}

Cyclo Cyclo::conj() const {
    if (c_.size() <= 1) return *this;
    std::vector<Rat> poly((size_t)(m_ - 1) * (c_.size() - 1) + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        size_t p = (i * (size_t)(m_ - 1)) % (size_t)m_;
        // zeta^{m} wraps; accumulate into position p (p < m <= poly size?).
        if (p >= poly.size()) poly.resize(p + 1, Rat(0));
        poly[p] += c_[i];
    }
    Cyclo out(Rat(0), m_);
    out.reduce(poly);
    out.c_ = std::move(poly);
    out.trim();
    return out;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return Cyclo(Rat(1) / c_[0], m_);
    // Extended Euclid on (this, Phi_m) over Q.
    const auto& phi_i = cyclotomic_polynomial(m_);
    std::vector<Rat> r0(phi_i.size());
    for (size_t i = 0; i < phi_i.size(); ++i) r0[i] = Rat(phi_i[i]);
    std::vector<Rat> r1 = c_;
    std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};
    auto deg = [](const std::vector<Rat>& p) {
        int d = (int)p.size() - 1;
        while (d >= 0 && p[(size_t)d] == 0) --d;
        return d;
    };
    while (deg(r1) > 0) {
        int d0 = deg(r0), d1 = deg(r1);
        std::vector<Rat> q((size_t)(d0 - d1 + 1), Rat(0));
        std::vector<Rat> rem = r0;
        for (int i = d0; i >= d1; --i) {
            Rat f = rem[(size_t)i] / r1[(size_t)d1];
            if (f == 0) continue;
            q[(size_t)(i - d1)] = f;
            for (int j = 0; j <= d1; ++j)
                rem[(size_t)(i - d1 + j)] -= f * r1[(size_t)j];
        }
        // s_next = s0 - q*s1
        std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size() - 1),
                            Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    int d1 = deg(r1);
    if (d1 < 0) throw std::logic_error("inverse: gcd degenerated");
    Rat unit = r1[(size_t)d1];
    for (auto& v : s1) v /= unit;
    Cyclo out(Rat(0), m_);
    out.reduce(s1);
    out.c_ = std::move(s1);
    out.trim();
    return out;
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo acc(Rat(1), m_), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Cyclo::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat v = c_[i];
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0)
            os << v.get_str();
        else {
            if (v != 1) os << v.get_str() << "*";
            os << "z" << m_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<double, double> Cyclo::approx() const {
    double re = 0, im = 0;
    const double tau = 6.283185307179586476925;
    for (size_t i = 0; i < c_.size(); ++i) {
        double v = c_[i].get_d();
        re += v * std::cos(tau * (double)i / m_);
        im += v * std::sin(tau * (double)i / m_);
    }
    return {re, im};
}

}  // namespace wreath
