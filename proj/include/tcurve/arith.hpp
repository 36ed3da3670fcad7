#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tcurve {

using i64 = std::int64_t;

// Exact rational, always canonical (mpq_class keeps lowest terms, den > 0).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(i64 n) : q_(static_cast<long>(n)) {}
    Rational(i64 n, i64 d);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    i64 num_i64() const;
    i64 den_i64() const;

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    std::string str() const; // "p/q", or "p" for integers

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational frac(const Rational& q);
Rational abs(const Rational& q);
i64 floor_of(const Rational& q);

struct Congruence {
    i64 residue = 0;
    i64 modulus = 1;
    friend bool operator==(const Congruence&, const Congruence&) = default;
};

Congruence crt(std::span<const Congruence> cs);
Congruence crt(std::initializer_list<Congruence> cs);

std::vector<i64> unit_residues(i64 L);

// small helpers
i64 mod(i64 a, i64 m);            // result in [0, m)
i64 mod_inverse(i64 a, i64 m);    // throws Incompatible if gcd(a,m) != 1
i64 two_adic_valuation(i64 n);
i64 euler_phi(i64 n);
i64 lcm_of(std::span<const i64> xs);

} // namespace tcurve
