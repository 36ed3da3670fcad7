#include "tcurve/arith.hpp"
#include "tcurve/error.hpp"

#include <numeric>

namespace tcurve {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::TrivialFiltration: return "TrivialFiltration";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::IrrationalAngle: return "IrrationalAngle";
    case ErrorKind::SelfCrossing: return "SelfCrossing";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Rational::Rational(i64 n, i64 d) {
    if (d == 0) throw Error(ErrorKind::DomainError, "zero denominator");
    q_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.q_ == 0) throw Error(ErrorKind::DomainError, "division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

i64 Rational::num_i64() const {
    if (!q_.get_num().fits_slong_p()) throw Error(ErrorKind::DomainError, "numerator overflow");
    return q_.get_num().get_si();
}

i64 Rational::den_i64() const {
    if (!q_.get_den().fits_slong_p()) throw Error(ErrorKind::DomainError, "denominator overflow");
    return q_.get_den().get_si();
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

i64 floor_of(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
    return f.get_si();
}

Rational frac(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
    return Rational(mpq_class(q.raw() - f));
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mod_inverse(i64 a, i64 m) {
    if (m == 1) return 0;
    // extended Euclid on (a mod m, m)
    i64 r0 = mod(a, m), r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 t = r0 - q * r1; r0 = r1; r1 = t;
        t = s0 - q * s1; s0 = s1; s1 = t;
    }
    if (r0 != 1) throw Error(ErrorKind::Incompatible, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    return mod(s0, m);
}

i64 two_adic_valuation(i64 n) {
    if (n == 0) throw Error(ErrorKind::DomainError, "valuation of 0");
    i64 v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    return v;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

i64 lcm_of(std::span<const i64> xs) {
    i64 l = 1;
    for (i64 x : xs) l = std::lcm(l, x);
    return l;
}

Congruence crt(std::span<const Congruence> cs) {
    i64 r = 0, M = 1;
    for (const auto& c : cs) {
        if (c.modulus < 1) throw Error(ErrorKind::InvalidParams, "modulus must be positive");
        i64 b = mod(c.residue, c.modulus), m = c.modulus;
        i64 g = std::gcd(M, m);
        if (mod(b - r, g) != 0)
            throw Error(ErrorKind::Incompatible,
                        std::to_string(b) + " mod " + std::to_string(m) + " conflicts with " +
                            std::to_string(r) + " mod " + std::to_string(M));
        // r + M*t ≡ b (mod m)  =>  (M/g) t ≡ (b-r)/g (mod m/g)
        i64 mg = m / g;
        i64 t = mg == 1 ? 0
                        : static_cast<i64>((static_cast<__int128>(mod((b - r) / g, mg)) *
                                            mod_inverse(M / g, mg)) % mg);
        i64 L = M / g * m;
        r = mod(r + M * t, L);
        M = L;
    }
    return {r, M};
}

Congruence crt(std::initializer_list<Congruence> cs) {
    return crt(std::span<const Congruence>(cs.begin(), cs.size()));
}

std::vector<i64> unit_residues(i64 L) {
    if (L < 1) throw Error(ErrorKind::InvalidParams, "L must be >= 1");
    if (L == 1) return {0};
    std::vector<i64> out;
    for (i64 x = 1; x < L; ++x)
        if (std::gcd(x, L) == 1) out.push_back(x);
    return out;
}

} // namespace tcurve
