#pragma once
// Independent reference computations used by the tests. Deliberately naive.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

using i64 = std::int64_t;

inline i64 posmod(i64 a, i64 m) { return ((a % m) + m) % m; }

// smallest x in [0, lcm) satisfying every congruence, or -1
inline i64 crt_scan(const std::vector<std::pair<i64, i64>>& cs) {
    i64 L = 1;
    for (auto [r, m] : cs) L = std::lcm(L, m);
    for (i64 x = 0; x < L; ++x) {
        bool ok = true;
        for (auto [r, m] : cs) ok = ok && posmod(x - r, m) == 0;
        if (ok) return x;
    }
    return -1;
}

inline i64 phi(i64 n) {
    // product over prime powers p^k || n of p^(k-1)(p-1)
    i64 r = 1;
    for (i64 p = 2; n > 1; ++p) {
        if (n % p) continue;
        i64 pk = 1;
        while (n % p == 0) n /= p, pk *= p;
        r *= pk / p * (p - 1);
    }
    return r;
}

// genus of a connected cyclic cover of degree d branched with exponents e_p,
// via an Euler-characteristic count of the preimages of the points
inline i64 cyclic_cover_genus(i64 d, const std::vector<i64>& ex) {
    // χ = d·χ(P¹ − B) + Σ #preimages(p)
    i64 b = static_cast<i64>(ex.size());
    i64 chi = d * (2 - b);
    for (i64 e : ex) chi += std::gcd(posmod(e, d), d);
    return (2 - chi) / 2;
}

// closure of {i} under multiplication by -1 and alpha mod N, by repeated sweeps
inline std::set<i64> orbit(i64 i, i64 alpha, i64 N) {
    std::set<i64> s{posmod(i, N)};
    for (bool grew = true; grew;) {
        grew = false;
        for (i64 x : std::vector<i64>(s.begin(), s.end()))
            for (i64 y : {posmod(-x, N), posmod(x * alpha, N), posmod(-x * alpha, N)})
                grew |= s.insert(y).second;
    }
    return s;
}

// Euler characteristic route for the genus of the unfolded surface: the
// reflection group has order G; vertices V = Σ G/(2 q_i), edges E = G k / 2, faces F = G
inline i64 unfolding_genus(i64 G, const std::vector<i64>& qs) {
    i64 k = static_cast<i64>(qs.size());
    i64 V = 0;
    for (i64 q : qs) V += G / (2 * q);
    i64 chi = V - G * k / 2 + G;
    return (2 - chi) / 2;
}

// ∫_0^∞ g(x) dx by double-exponential quadrature; g takes the offset from the
// singular endpoint so that tiny offsets are not lost to cancellation
template <class F>
double half_line(F g) {
    boost::math::quadrature::tanh_sinh<double> ts;
    boost::math::quadrature::exp_sinh<double> es;
    return ts.integrate(g, 0.0, 1.0) + es.integrate(g, 1.0, std::numeric_limits<double>::infinity());
}

} // namespace oracle
