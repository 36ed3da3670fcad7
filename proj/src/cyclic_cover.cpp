#include "tcurve/cyclic_cover.hpp"
#include "tcurve/error.hpp"

#include <numeric>
#include <string>

namespace tcurve {

CoverFamily::CoverFamily(i64 N_, std::array<i64, 4> a_) : N(N_), a(a_) {
    if (N < 2) throw Error(ErrorKind::InvalidParams, "N must be >= 2");
    i64 sum = 0, g = N;
    for (i64 x : a) {
        if (x <= 0 || x >= N) throw Error(ErrorKind::InvalidParams, "need 0 < a_mu < N");
        sum += x;
        g = std::gcd(g, x);
    }
    if (sum % N != 0) throw Error(ErrorKind::InvalidParams, "sum of a_mu must be divisible by N");
    if (g != 1) throw Error(ErrorKind::InvalidParams, "family is disconnected (gcd(a, N) > 1)");
}

CharacterData character_data(const CoverFamily& fam, i64 i) {
    if (i <= 0 || i >= fam.N)
        throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " not in (0, N)");
    CharacterData cd;
    cd.index = i;
    Rational total;
    for (int mu = 0; mu < 4; ++mu) {
        cd.sigma[mu] = frac(Rational(i * fam.a[mu], fam.N));
        total += cd.sigma[mu];
    }
    cd.k = total.num_i64() - 1;
    i64 d = fam.N / std::gcd(i, fam.N);
    for (i64 x : fam.a)
        if (x % d != 0) ++cd.s;
    cd.dim = cd.s - 2;
    cd.hodge = {cd.s - 2 - cd.k, cd.k};
    return cd;
}

i64 genus_smooth_fiber(const CoverFamily& fam) {
    i64 g = 0;
    for (i64 x : fam.a) g += std::gcd(x, fam.N);
    return fam.N + 1 - g / 2;
}

i64 riemann_hurwitz_genus(i64 d, std::span<const i64> ex) {
    i64 g = d;
    for (i64 e : ex) g = std::gcd(g, mod(e, d));
    if (g != 1) throw Error(ErrorKind::InvalidParams, "cover is not connected");
    i64 twice = -2 * d;
    for (i64 e : ex) twice += d - std::gcd(mod(e, d), d);
    return twice / 2 + 1;
}

i64 DegenerationData::arithmetic_genus() const {
    return beta.first * component_genus.first + beta.second * component_genus.second + nodes -
           (beta.first + beta.second) + 1;
}

namespace {

// t collides with the point at position `p` in (a1, a3); the other pair is (q, r)
DegenerationData collide(i64 N, i64 a1, i64 a3, i64 a2, i64 a4) {
    DegenerationData dd;
    dd.nodes = std::gcd(a1 + a3, N);
    dd.beta = {std::gcd(std::gcd(a1, a3), N), std::gcd(std::gcd(a2, a4), N)};
    dd.component_degree = {N / dd.beta.first, N / dd.beta.second};
    auto comp = [N](i64 x, i64 y, i64 b) {
        return 1 + (N - std::gcd(x, N) - std::gcd(y, N) - std::gcd(x + y, N)) / (2 * b);
    };
    dd.component_genus = {comp(a1, a3, dd.beta.first), comp(a2, a4, dd.beta.second)};
    return dd;
}

} // namespace

DegenerationData degeneration_at_zero(const CoverFamily& fam) {
    return collide(fam.N, fam.a[0], fam.a[2], fam.a[1], fam.a[3]);
}

DegenerationData degeneration(const CoverFamily& fam, DegenerationPoint pt) {
    const auto& a = fam.a;
    switch (pt) {
    case DegenerationPoint::Zero: return collide(fam.N, a[0], a[2], a[1], a[3]);
    case DegenerationPoint::One: return collide(fam.N, a[1], a[2], a[0], a[3]);
    case DegenerationPoint::Infinity: return collide(fam.N, a[3], a[2], a[0], a[1]);
    }
    return {};
}

} // namespace tcurve
