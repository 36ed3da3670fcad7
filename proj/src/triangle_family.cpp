#include "tcurve/triangle_family.hpp"
#include "tcurve/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace tcurve {

const char* to_string(FamilyCase c) {
    switch (c) {
    case FamilyCase::O: return "O";
    case FamilyCase::OE: return "OE";
    case FamilyCase::DE: return "DE";
    case FamilyCase::S: return "S";
    }
    return "?";
}

FamilyInvariants build(i64 m, i64 n) {
    if (m < 2 || n < 2 || m * n < 6)
        throw Error(ErrorKind::InvalidParams, "need m, n >= 2 and mn >= 6");
    FamilyInvariants f;
    f.m = m;
    f.n = n;
    i64 vm = two_adic_valuation(m), vn = two_adic_valuation(n);
    f.swapped = vm < vn;
    if (f.swapped) std::swap(m, n), std::swap(vm, vn);
    f.mi = m;
    f.ni = n;
    f.mu = vm;
    f.nu = vn;
    f.m_odd = m >> vm;
    f.n_odd = n >> vn;

    i64 two_mn = 2 * m * n;
    f.sigma = {Rational(m * n + m - n, two_mn), Rational(m * n - m + n, two_mn),
               Rational(m * n + m + n, two_mn), Rational(m * n - m - n, two_mn)};
    f.N = 1;
    for (const auto& s : f.sigma) f.N = std::lcm(f.N, s.den_i64());

    f.gamma = std::gcd(m, n);
    f.gamma1 = std::gcd(two_mn, m * n + m - n);
    f.gamma2 = std::gcd(two_mn, m * n + m + n);
    f.gamma_prime = f.gamma >> f.nu;

    if (f.mu == 0 && f.nu == 0) f.kase = FamilyCase::O;
    else if (f.nu == 0) f.kase = FamilyCase::OE;
    else if (f.mu > f.nu) f.kase = FamilyCase::DE;
    else f.kase = FamilyCase::S;

    f.delta = f.kase == FamilyCase::S ? 0 : std::min(f.mu - f.nu + 2, f.mu + 1);
    f.Nhat = f.kase == FamilyCase::DE ? 2 * f.N / f.gamma : f.N / f.gamma;
    f.beta = f.kase == FamilyCase::DE ? f.gamma / 2 : f.gamma;

    i64 p2 = i64(1) << f.delta;
    i64 r2 = 1;
    if (f.kase == FamilyCase::DE) {
        i64 t = i64(1) << (f.mu - f.nu);
        i64 den = mod(f.n_odd - t * f.m_odd, p2);
        // den is odd, hence invertible mod 2^delta
        r2 = mod((f.n_odd + t * f.m_odd) * mod_inverse(den, p2), p2);
    }
    auto ab = crt({{1, f.m_odd / f.gamma_prime}, {-1, f.n_odd / f.gamma_prime}, {r2, p2}});
    if (ab.modulus != f.Nhat)
        throw Error(ErrorKind::Degenerate, "congruences for alpha do not determine it mod Nhat");
    f.alpha_bar = ab.residue;

    f.alpha = 0;
    for (i64 x = ab.residue; x < f.N; x += f.Nhat) {
        if (x == 0) continue;
        if (static_cast<__int128>(x) * x % f.N == 1 % f.N) { f.alpha = x; break; }
    }
    if (f.alpha == 0) {
        f.alpha_involutive = false;
        f.alpha = ab.residue == 0 ? f.Nhat : ab.residue;
    }

    f.cover = CoverFamily(f.N, {f.sigma[0].num_i64() * (f.N / f.sigma[0].den_i64()),
                                f.sigma[1].num_i64() * (f.N / f.sigma[1].den_i64()),
                                f.sigma[2].num_i64() * (f.N / f.sigma[2].den_i64()),
                                f.sigma[3].num_i64() * (f.N / f.sigma[3].den_i64())});
    return f;
}

i64 genus_Z(const FamilyInvariants& f) {
    i64 d = f.kase == FamilyCase::S ? 2 * f.gamma : f.gamma;
    return 1 + f.N - (f.gamma1 + f.gamma2) / d;
}

i64 genus_Y(const FamilyInvariants& f) { return 1 + f.N * f.beta - 2 * f.beta; }

i64 genus_X(const FamilyInvariants& f) {
    i64 m = f.mi, n = f.ni;
    if (f.kase == FamilyCase::S) return (m * n - m - n - f.gamma) / 4 + 1;
    return (m * n - m - n - f.gamma) * f.beta / (2 * f.gamma) + 1;
}

FixedPoints fixed_points(const FamilyInvariants& f) {
    if (f.kase == FamilyCase::S) return {2 * f.mi, 2 * f.ni, 2};
    return {4 * f.mi * f.beta / f.gamma, 4 * f.ni * f.beta / f.gamma, 0};
}

i64 zero_count(const FamilyInvariants& f) {
    return (f.kase == FamilyCase::S || f.kase == FamilyCase::DE) ? f.gamma / 2 : f.gamma;
}

std::vector<i64> orbit_of(const FamilyInvariants& f, i64 i) {
    std::set<i64> seen;
    std::vector<i64> stack{mod(i, f.N)};
    while (!stack.empty()) {
        i64 x = stack.back();
        stack.pop_back();
        if (!seen.insert(x).second) continue;
        stack.push_back(mod(-x, f.N));
        stack.push_back(static_cast<i64>(static_cast<__int128>(x) * f.alpha % f.N));
    }
    return {seen.begin(), seen.end()};
}

OrbitPartition orbits(const FamilyInvariants& f) {
    OrbitPartition p;
    p.certified = (f.m % 2 == 1) && (f.n % 2 == 1) && std::gcd(f.m, f.n) == 1;
    std::vector<bool> done(f.N, false);
    for (i64 i = 1; i < f.N; ++i) {
        if (done[i] || i % f.m == 0 || i % f.n == 0) continue;
        Orbit o{i, orbit_of(f, i)};
        for (i64 x : o.members) done[x] = true;
        p.orbits.push_back(std::move(o));
    }
    return p;
}

double BranchValue::value() const { return 2.0 * std::cos(angle.to_double() * std::numbers::pi); }

std::string BranchValue::label() const {
    if (angle.sign() == 0) return "2";
    std::string a = angle.num() == 1 ? "π" : angle.num().get_str() + "π";
    return "2cos(" + a + "/" + angle.den().get_str() + ")";
}

WardCoverSpec ward_fiber(i64 m, i64 n) {
    if (m < 2 || n < 2) throw Error(ErrorKind::InvalidParams, "need m, n >= 2");
    if (std::gcd(m, n) != 1 || n % 2 == 0)
        throw Error(ErrorKind::HypothesisUnmet, "need gcd(m,n) = 1 and n odd");
    WardCoverSpec w;
    w.degree = 2 * n;
    i64 e2 = (m % 2 == 1) ? 1 : n;
    w.branch_values.push_back({Rational(0), e2});
    i64 total = e2;
    if (m % 2 == 1) {
        for (i64 k = 1; k <= (m - 1) / 2; ++k) w.branch_values.push_back({Rational(2 * k, m), 2});
    } else {
        for (i64 k = 1; k <= m / 2; ++k) w.branch_values.push_back({Rational(2 * k - 1, m), 2});
    }
    total += 2 * (static_cast<i64>(w.branch_values.size()) - 1);
    w.exponent_at_infinity = mod(-total, w.degree);
    for (const auto& b : w.branch_values) w.exponents.push_back(b.exponent);
    w.exponents.push_back(w.exponent_at_infinity);

    std::ostringstream eq;
    eq << "y^" << w.degree << " = (u-2)";
    if (e2 != 1) eq << "^" << e2;
    for (std::size_t j = 1; j < w.branch_values.size(); ++j) eq << "(u-" << w.branch_values[j].label() << ")^2";
    w.equation = eq.str();
    w.differential = "omega0 = y du / ((u-2) prod_k (u-c_k))";

    // finite vertices in the order of the closed-form lists
    std::vector<Rational> fin;
    if (m % 2 == 1) {
        for (i64 k = 0; k < (m - 1) / 2; ++k) fin.push_back(Rational(1, n));
        fin.push_back(Rational(1, 2 * n));
    } else {
        fin.push_back(Rational(1, 2));
        for (i64 k = 0; k < m / 2; ++k) fin.push_back(Rational(1, n));
    }
    Rational rem(static_cast<i64>(fin.size()) - 1); // (k-2) with k = fin.size()+1 vertices
    for (const auto& a : fin) rem -= a;
    rem = frac(rem / Rational(2)) * Rational(2);
    if (rem.sign() == 0) rem = Rational(2);
    w.polygon_angles = fin;
    w.polygon_angles.push_back(rem);

    w.genus = riemann_hurwitz_genus(w.degree, w.exponents);
    return w;
}

i64 self_crossing_count(i64 m) {
    if (m < 2) throw Error(ErrorKind::InvalidParams, "need m >= 2");
    switch (m % 4) {
    case 1: return (m - 5) / 4;
    case 3: return (m - 3) / 4;
    case 0: return (m - 4) / 4;
    default: return (m - 2) / 4;
    }
}

i64 trace_field_degree(i64 m, i64 n) {
    if (m < 2 || n < 2) throw Error(ErrorKind::InvalidParams, "need m, n >= 2");
    i64 L = std::lcm(2 * m, 2 * n);
    auto units = unit_residues(L);
    auto pm1 = [](i64 x, i64 q) { i64 r = mod(x, q); return r == 1 % q || r == q - 1; };
    i64 c = 0;
    for (i64 x : units)
        if (pm1(x, 2 * n) && pm1(x, 2 * m)) ++c;
    return static_cast<i64>(units.size()) / c;
}

namespace {
bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
} // namespace

Primitivity primitivity(i64 m, i64 n) {
    auto inv = build(m, n);
    Primitivity p;
    p.algebraically_primitive = genus_X(inv) == trace_field_degree(m, n);
    p.geometrically_primitive =
        (m != n && m % 2 && n % 2 && is_prime(m) && is_prime(n)) ? Tri::Yes : Tri::Unknown;
    return p;
}

std::string AffineGroupLabel::str() const {
    auto one = [](const std::array<i64, 2>& c) {
        return "Δ(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ",∞)";
    };
    if (candidates.size() == 1) return one(candidates[0]);
    std::string s = "{";
    for (std::size_t i = 0; i < candidates.size(); ++i) s += (i ? ", " : "") + one(candidates[i]);
    return s + "}";
}

AffineGroupLabel affine_group_label(i64 m, i64 n) {
    if (m < 2 || n < 2) throw Error(ErrorKind::InvalidParams, "need m, n >= 2");
    if (m != n) return {{{m, n}}};
    return {{{m, m}, {2, m}}};
}

VeechFamily veech_family(i64 n) {
    if (n < 4) throw Error(ErrorKind::InvalidParams, "need n >= 4");
    VeechFamily v;
    v.n = n;
    v.cover = CoverFamily(n, {1, n - 1, 1, n - 1});
    if (n % 2 == 0) {
        i64 k = n / 2;
        v.genus_X = (n - 2) / 2;
        v.has_quotient = true;
        v.quotient.t = (k % 2 == 1) ? (n - 6) / 4 : (n - 4) / 4;
        v.quotient.genus_U = v.quotient.t + 1;
        for (i64 j = 0; j <= v.quotient.t; ++j) v.quotient.indices.push_back(1 + 2 * j);
    } else {
        v.genus_X = (n - 1) / 2;
    }
    return v;
}

} // namespace tcurve
