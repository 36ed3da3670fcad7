#include "tcurve/billiards.hpp"
#include "tcurve/error.hpp"
#include "tcurve/triangle_family.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace tcurve {

namespace {

constexpr double pi = std::numbers::pi;

cplx polar1(double r, double theta) { return std::polar(r, theta); }

// solve x*p + y*q = r for real x, y
std::pair<double, double> solve2(cplx p, cplx q, cplx r) {
    double det = p.real() * q.imag() - p.imag() * q.real();
    double x = (r.real() * q.imag() - r.imag() * q.real()) / det;
    double y = (p.real() * r.imag() - p.imag() * r.real()) / det;
    return {x, y};
}

void check_mn(i64 m, i64 n) {
    if (m == 5) {
        if (n < 7 || n % 2 == 0 || n % 5 == 0)
            throw Error(ErrorKind::InvalidParams, "m=5 needs n >= 7 odd and prime to 5");
    } else if (m == 4) {
        if (n < 5 || n % 2 == 0) throw Error(ErrorKind::InvalidParams, "m=4 needs n >= 5 odd");
    } else if (m == 2 || m == 3) {
        if (n < 3 || n % 2 == 0 || std::gcd(m, n) != 1 || m * n < 6)
            throw Error(ErrorKind::InvalidParams, "m=2,3 need n odd, prime to m");
    } else if (m >= 6) {
        throw Error(ErrorKind::SelfCrossing,
                    "the Schwarz-Christoffel polygon for m=" + std::to_string(m) + " has " +
                        std::to_string(self_crossing_count(m)) +
                        " self-crossing(s); no billiard table is constructed for m >= 6");
    } else {
        throw Error(ErrorKind::InvalidParams, "m must be in {2,3,4,5}");
    }
}

RationalPolygon triangle(Rational a, Rational b, Rational c) {
    // base from vertex 0 to vertex 1, length 1; law of sines
    double A = a.to_double() * pi, B = b.to_double() * pi, C = c.to_double() * pi;
    double side02 = std::sin(B) / std::sin(C);
    return {{cplx(0, 0), cplx(1, 0), polar1(side02, A)}, {a, b, c}};
}

} // namespace

double signed_area(const std::vector<cplx>& v) {
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const cplx& p = v[i];
        const cplx& q = v[(i + 1) % v.size()];
        s += p.real() * q.imag() - q.real() * p.imag();
    }
    return s / 2;
}

std::vector<double> interior_angles(const std::vector<cplx>& v) {
    std::size_t k = v.size();
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        cplx in = v[i] - v[(i + k - 1) % k], out_ = v[(i + 1) % k] - v[i];
        out[i] = pi - std::arg(out_ / in);
    }
    return out;
}

double re_I3(i64 n) {
    // + root of the quadratic; discriminant is 5/4
    double c = std::cos(pi / n);
    double b = 2 * c + 0.5, k = c * c + c / 2 - 0.25;
    return (b + std::sqrt(b * b - 4 * k)) / 2;
}

double minpoly_residual(i64 n) {
    auto P = table(5, n);
    double x = (P.vertices[2] - P.vertices[1]).real(); // V0 -> T_a is I3
    double c = std::cos(pi / n);
    return std::abs(x * x - (2 * c + 0.5) * x + (c * c + c / 2 - 0.25));
}

RationalPolygon table(i64 m, i64 n) {
    check_mn(m, n);
    if (m == 5) {
        double re = re_I3(n);
        double I3 = re / std::cos(pi / (2 * n));
        cplx Ta = polar1(I3, pi / (2 * n));
        cplx V2 = Ta - 1.0;
        // V2 = |I2| e^{3iπ/2n} - |I1| e^{5iπ/2n}
        auto [l2, l1] = solve2(polar1(1, 3 * pi / (2 * n)), -polar1(1, 5 * pi / (2 * n)), V2);
        cplx Tb = polar1(l2, 3 * pi / (2 * n));
        RationalPolygon P;
        P.vertices = {Tb, cplx(0, 0), Ta, V2};
        P.angles = {Rational(1, n), Rational(1, n), Rational(1, 2 * n), Rational(2) - Rational(5, 2 * n)};
        return P;
    }
    if (m == 4) {
        double l3 = 2 * (std::cos(pi / n) + std::cos(pi / 4));
        cplx I4 = 1.0, I3 = polar1(l3, pi - pi / n);
        cplx d2 = polar1(1, -2 * pi / n), d1 = polar1(1, pi / 2 - 2 * pi / n);
        auto [l2, l1] = solve2(d2, d1, -(I4 + I3));
        cplx v4 = 0, v1 = I4, v2 = v1 + I3, v3 = v2 + l2 * d2;
        (void)l1;
        RationalPolygon P;
        P.vertices = {v1, v2, v3, v4};
        P.angles = {Rational(1, n), Rational(1, n), Rational(1, 2), Rational(3, 2) - Rational(2, n)};
        return P;
    }
    if (m == 3) return triangle(Rational(1, n), Rational(1, 2 * n), Rational(1) - Rational(3, 2 * n));
    return triangle(Rational(1, 2), Rational(1, n), Rational(n - 2, 2 * n));
}

std::array<double, 4> side_lengths(i64 m, i64 n) {
    auto P = table(m, n);
    const auto& v = P.vertices;
    auto len = [&](int i, int j) { return std::abs(v[j] - v[i]); };
    if (m == 5) return {len(3, 0), len(0, 1), len(1, 2), len(2, 3)};
    if (m == 4) return {len(2, 3), len(1, 2), len(0, 1), len(3, 0)};
    throw Error(ErrorKind::InvalidParams, "side labels only for m = 4, 5");
}

Rational rationalize_angle(double x, i64 max_den) {
    for (i64 q = 1; q <= max_den; ++q) {
        double p = std::round(x * q);
        if (p > 0 && std::abs(x * q - p) < 1e-9 * q) return Rational(static_cast<i64>(p), q);
    }
    throw Error(ErrorKind::IrrationalAngle, "angle " + std::to_string(x) + "π is not rational with small denominator");
}

RationalPolygon polygon_from_vertices(const std::vector<cplx>& v, i64 max_den) {
    if (v.size() < 3) throw Error(ErrorKind::InvalidParams, "need at least 3 vertices");
    RationalPolygon P;
    P.vertices = v;
    if (signed_area(P.vertices) < 0) std::reverse(P.vertices.begin(), P.vertices.end());
    for (double a : interior_angles(P.vertices)) P.angles.push_back(rationalize_angle(a / pi, max_den));
    return P;
}

TranslationSurface unfold(const RationalPolygon& P) {
    i64 k = static_cast<i64>(P.angles.size());
    if (k < 3) throw Error(ErrorKind::InvalidParams, "need at least 3 vertices");
    Rational total;
    i64 Nq = 1;
    for (const auto& a : P.angles) {
        if (a.sign() <= 0) throw Error(ErrorKind::IrrationalAngle, "nonpositive angle");
        Nq = std::lcm(Nq, a.den_i64());
        total += a;
    }
    if (!(total == Rational(k - 2)))
        throw Error(ErrorKind::InvalidParams, "angle sum is not (k-2)π");
    TranslationSurface X;
    X.copies = 2 * Nq;
    Rational g(k - 2);
    for (const auto& a : P.angles) g -= Rational(1, a.den_i64());
    g = Rational(1) + Rational(Nq, 2) * g;
    if (!g.is_integer()) throw Error(ErrorKind::Degenerate, "non-integral genus");
    X.genus = g.num_i64();
    std::map<i64, i64, std::greater<>> by_angle;
    for (const auto& a : P.angles) {
        i64 p = a.num_i64(), q = a.den_i64();
        if (p > 1) by_angle[p] += Nq / q;
    }
    for (auto [p, cnt] : by_angle) {
        X.cone_points.push_back({cnt, p, p - 1});
        for (i64 j = 0; j < cnt; ++j) X.stratum.push_back(p - 1);
    }
    return X;
}

std::vector<Cylinder> horizontal_cylinders(i64 m, i64 n) {
    if (m != 4 && m != 5) throw Error(ErrorKind::InvalidParams, "cylinders only for m = 4, 5");
    auto I = side_lengths(m, n); // I[0] = |I1|, ...
    std::vector<Cylinder> out;
    auto add = [&](double w, double h, int type, i64 mult) { out.push_back({w, h, h / w, type, mult}); };
    if (m == 5) {
        for (i64 k = 1; k <= (n - 1) / 2; ++k) {
            double c = std::cos((n - 2 * k) * pi / (2 * n));
            add(2 * I[2] * c, 2 * I[3] * std::sin(pi / (2 * n)) * c, 1, 2);
            add(2 * I[1] * c, 2 * I[0] * std::sin(pi / n) * c, 2, 2);
        }
    } else {
        for (i64 k = 1; k <= (n - 1) / 2; ++k)
            add(4 * I[1] * std::cos((n - 2 * k) * pi / (2 * n)), 2 * I[0] * std::sin(k * pi / n), 1, 2);
        // shifted range: k = 1 would give a zero-width cylinder
        for (i64 k = 2; k <= (n + 1) / 2; ++k) {
            double c = std::cos((n - 2 * k + 2) * pi / (2 * n));
            add(2 * I[2] * c, 2 * I[3] * c * std::sin(pi / n), 2, 1);
        }
    }
    return out;
}

double moduli_deviation(const std::vector<Cylinder>& cs) {
    if (cs.empty()) return 0;
    double ref = cs.front().modulus, dev = 0;
    for (const auto& c : cs) dev = std::max(dev, std::abs(c.modulus / ref - 1));
    return dev;
}

std::pair<MoebiusMatrix, MoebiusMatrix> affine_generators(i64 m, i64 n) {
    if (m < 2 || n < 2) throw Error(ErrorKind::InvalidParams, "need m, n >= 2");
    double c = std::cos(pi / n), s = std::sin(pi / n);
    MoebiusMatrix R{c, -s, s, c};
    MoebiusMatrix T{1, 2 * (c + std::cos(pi / m)) / s, 0, 1};
    return {R, T};
}

FundamentalDomain fundamental_domain(i64 m, i64 n) {
    if (m != 4 && m != 5) throw Error(ErrorKind::InvalidParams, "fundamental domain only for m = 4, 5");
    if (n < 3) throw Error(ErrorKind::InvalidParams, "need n >= 3");
    FundamentalDomain fd;
    fd.derived = m == 4;
    double sn = std::sin(pi / n), cn = std::cos(pi / n);
    fd.z0 = cplx((cn + std::cos(pi / m)) / sn, std::sin(pi / m) / sn);
    fd.center = cn / sn;
    fd.radius = 1 / sn;
    auto tangent = [&](cplx p, double dir) {
        // tangent of the circle at p, oriented with real part of sign dir
        cplx r = p - fd.center;
        cplx t(-r.imag(), r.real());
        return t.real() * dir < 0 ? -t : t;
    };
    auto angle_between = [](cplx a, cplx b) { return std::abs(std::arg(b / a)); };
    fd.angle_at_i = angle_between(cplx(0, 1), tangent(cplx(0, 1), +1));
    fd.angle_at_z0 = angle_between(cplx(0, 1), tangent(fd.z0, -1));
    double R = fd.radius, c = fd.center;
    auto f = [&](double x) { return 1 / std::sqrt(R * R - (x - c) * (x - c)); };
    fd.area = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, fd.z0.real(), 15, 1e-14);
    return fd;
}

} // namespace tcurve
