#include "tcurve/schwarz_christoffel.hpp"
#include "tcurve/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace tcurve {

namespace {

constexpr double pi = std::numbers::pi;
using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

struct Accum {
    double tol;
    double err = 0;

    template <class F>
    double operator()(F f, double a, double b) {
        double e = 0, l1 = 0;
        double v = GK::integrate(f, a, b, 25, tol, &e, &l1);
        if (!std::isfinite(v) || e > 100 * tol * std::max(1.0, l1))
            throw Error(ErrorKind::QuadratureFailure,
                        "estimated error " + std::to_string(e) + " exceeds tolerance " + std::to_string(tol));
        err += e;
        return v;
    }
};

// ∫ Π|u-u_k|^{e_k} over [lo, hi] where the only singular point is `at`
// (lo or hi) with exponent e; u - at = ±s^q makes the integrand smooth
double endpoint_piece(Accum& acc, const SCSpec& sp, std::size_t at, double lo, double hi, bool at_lo) {
    Rational ep = Rational(1) + sp.exponents[at];
    i64 q = ep.den_i64(), p = ep.num_i64();
    double a = sp.prevertices[at];
    double len = hi - lo;
    double smax = std::pow(len, 1.0 / q);
    auto f = [&](double s) {
        double u = at_lo ? a + std::pow(s, q) : a - std::pow(s, q);
        double v = q * std::pow(s, p - 1);
        for (std::size_t k = 0; k < sp.prevertices.size(); ++k)
            if (k != at) v *= std::pow(std::abs(u - sp.prevertices[k]), sp.exponents[k].to_double());
        return v;
    };
    return acc(f, 0.0, smax);
}

// ∫_{anchor ± 1}^{±∞}; with u = anchor ± 1/v the integrand is v^{-S-2} Π(1 + d_k v)^{e_k}
double tail_piece(Accum& acc, const SCSpec& sp, bool right) {
    Rational r1 = -sp.exponent_sum() - Rational(1); // r + 1 with r = -S-2
    i64 q = r1.den_i64(), p = r1.num_i64();
    double anchor = right ? sp.prevertices.back() : sp.prevertices.front();
    std::vector<double> d;
    for (double uk : sp.prevertices) d.push_back(right ? anchor - uk : uk - anchor);
    auto f = [&](double w) {
        double v = std::pow(w, q);
        double val = q * std::pow(w, p - 1);
        for (std::size_t k = 0; k < d.size(); ++k) val *= std::pow(1 + d[k] * v, sp.exponents[k].to_double());
        return val;
    };
    return acc(f, 0.0, 1.0);
}

} // namespace

double gamma_fn(double x) {
    if (!(x > 0)) throw Error(ErrorKind::DomainError, "gamma needs a positive argument");
    return std::tgamma(x);
}

double beta_fn(double a, double b) {
    if (!(a > 0) || !(b > 0)) throw Error(ErrorKind::DomainError, "beta needs positive arguments");
    if (a + b < 100) return std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b);
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

Rational SCSpec::exponent_sum() const {
    Rational s;
    for (const auto& e : exponents) s += e;
    return s;
}

std::vector<Rational> SCSpec::angles() const {
    std::vector<Rational> out;
    Rational rem(static_cast<i64>(exponents.size()) - 1);
    for (const auto& e : exponents) {
        out.push_back(Rational(1) + e);
        rem -= out.back();
    }
    rem = frac(rem / Rational(2)) * Rational(2);
    if (rem.sign() == 0) rem = Rational(2);
    out.push_back(rem);
    return out;
}

SCSpec sc_spec(i64 m, i64 n) {
    if (m < 2 || n < 2) throw Error(ErrorKind::InvalidParams, "need m, n >= 2");
    if (std::gcd(m, n) != 1 || n % 2 == 0)
        throw Error(ErrorKind::HypothesisUnmet, "need gcd(m,n) = 1 and n odd");
    std::vector<std::pair<double, Rational>> pts;
    if (m % 2 == 1) {
        pts.push_back({2.0, Rational(1, 2 * n) - Rational(1)});
        for (i64 k = 1; k <= (m - 1) / 2; ++k) pts.push_back({2 * std::cos(2 * k * pi / m), Rational(1, n) - Rational(1)});
    } else {
        pts.push_back({2.0, Rational(-1, 2)});
        for (i64 k = 1; k <= m / 2; ++k) pts.push_back({2 * std::cos((2 * k - 1) * pi / m), Rational(1, n) - Rational(1)});
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SCSpec sp;
    for (auto& [u, e] : pts) {
        sp.prevertices.push_back(u);
        sp.exponents.push_back(e);
    }
    return sp;
}

SCPolygon sc_polygon(const SCSpec& sp, double quad_tol) {
    std::size_t K = sp.prevertices.size();
    if (K < 2 || sp.exponents.size() != K) throw Error(ErrorKind::InvalidParams, "malformed SC data");
    for (std::size_t k = 0; k < K; ++k) {
        if (!(sp.exponents[k] > Rational(-1)) || !(sp.exponents[k] < Rational(0)))
            throw Error(ErrorKind::InvalidParams, "exponents must lie in (-1, 0)");
        if (k && !(sp.prevertices[k] > sp.prevertices[k - 1]))
            throw Error(ErrorKind::InvalidParams, "prevertices must be strictly ascending");
    }
    Rational S = sp.exponent_sum();
    if (!(S < Rational(-1))) throw Error(ErrorKind::InvalidParams, "exponent sum must be < -1");

    Accum acc{quad_tol};
    SCPolygon out;
    out.vertices.push_back(cplx(0, 0));
    for (std::size_t j = 0; j + 1 < K; ++j) {
        double a = sp.prevertices[j], b = sp.prevertices[j + 1], mid = (a + b) / 2;
        double len = endpoint_piece(acc, sp, j, a, mid, true) + endpoint_piece(acc, sp, j + 1, mid, b, false);
        Rational ph;
        for (std::size_t k = j + 1; k < K; ++k) ph += sp.exponents[k];
        out.vertices.push_back(out.vertices.back() + std::polar(len * sp.scale, pi * ph.to_double()));
    }
    double uK = sp.prevertices.back();
    double right = endpoint_piece(acc, sp, K - 1, uK, uK + 1, true) + tail_piece(acc, sp, true);
    out.vertices.push_back(out.vertices.back() + right * sp.scale);

    double u1 = sp.prevertices.front();
    double left = endpoint_piece(acc, sp, 0, u1 - 1, u1, false) + tail_piece(acc, sp, false);
    cplx back = out.vertices.back() + std::polar(left * sp.scale, pi * S.to_double());
    out.closure_residual = std::abs(back - out.vertices.front());
    out.error_estimate = acc.err * sp.scale;
    return out;
}

SidesM5 sc_sides_m5(i64 n) {
    if (n < 7 || n % 2 == 0 || n % 5 == 0) throw Error(ErrorKind::InvalidParams, "need n >= 7 odd, prime to 5");
    double B1 = beta_fn(0.4 - 1.0 / (2 * n), 1.0 / n), B2 = beta_fn(0.6 - 1.0 / (2 * n), 1.0 / n);
    cplx z = std::polar(1.0, -pi / n); // ζ_{2n}^{-1}
    cplx w2 = std::polar(1.0, 4 * pi / 5), w3 = std::polar(1.0, 6 * pi / 5);
    SidesM5 s;
    s.I4_len = (B1 + B2) / 5;
    s.I3_len = std::abs((-1.0 + w2 * z) * B1 + (-1.0 + w3 * z) * B2) / 5;
    return s;
}

namespace {

double cross(cplx a, cplx b, cplx c) { return (b - a).real() * (c - a).imag() - (b - a).imag() * (c - a).real(); }

double diameter(const std::vector<cplx>& v) {
    double d = 0;
    for (const auto& p : v)
        for (const auto& q : v) d = std::max(d, std::abs(p - q));
    return d;
}

} // namespace

i64 count_self_crossings(const std::vector<cplx>& v) {
    std::size_t k = v.size();
    if (k < 3) throw Error(ErrorKind::InvalidParams, "need at least 3 vertices");
    double eps = 1e-13 * diameter(v);
    for (std::size_t i = 0; i < k; ++i)
        if (std::abs(v[(i + 1) % k] - v[i]) <= eps)
            throw Error(ErrorKind::DegenerateEdge, "zero-length edge at vertex " + std::to_string(i));
    i64 c = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue; // adjacent through the closing edge
            cplx p1 = v[i], p2 = v[(i + 1) % k], q1 = v[j], q2 = v[(j + 1) % k];
            double d1 = cross(q1, q2, p1), d2 = cross(q1, q2, p2);
            double d3 = cross(p1, p2, q1), d4 = cross(p1, p2, q2);
            if (d1 * d2 < 0 && d3 * d4 < 0) ++c;
        }
    }
    return c;
}

i64 turning_excess(const std::vector<cplx>& v) {
    std::size_t k = v.size();
    double t = 0;
    for (std::size_t i = 0; i < k; ++i) {
        cplx in = v[i] - v[(i + k - 1) % k], out = v[(i + 1) % k] - v[i];
        t += std::arg(out / in);
    }
    return std::llround(std::abs(t) / (2 * pi)) - 1;
}

SimilarityResult similarity_check(i64 m, i64 n, double quad_tol) {
    if (m != 4 && m != 5) throw Error(ErrorKind::InvalidParams, "similarity check only for m = 4, 5");
    auto T = table(m, n);
    auto sp = sc_spec(m, n);
    auto P = sc_polygon(sp, quad_tol);
    auto sa = sp.angles();
    std::size_t k = T.vertices.size();
    if (P.vertices.size() != k) throw Error(ErrorKind::Degenerate, "vertex count mismatch");

    std::optional<std::size_t> rot;
    for (std::size_t r = 0; r < k && !rot; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) ok = sa[(i + r) % k] == T.angles[i];
        if (ok) rot = r;
    }
    if (!rot) throw Error(ErrorKind::Degenerate, "angle sequences do not match up to rotation");

    auto side = [](const std::vector<cplx>& v, std::size_t i) { return std::abs(v[(i + 1) % v.size()] - v[i]); };
    SimilarityResult res;
    res.rotation = *rot;
    double t0 = side(T.vertices, 0), s0 = side(P.vertices, *rot);
    for (std::size_t i = 1; i < k; ++i) {
        double rt = side(T.vertices, i) / t0, rs = side(P.vertices, (i + *rot) % k) / s0;
        res.max_rel_err = std::max(res.max_rel_err, std::abs(rs / rt - 1));
    }
    if (m == 5) {
        double trig = (std::cos(pi / n) + std::cos(pi / 5)) / std::cos(pi / (2 * n));
        res.beta_rel_err = std::abs(sc_sides_m5(n).ratio() / trig - 1);
    }
    return res;
}

} // namespace tcurve
