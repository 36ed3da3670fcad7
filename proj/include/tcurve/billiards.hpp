#pragma once

#include <array>
#include <complex>
#include <vector>

#include "tcurve/arith.hpp"

namespace tcurve {

using cplx = std::complex<double>;

struct RationalPolygon {
    std::vector<cplx> vertices;    // counterclockwise
    std::vector<Rational> angles;  // interior angle / π
};

struct ConePoint {
    i64 count = 0;
    i64 angle = 0; // cone angle in multiples of 2π
    i64 order = 0;
};

struct TranslationSurface {
    i64 copies = 0;
    std::vector<ConePoint> cone_points; // singular points only (order > 0)
    i64 genus = 0;
    std::vector<i64> stratum;           // zero orders, descending
};

struct Cylinder {
    double width = 0, height = 0, modulus = 0;
    int type = 1;       // 1 or 2
    i64 multiplicity = 1;
};

struct MoebiusMatrix {
    double a = 1, b = 0, c = 0, d = 1;
    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
};

struct FundamentalDomain {
    cplx z0;
    double center = 0, radius = 0;
    double angle_at_i = 0, angle_at_z0 = 0; // radians
    double area = 0;                        // numeric
    bool derived = false;                   // m = 4 analogue
};

// interior angles (radians) of a closed polygon traversed counterclockwise
std::vector<double> interior_angles(const std::vector<cplx>& v);
double signed_area(const std::vector<cplx>& v);

RationalPolygon table(i64 m, i64 n);
// |I1|..|I4| of the m=4,5 tables
std::array<double, 4> side_lengths(i64 m, i64 n);

// angles given as doubles (multiples of π) are rationalized with denominators up to max_den
Rational rationalize_angle(double over_pi, i64 max_den = 10000);
RationalPolygon polygon_from_vertices(const std::vector<cplx>& v, i64 max_den = 10000);

TranslationSurface unfold(const RationalPolygon& p);

std::vector<Cylinder> horizontal_cylinders(i64 m, i64 n);
double moduli_deviation(const std::vector<Cylinder>& cs);

std::pair<MoebiusMatrix, MoebiusMatrix> affine_generators(i64 m, i64 n);

FundamentalDomain fundamental_domain(i64 m, i64 n);

// residual of X^2 - (2cos(π/n)+1/2)X + (cos^2(π/n)+cos(π/n)/2-1/4) at X = Re(I3)
double minpoly_residual(i64 n);
double re_I3(i64 n);

} // namespace tcurve
