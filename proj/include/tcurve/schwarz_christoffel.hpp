#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "tcurve/arith.hpp"
#include "tcurve/billiards.hpp"

namespace tcurve {

double gamma_fn(double x);
double beta_fn(double a, double b);

struct SCSpec {
    std::vector<double> prevertices;  // ascending, finite; ∞ is the last vertex
    std::vector<Rational> exponents;  // one per finite prevertex, each in (-1, 0)
    double scale = 1.0;
    Rational exponent_sum() const;
    // interior angles / π, finite prevertices then ∞ (the latter reduced into (0, 2])
    std::vector<Rational> angles() const;
};

SCSpec sc_spec(i64 m, i64 n);

struct SCPolygon {
    std::vector<cplx> vertices;  // images of prevertices, then of ∞
    double error_estimate = 0;   // summed quadrature error estimates
    double closure_residual = 0; // |P_∞ + e^{iπS} L_left - P_1|
};

SCPolygon sc_polygon(const SCSpec& spec, double quad_tol = 1e-12);

struct SidesM5 {
    double I4_len = 0, I3_len = 0;
    double ratio() const { return I3_len / I4_len; }
};
SidesM5 sc_sides_m5(i64 n);

i64 count_self_crossings(const std::vector<cplx>& vertices);
// |turning number| - 1 of the closed edge path
i64 turning_excess(const std::vector<cplx>& vertices);

struct SimilarityResult {
    double max_rel_err = 0;             // quadrature polygon vs table
    std::optional<double> beta_rel_err; // m = 5 closed-form ratio vs trig
    std::size_t rotation = 0;           // SC vertex index matched to table vertex 0
};
SimilarityResult similarity_check(i64 m, i64 n, double quad_tol = 1e-12);

} // namespace tcurve
