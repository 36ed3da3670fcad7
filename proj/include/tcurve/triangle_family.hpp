#pragma once

#include <array>
#include <string>
#include <vector>

#include "tcurve/arith.hpp"
#include "tcurve/cyclic_cover.hpp"

namespace tcurve {

enum class FamilyCase { O, OE, DE, S };
const char* to_string(FamilyCase c);

struct FamilyInvariants {
    i64 m = 0, n = 0;         // as given by the caller
    bool swapped = false;     // internal (m,n) is (n,m) of the caller
    i64 mi = 0, ni = 0;       // internal orientation, 2-valuation of mi >= that of ni
    std::array<Rational, 4> sigma;
    i64 N = 0;
    FamilyCase kase = FamilyCase::O;
    i64 mu = 0, nu = 0;
    i64 m_odd = 0, n_odd = 0; // m', n'
    i64 gamma1 = 0, gamma2 = 0, gamma = 0, gamma_prime = 0;
    i64 delta = 0;
    i64 Nhat = 0;
    i64 beta = 0;
    i64 alpha_bar = 0;
    i64 alpha = 0;
    bool alpha_involutive = true; // false when no lift with alpha^2 = 1 exists
    CoverFamily cover;
};

FamilyInvariants build(i64 m, i64 n);

i64 genus_Z(const FamilyInvariants& inv);
i64 genus_Y(const FamilyInvariants& inv);
i64 genus_X(const FamilyInvariants& inv);

struct FixedPoints {
    i64 tau = 0, rho = 0, sigma = 0;
};
FixedPoints fixed_points(const FamilyInvariants& inv);

i64 zero_count(const FamilyInvariants& inv);

struct Orbit {
    i64 representative = 0;
    std::vector<i64> members; // ascending
};

struct OrbitPartition {
    std::vector<Orbit> orbits; // sorted by representative
    bool certified = false;    // hypothesis m, n odd and coprime holds
};

// orbits of {0<i<N : m∤i, n∤i} under multiplication by ±1, ±α
OrbitPartition orbits(const FamilyInvariants& inv);
// the ⟨±1,±α⟩-orbit of a single index
std::vector<i64> orbit_of(const FamilyInvariants& inv, i64 i);

struct BranchValue {
    Rational angle;       // value is 2cos(angle·π)
    i64 exponent = 0;     // mod 2n
    double value() const;
    std::string label() const;
};

struct WardCoverSpec {
    i64 degree = 0;
    std::vector<BranchValue> branch_values; // finite branch points
    i64 exponent_at_infinity = 0;
    std::vector<i64> exponents;             // finite ones followed by ∞
    std::string equation;
    std::string differential;
    std::vector<Rational> polygon_angles;   // multiples of π
    i64 genus = 0;                          // Riemann–Hurwitz
};

WardCoverSpec ward_fiber(i64 m, i64 n);

i64 self_crossing_count(i64 m);

i64 trace_field_degree(i64 m, i64 n);

enum class Tri { Yes, Unknown };
struct Primitivity {
    bool algebraically_primitive = false;
    Tri geometrically_primitive = Tri::Unknown;
};
Primitivity primitivity(i64 m, i64 n);

struct AffineGroupLabel {
    std::vector<std::array<i64, 2>> candidates; // (p, q) of Δ(p, q, ∞)
    bool ambiguous() const { return candidates.size() > 1; }
    std::string str() const;
};
AffineGroupLabel affine_group_label(i64 m, i64 n);

struct VeechQuotient {
    i64 t = 0;
    i64 genus_U = 0;
    std::vector<i64> indices;
};

struct VeechFamily {
    i64 n = 0;
    CoverFamily cover;
    i64 genus_X = 0;
    bool has_quotient = false; // n even
    VeechQuotient quotient;
};
VeechFamily veech_family(i64 n);

} // namespace tcurve
