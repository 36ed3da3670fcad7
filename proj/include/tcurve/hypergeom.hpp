#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "tcurve/arith.hpp"
#include "tcurve/cyclic_cover.hpp"

namespace tcurve {

struct HGParams {
    Rational A, B, C;
};

struct RiemannScheme {
    std::pair<Rational, Rational> at0, at1, atInf;
    Rational gamma0() const { return at0.second; }
    Rational gamma1() const { return at1.second; }
};

enum class PointClass { InteriorNotS, InS_NotSu, InSu };

struct KSOrder {
    i64 order = 0;
    bool vanishes = false;
};

// nullopt marks a cusp (both exponents zero for every admissible i)
struct BaseChange {
    std::optional<i64> b0, b1;
};

HGParams hg_params(const CoverFamily& fam, i64 i);
RiemannScheme riemann_scheme(const HGParams& p);
RiemannScheme riemann_scheme(const CoverFamily& fam, i64 i);
bool is_unipotent(const RiemannScheme& rs, std::array<i64, 3> ram);
KSOrder ks_vanishing_order(i64 n_c, PointClass cls);
BaseChange base_change_orders(const CoverFamily& fam);

// k(i)=1 and no non-cusp boundary point has a vanishing exponent
bool is_admissible(const CoverFamily& fam, i64 i);
bool is_admissible(const CoverFamily& fam, i64 i, const BaseChange& bc);
std::vector<i64> higgs_indices(const CoverFamily& fam);
Rational lyapunov_ratio(const CoverFamily& fam, i64 i);
// bc must be base_change_orders(fam); saves the O(N) scan in sweeps
Rational lyapunov_ratio(const CoverFamily& fam, i64 i, const BaseChange& bc);

} // namespace tcurve
