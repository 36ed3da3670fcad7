#include "tcurve/hypergeom.hpp"
#include "tcurve/error.hpp"

#include <numeric>
#include <string>

namespace tcurve {

HGParams hg_params(const CoverFamily& fam, i64 i) {
    auto cd = character_data(fam, i);
    if (cd.k != 1)
        throw Error(ErrorKind::TrivialFiltration,
                    "k(" + std::to_string(i) + ") = " + std::to_string(cd.k) + ", need 1");
    const auto& s = cd.sigma;
    return {Rational(1) - s[2], Rational(2) - (s[0] + s[1] + s[2]), Rational(2) - (s[0] + s[2])};
}

RiemannScheme riemann_scheme(const HGParams& p) {
    RiemannScheme rs;
    rs.at0 = {Rational(0), Rational(1) - p.C};
    rs.at1 = {Rational(0), p.C - p.A - p.B};
    rs.atInf = {p.A, p.B};
    return rs;
}

RiemannScheme riemann_scheme(const CoverFamily& fam, i64 i) { return riemann_scheme(hg_params(fam, i)); }

bool is_unipotent(const RiemannScheme& rs, std::array<i64, 3> ram) {
    auto ok = [](const std::pair<Rational, Rational>& e, i64 r) {
        return (e.first * Rational(r)).is_integer() && (e.second * Rational(r)).is_integer();
    };
    return ok(rs.at0, ram[0]) && ok(rs.at1, ram[1]) && ok(rs.atInf, ram[2]);
}

KSOrder ks_vanishing_order(i64 n_c, PointClass cls) {
    if (n_c < 0) throw Error(ErrorKind::InvalidParams, "n_c must be nonnegative");
    switch (cls) {
    case PointClass::InteriorNotS:
        if (n_c < 1) throw Error(ErrorKind::Degenerate, "n_c = 0 at a non-cusp point");
        return {n_c - 1, n_c - 1 > 0};
    case PointClass::InS_NotSu:
        if (n_c < 1) throw Error(ErrorKind::Degenerate, "n_c = 0 at a non-cusp point");
        return {n_c, true};
    case PointClass::InSu:
        return {0, false};
    }
    return {};
}

namespace {

std::vector<i64> k1_indices(const CoverFamily& fam) {
    std::vector<i64> out;
    for (i64 i = 1; i < fam.N; ++i)
        if (character_data(fam, i).k == 1) out.push_back(i);
    return out;
}

} // namespace

BaseChange base_change_orders(const CoverFamily& fam) {
    i64 l0 = 1, l1 = 1;
    bool any0 = false, any1 = false;
    for (i64 i : k1_indices(fam)) {
        auto rs = riemann_scheme(fam, i);
        if (rs.gamma0().sign() != 0) { any0 = true; l0 = std::lcm(l0, rs.gamma0().den_i64()); }
        if (rs.gamma1().sign() != 0) { any1 = true; l1 = std::lcm(l1, rs.gamma1().den_i64()); }
    }
    BaseChange bc;
    if (any0) bc.b0 = l0;
    if (any1) bc.b1 = l1;
    return bc;
}

bool is_admissible(const CoverFamily& fam, i64 i) { return is_admissible(fam, i, base_change_orders(fam)); }

bool is_admissible(const CoverFamily& fam, i64 i, const BaseChange& bc) {
    if (character_data(fam, i).k != 1) return false;
    auto rs = riemann_scheme(fam, i);
    if (bc.b0 && rs.gamma0().sign() == 0) return false;
    if (bc.b1 && rs.gamma1().sign() == 0) return false;
    return true;
}

std::vector<i64> higgs_indices(const CoverFamily& fam) {
    auto bc = base_change_orders(fam);
    std::vector<i64> out;
    for (i64 i : k1_indices(fam)) {
        auto rs = riemann_scheme(fam, i);
        bool ok = true;
        if (bc.b0) ok = ok && abs(rs.gamma0()) == Rational(1, *bc.b0);
        if (bc.b1) ok = ok && abs(rs.gamma1()) == Rational(1, *bc.b1);
        if (ok) out.push_back(i);
    }
    return out;
}

Rational lyapunov_ratio(const CoverFamily& fam, i64 i) { return lyapunov_ratio(fam, i, base_change_orders(fam)); }

Rational lyapunov_ratio(const CoverFamily& fam, i64 i, const BaseChange& bc) {
    auto rs = riemann_scheme(fam, i); // throws TrivialFiltration
    if ((bc.b0 && rs.gamma0().sign() == 0) || (bc.b1 && rs.gamma1().sign() == 0))
        throw Error(ErrorKind::NotAdmissible,
                    "index " + std::to_string(i) + " has a vanishing exponent at a non-cusp point");
    // n_mu / b_mu is just |gamma_mu|; 1/b_mu = 0 at cusps
    Rational num(1), den(1);
    if (bc.b0) { num -= abs(rs.gamma0()); den -= Rational(1, *bc.b0); }
    if (bc.b1) { num -= abs(rs.gamma1()); den -= Rational(1, *bc.b1); }
    if (den.sign() == 0) throw Error(ErrorKind::Degenerate, "euclidean base orbifold");
    return num / den;
}

} // namespace tcurve
