#include "tcurve/lyapunov.hpp"
#include "tcurve/error.hpp"
#include "tcurve/hypergeom.hpp"

#include <algorithm>
#include <numeric>

namespace tcurve {

namespace {

void finish(LyapunovSpectrum& s) {
    std::stable_sort(s.entries.begin(), s.entries.end(),
                     [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.lambda > b.lambda; });
    s.total_rank = 0;
    for (const auto& e : s.entries) s.total_rank += 2 * e.multiplicity;
}

std::string list_str(const std::vector<SpectrumEntry>& es) {
    std::string out = "{";
    for (std::size_t i = 0; i < es.size(); ++i) out += (i ? ", " : "") + es[i].lambda.str();
    return out + "}";
}

} // namespace

Rational split_lambda(const FamilyInvariants& inv, i64 i) {
    auto cd = character_data(inv.cover, i);
    const auto& s = cd.sigma;
    Rational c1 = s[0] + s[2] - Rational(1), c2 = s[1] + s[2] - Rational(1);
    i64 m = inv.mi, n = inv.ni;
    Rational e1 = Rational(n) * abs(c1), e2 = Rational(m) * abs(c2);
    return (Rational(m * n) - e1 * Rational(m) - e2 * Rational(n)) / Rational(m * n - m - n);
}

LyapunovSpectrum spectrum_general(i64 m, i64 n) {
    auto inv = build(m, n);
    auto part = orbits(inv);
    auto bc = base_change_orders(inv.cover);
    LyapunovSpectrum s;
    s.certified = part.certified && inv.alpha_involutive;
    if (s.certified) {
        s.normalization = "splitting formula, weighting mn - e1*m - e2*n (corrected)";
        s.flags.push_back("corrected weighting: e2 is weighted by n, not m");
        bool agree = true;
        for (const auto& o : part.orbits) {
            Rational l = split_lambda(inv, o.representative);
            if (!(l == lyapunov_ratio(inv.cover, o.representative, bc))) agree = false;
            s.entries.push_back({o.representative, l, 1});
        }
        if (!agree) s.flags.push_back("dual-formula disagreement");
    } else {
        s.normalization = "local-exponent ratio on orbit representatives";
        s.flags.push_back("non-certified: splitting hypothesis (m, n odd and coprime) not met");
        if (!inv.alpha_involutive) s.flags.push_back("alpha has no involutive lift mod N");
        // alpha can fail to preserve lambda here (gcd(m, n) > 1); split such orbits by value
        bool split = false;
        for (const auto& o : part.orbits) {
            std::vector<SpectrumEntry> vals;
            for (i64 j : o.members) {
                if (!is_admissible(inv.cover, j, bc)) continue;
                Rational l = lyapunov_ratio(inv.cover, j, bc);
                if (std::none_of(vals.begin(), vals.end(), [&](const SpectrumEntry& e) { return e.lambda == l; }))
                    vals.push_back({j, l, 1});
            }
            if (vals.size() > 1) split = true;
            s.entries.insert(s.entries.end(), vals.begin(), vals.end());
        }
        if (split) s.flags.push_back("lambda not constant on some alpha-orbits; orbits split by value");
    }
    finish(s);
    // (2, n) with n odd: compare against the odd Veech closed form
    i64 other = m == 2 ? n : (n == 2 ? m : 0);
    if (other >= 5 && other % 2 == 1) {
        auto odd = spectrum_veech_odd(other);
        bool same = odd.entries.size() == s.entries.size();
        for (std::size_t j = 0; same && j < s.entries.size(); ++j)
            same = odd.entries[j].lambda == s.entries[j].lambda;
        if (!same)
            s.flags.push_back("odd Veech discrepancy: closed form gives " + list_str(odd.entries) +
                              ", local exponents give " + list_str(s.entries));
    }
    return s;
}

LyapunovSpectrum spectrum_veech_even(i64 n) {
    if (n < 4 || n % 2) throw Error(ErrorKind::InvalidParams, "need n even >= 4");
    i64 k = n / 2;
    LyapunovSpectrum s;
    s.certified = true;
    s.normalization = "(k-j)/(k-1), k = n/2";
    for (i64 j = 1; j <= k - 1; ++j) s.entries.push_back({j, Rational(k - j, k - 1), 1});
    finish(s);
    return s;
}

LyapunovSpectrum spectrum_veech_quotient(i64 n) {
    if (n < 6 || n % 2) throw Error(ErrorKind::InvalidParams, "need n even >= 6");
    i64 k = n / 2;
    auto v = veech_family(n);
    LyapunovSpectrum s;
    s.certified = true;
    s.normalization = "(k-(1+2j))/(k-1), j = 0..t(n)";
    for (i64 idx : v.quotient.indices) s.entries.push_back({idx, Rational(k - idx, k - 1), 1});
    finish(s);
    return s;
}

LyapunovSpectrum spectrum_veech_odd(i64 n) {
    if (n < 5 || n % 2 == 0) throw Error(ErrorKind::InvalidParams, "need n odd >= 5");
    LyapunovSpectrum s;
    s.certified = false;
    s.normalization = "2i/(n-1), odd Veech closed form";
    for (i64 i = 1; i <= (n - 1) / 2; ++i) s.entries.push_back({i, Rational(2 * i, n - 1), 1});
    s.flags.push_back("odd Veech closed form; disagrees with the local-exponent ratio on the (2,n) family");
    finish(s);
    return s;
}

SpectrumReport spectrum_report(const LyapunovSpectrum& s, std::optional<i64> genus, std::optional<i64> cusps) {
    SpectrumReport r;
    for (const auto& e : s.entries) r.defects.push_back(Rational(1) - e.lambda);
    if (genus && cusps) {
        r.denominator_bound = 2 * *genus - 2 + *cusps;
        for (const auto& e : s.entries)
            if (e.lambda.den() > *r.denominator_bound) r.denominators_ok = false;
    }
    if (!s.entries.empty()) {
        Rational sum;
        for (const auto& e : s.entries) sum += e.lambda * Rational(e.multiplicity);
        r.sum = sum;
    }
    return r;
}

} // namespace tcurve
