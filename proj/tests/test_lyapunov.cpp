#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tcurve/hypergeom.hpp"
#include "tcurve/lyapunov.hpp"

using namespace tcurve;

namespace {

std::vector<Rational> lambdas(const LyapunovSpectrum& s) {
    std::vector<Rational> out;
    for (const auto& e : s.entries) out.push_back(e.lambda);
    return out;
}

std::vector<Rational> rs(std::initializer_list<std::pair<i64, i64>> xs) {
    std::vector<Rational> out;
    for (auto [p, q] : xs) out.emplace_back(p, q);
    return out;
}

bool has_flag(const LyapunovSpectrum& s, const std::string& prefix) {
    return std::any_of(s.flags.begin(), s.flags.end(), [&](const std::string& f) { return f.rfind(prefix, 0) == 0; });
}

} // namespace

TEST_CASE("spectrum (3,5)") {
    auto s = spectrum_general(3, 5);
    CHECK(s.certified);
    CHECK(lambdas(s) == rs({{7, 7}, {4, 7}, {2, 7}, {1, 7}}));
    std::vector<i64> reps;
    for (const auto& e : s.entries) reps.push_back(e.representative);
    CHECK(reps == std::vector<i64>{1, 2, 4, 7});
    CHECK_FALSE(has_flag(s, "dual-formula disagreement"));
}

TEST_CASE("spectrum (3,7)") {
    auto s = spectrum_general(3, 7);
    CHECK(s.entries.size() == 6);
    CHECK(s.entries.front().lambda == Rational(1));
    for (const auto& e : s.entries) {
        CHECK(e.lambda >= Rational(0));
        CHECK(e.lambda <= Rational(1));
    }
    CHECK_FALSE(has_flag(s, "dual-formula disagreement"));
}

TEST_CASE("split weighting agrees with local exponents on odd coprime pairs") {
    for (i64 m = 3; m <= 15; m += 2)
        for (i64 n = m + 2; n <= 15; n += 2) {
            if (std::gcd(m, n) != 1) continue;
            INFO("m=" << m << " n=" << n);
            auto inv = build(m, n);
            auto bc = base_change_orders(inv.cover);
            for (i64 i = 1; i < inv.N; ++i) {
                if (!is_admissible(inv.cover, i, bc)) continue;
                CHECK(split_lambda(inv, i) == lyapunov_ratio(inv.cover, i, bc));
            }
            auto s = spectrum_general(m, n);
            CHECK(s.certified);
            CHECK(static_cast<i64>(s.entries.size()) == genus_X(inv));
            CHECK(std::count_if(s.entries.begin(), s.entries.end(),
                                [](const SpectrumEntry& e) { return e.lambda == Rational(1); }) == 1);
            // entries descend
            for (std::size_t j = 1; j < s.entries.size(); ++j) CHECK(s.entries[j - 1].lambda >= s.entries[j].lambda);
        }
}

TEST_CASE("uncorrected weighting mn - e1 m - e2 m misses 4/7 at i=2") {
    auto inv = build(3, 5);
    auto cd = character_data(inv.cover, 2);
    // e1, e2 as multiples of 1/n and 1/m
    Rational e1 = abs(cd.sigma[0] + cd.sigma[2] - Rational(1)) * Rational(5);
    Rational e2 = abs(cd.sigma[1] + cd.sigma[2] - Rational(1)) * Rational(3);
    Rational naive = (Rational(15) - e1 * Rational(3) - e2 * Rational(3)) / Rational(15 - 3 - 5);
    CHECK(naive == Rational(6, 7));
    CHECK(split_lambda(inv, 2) == Rational(4, 7));
}

TEST_CASE("non-certified spectra carry flags") {
    auto s = spectrum_general(4, 9);
    CHECK_FALSE(s.certified);
    CHECK(has_flag(s, "non-certified"));
    auto t = spectrum_general(6, 9);
    CHECK(has_flag(t, "lambda not constant"));
    // each entry is an actual λ of some admissible index
    auto inv = build(6, 9);
    for (const auto& e : t.entries) CHECK(lyapunov_ratio(inv.cover, e.representative) == e.lambda);
}

TEST_CASE("veech even") {
    CHECK(lambdas(spectrum_veech_even(8)) == rs({{1, 1}, {2, 3}, {1, 3}}));
    CHECK(lambdas(spectrum_veech_even(12)) == rs({{1, 1}, {4, 5}, {3, 5}, {2, 5}, {1, 5}}));
    CHECK(lambdas(spectrum_veech_even(4)) == rs({{1, 1}}));
    CHECK_THROWS(spectrum_veech_even(7));
}

TEST_CASE("veech even through the riemann-scheme pipeline") {
    for (i64 n = 4; n <= 20; n += 2) {
        INFO("n=" << n);
        i64 k = n / 2;
        CoverFamily fam(n, {1, n - 1, 1, n - 1});
        auto bc = base_change_orders(fam);
        CHECK(bc.b0 == std::optional<i64>(k));
        CHECK_FALSE(bc.b1.has_value());
        auto closed = spectrum_veech_even(n);
        REQUIRE(static_cast<i64>(closed.entries.size()) == k - 1);
        for (i64 j = 1; j <= k - 1; ++j) {
            // index k - j carries (k-j)/(k-1)
            CHECK(lyapunov_ratio(fam, k - j, bc) == closed.entries[j - 1].lambda);
            CHECK(lyapunov_ratio(fam, n - (k - j), bc) == closed.entries[j - 1].lambda);
        }
        if (n >= 6) {
            auto q = spectrum_veech_quotient(n);
            std::vector<Rational> odd;
            for (i64 idx = 1; idx <= k - 1; idx += 2) odd.push_back(Rational(k - idx, k - 1));
            auto ql = lambdas(q);
            CHECK(ql.size() == veech_family(n).quotient.indices.size());
            // the quotient spectrum is the leading part of the odd-index sublist of the full one
            for (std::size_t j = 0; j < ql.size(); ++j) CHECK(ql[j] == odd[j]);
        }
    }
}

TEST_CASE("veech quotient examples") {
    CHECK(lambdas(spectrum_veech_quotient(8)) == rs({{1, 1}, {1, 3}}));
    CHECK(lambdas(spectrum_veech_quotient(10)) == rs({{1, 1}, {1, 2}}));
    CHECK(lambdas(spectrum_veech_quotient(6)) == rs({{1, 1}}));
}

TEST_CASE("odd veech closed form vs local exponents") {
    auto o5 = spectrum_veech_odd(5);
    CHECK(lambdas(o5) == rs({{1, 1}, {1, 2}}));
    CHECK(lambdas(spectrum_veech_odd(7)) == rs({{1, 1}, {2, 3}, {1, 3}}));
    auto g = spectrum_general(2, 5);
    CHECK(lambdas(g) == rs({{1, 1}, {1, 3}}));
    CHECK(lyapunov_ratio(CoverFamily(20, {7, 13, 17, 3}), 3) == Rational(1, 3));
    CHECK(has_flag(g, "odd Veech discrepancy"));
    CHECK(has_flag(spectrum_general(5, 2), "odd Veech discrepancy"));
}

TEST_CASE("report") {
    auto r = spectrum_report(spectrum_general(3, 5));
    CHECK(r.defects == rs({{0, 1}, {3, 7}, {5, 7}, {6, 7}}));
    auto v = spectrum_report(spectrum_veech_even(8));
    REQUIRE(v.sum.has_value());
    CHECK(*v.sum == Rational(2));
    auto e = spectrum_report(LyapunovSpectrum{});
    CHECK(e.defects.empty());
    // denominators divide 2g-2+s
    auto d = spectrum_report(spectrum_veech_even(8), 0, 3);
    REQUIRE(d.denominator_bound.has_value());
    CHECK(*d.denominator_bound == 1);
}
