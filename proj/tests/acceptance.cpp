// One PASS/FAIL line per acceptance criterion. Exit status is 0 iff the set of
// failing criteria equals the set given with --expect-fail (default: none).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "tcurve/billiards.hpp"
#include "tcurve/cli.hpp"
#include "tcurve/cyclic_cover.hpp"
#include "tcurve/error.hpp"
#include "tcurve/hypergeom.hpp"
#include "tcurve/lyapunov.hpp"
#include "tcurve/schwarz_christoffel.hpp"
#include "tcurve/triangle_family.hpp"

using namespace tcurve;
using std::numbers::pi;

namespace {

// tolerances and budgets
constexpr double kSpectrumSeconds = 1.0;
constexpr double kDualSeconds = 10.0;
constexpr double kModuliTol = 1e-10;
constexpr double kMinpolyTol = 1e-12;
constexpr double kReI3Tol = 1e-12;
constexpr double kSimilarityTol = 1e-6;
constexpr double kBetaTol = 1e-10;
constexpr double kSCSeconds = 30.0;
constexpr double kCircleTol = 1e-12;
constexpr double kAngleTol = 1e-10;
constexpr double kAreaTol = 1e-9;

const std::vector<std::pair<i64, i64>> kGeomPairs{{5, 7}, {5, 9}, {5, 11}, {5, 13},
                                                   {4, 5}, {4, 7}, {4, 9}, {4, 11}, {4, 13}};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;
    void require(bool ok, const std::string& why) {
        if (!ok) failures.push_back(why);
        pass = pass && ok;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::pair<i64, i64>> odd_coprime(i64 lo, i64 hi) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 m = lo; m <= hi; m += 2)
        for (i64 n = m + 2; n <= hi; n += 2)
            if (std::gcd(m, n) == 1) out.push_back({m, n});
    return out;
}

void c1(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    int code = run_cli({"spectrum", "3", "5", "--format", "json"}, out, err);
    double dt = seconds_since(t0);
    o.require(code == 0, "exit " + std::to_string(code));
    if (code != 0) return;
    auto j = nlohmann::json::parse(out.str());
    std::vector<std::string> lam;
    std::vector<i64> reps;
    for (const auto& e : j["results"]["entries"]) {
        lam.push_back(e["lambda"]["exact"]);
        reps.push_back(e["representative"]);
    }
    o.require(lam == std::vector<std::string>{"1/1", "4/7", "2/7", "1/7"}, "lambda list");
    o.require(reps == std::vector<i64>{1, 2, 4, 7}, "representatives");
    o.require(dt < kSpectrumSeconds, "too slow");
    o.detail << "lambda {7/7,4/7,2/7,1/7}, reps {1,2,4,7}, " << dt << " s";
}

void c2(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    i64 checked = 0;
    for (auto [m, n] : odd_coprime(3, 15)) {
        auto inv = build(m, n);
        auto bc = base_change_orders(inv.cover);
        for (i64 i = 1; i < inv.N; ++i) {
            if (!is_admissible(inv.cover, i, bc)) continue;
            ++checked;
            o.require(split_lambda(inv, i) == lyapunov_ratio(inv.cover, i, bc),
                      "(" + std::to_string(m) + "," + std::to_string(n) + ") i=" + std::to_string(i));
        }
    }
    double dt = seconds_since(t0);
    o.require(dt < kDualSeconds, "too slow");
    o.detail << checked << " admissible indices, exact equality, " << dt << " s";
}

void c3(Outcome& o) {
    for (i64 n = 4; n <= 20; n += 2) {
        i64 k = n / 2;
        CoverFamily fam(n, {1, n - 1, 1, n - 1});
        auto bc = base_change_orders(fam);
        std::vector<Rational> pipeline;
        for (i64 j = 1; j <= k - 1; ++j) pipeline.push_back(lyapunov_ratio(fam, k - j, bc));
        std::vector<Rational> closed;
        for (i64 j = 1; j <= k - 1; ++j) closed.push_back(Rational(k - j, k - 1));
        o.require(pipeline == closed, "n=" + std::to_string(n) + " even spectrum");
        auto ev = spectrum_veech_even(n);
        o.require(ev.entries.size() == closed.size(), "n=" + std::to_string(n) + " closed form size");
        for (std::size_t j = 0; j < closed.size() && j < ev.entries.size(); ++j)
            o.require(ev.entries[j].lambda == closed[j], "n=" + std::to_string(n) + " closed form");
        if (n >= 6) {
            std::vector<Rational> odd;
            for (std::size_t j = 0; j < pipeline.size(); j += 2) odd.push_back(pipeline[j]);
            std::vector<Rational> q;
            for (const auto& e : spectrum_veech_quotient(n).entries) q.push_back(e.lambda);
            o.require(q == odd, "n=" + std::to_string(n) + " quotient");
        }
    }
    o.detail << "n = 4..20 even, pipeline = (k-j)/(k-1), quotients = odd-index sublists";
}

void c4(Outcome& o) {
    i64 spectra = 0, families = 0;
    for (auto [m, n] : odd_coprime(3, 15)) {
        auto s = spectrum_general(m, n);
        if (!s.certified) continue;
        ++spectra;
        auto ones = std::count_if(s.entries.begin(), s.entries.end(),
                                  [](const SpectrumEntry& e) { return e.lambda == Rational(1); });
        o.require(ones == 1, "(" + std::to_string(m) + "," + std::to_string(n) + ") entries equal to 1");
    }
    // coprime sweep; for gcd(m,n) > 1 see the README
    for (i64 m = 2; m <= 15; ++m)
        for (i64 n = m + 1; n <= 15; ++n) {
            if (std::gcd(m, n) != 1 || m * n < 6) continue;
            ++families;
            auto inv = build(m, n);
            o.require(higgs_indices(inv.cover) == orbit_of(inv, 1),
                      "(" + std::to_string(m) + "," + std::to_string(n) + ") higgs != orbit of 1");
        }
    o.detail << spectra << " certified spectra with a single 1; higgs = orbit(1) on " << families
             << " coprime families";
}

void c5(Outcome& o) {
    i64 fams = 0;
    for (i64 m = 2; m <= 15; ++m)
        for (i64 n = 2; n <= 15; ++n) {
            if (m * n < 6) continue;
            auto inv = build(m, n);
            ++fams;
            std::vector<i64> ex(inv.cover.a.begin(), inv.cover.a.end());
            o.require(genus_Z(inv) == oracle::cyclic_cover_genus(inv.N, ex),
                      "genus_Z (" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
    for (auto [m, n] : kGeomPairs) {
        i64 g = genus_X(build(m, n));
        o.require(g == unfold(table(m, n)).genus, "unfold genus (" + std::to_string(m) + "," + std::to_string(n) + ")");
        o.require(g == (m == 5 ? 2 * (n - 1) : 3 * (n - 1) / 2), "closed-form genus");
    }
    std::mt19937_64 rng(20241016);
    int random_ok = 0;
    while (random_ok < 50) {
        i64 N = std::uniform_int_distribution<i64>(2, 60)(rng);
        std::uniform_int_distribution<i64> d(1, N - 1);
        std::array<i64, 4> a{d(rng), d(rng), d(rng), 0};
        a[3] = mod(-(a[0] + a[1] + a[2]), N);
        if (a[3] == 0 || std::gcd(std::gcd(std::gcd(a[0], a[1]), std::gcd(a[2], a[3])), N) != 1) continue;
        CoverFamily f(N, a);
        ++random_ok;
        for (auto pt : {DegenerationPoint::Zero, DegenerationPoint::One, DegenerationPoint::Infinity})
            o.require(degeneration(f, pt).arithmetic_genus() == genus_smooth_fiber(f), "degeneration identity");
    }
    o.detail << fams << " families genus_Z; 9 unfolding genera; 50 random degenerations x 3 points";
}

void c6(Outcome& o) {
    double worst = 0;
    for (auto [m, n] : kGeomPairs) worst = std::max(worst, moduli_deviation(horizontal_cylinders(m, n)));
    o.require(worst < kModuliTol, "deviation");
    o.detail << "max relative deviation " << worst;
}

void c7(Outcome& o) {
    double r = 0, d = 0;
    for (i64 n : {7, 9, 11, 13}) {
        r = std::max(r, std::abs(minpoly_residual(n)));
        d = std::max(d, std::abs(re_I3(n) - (std::cos(pi / n) + std::cos(pi / 5))));
    }
    o.require(r < kMinpolyTol, "residual");
    o.require(d < kReI3Tol, "Re(I3)");
    o.detail << "max residual " << r << ", max |Re(I3) - (cos(pi/n)+cos(pi/5))| " << d;
}

void c8(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0, beta = 0;
    for (auto [m, n] : kGeomPairs) {
        auto r = similarity_check(m, n);
        worst = std::max(worst, r.max_rel_err);
        if (m == 5) {
            o.require(r.beta_rel_err.has_value(), "beta path missing");
            beta = std::max(beta, r.beta_rel_err.value_or(1));
            double trig = (std::cos(pi / n) + std::cos(pi / 5)) / std::cos(pi / (2 * n));
            beta = std::max(beta, std::abs(sc_sides_m5(n).ratio() / trig - 1));
        }
    }
    double dt = seconds_since(t0);
    o.require(worst < kSimilarityTol, "similarity");
    o.require(beta < kBetaTol, "beta ratio");
    o.require(dt < kSCSeconds, "too slow");
    o.detail << "max side-ratio error " << worst << ", beta ratio error " << beta << ", " << dt << " s";
}

void c9(Outcome& o) {
    for (i64 m : {2, 3, 4, 5, 7, 9, 11, 13}) {
        i64 n = 9;
        if (std::gcd(m, n) != 1)
            for (n = 3; std::gcd(m, n) != 1; n += 2) {
            }
        auto v = sc_polygon(sc_spec(m, n)).vertices;
        i64 got = count_self_crossings(v), want = self_crossing_count(m), te = turning_excess(v);
        o.require(got == want, "m=" + std::to_string(m));
        o.detail << "m=" << m << ",n=" << n << ": " << got << " vs " << want << " (turning excess " << te << ") ";
    }
}

void c10(Outcome& o) {
    for (auto [m, n] : std::vector<std::pair<i64, i64>>{{5, 9}, {4, 7}}) {
        auto fd = fundamental_domain(m, n);
        std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ") ";
        o.require(std::abs(std::abs(fd.z0 - fd.center) - fd.radius) < kCircleTol, tag + "circle");
        o.require(std::abs(fd.angle_at_i - pi / n) < kAngleTol, tag + "angle at i");
        o.require(std::abs(fd.angle_at_z0 - pi / m) < kAngleTol, tag + "angle at z0");
        double area_err = std::abs(fd.area - pi * (1 - 1.0 / m - 1.0 / n));
        o.require(area_err < kAreaTol, tag + "area");
        o.detail << tag << "area error " << area_err << " ";
    }
}

void c11(Outcome& o) {
    o.require(trace_field_degree(3, 5) == 2, "r(3,5)");
    o.require(trace_field_degree(2, 5) == 2, "r(2,5)");
    o.require(trace_field_degree(2, 3) == 1, "r(2,3)");
    i64 cnt = 0;
    for (auto [m, n] : odd_coprime(3, 15)) {
        ++cnt;
        o.require(trace_field_degree(m, n) <= euler_phi(m * n) / 4, "bound");
    }
    auto p = primitivity(3, 5);
    o.require(!p.algebraically_primitive, "algebraic primitivity");
    o.require(p.geometrically_primitive == Tri::Yes, "geometric primitivity");
    o.detail << "r = 2, 2, 1; bound on " << cnt << " pairs; (3,5) algebraic=false geometric=Yes";
}

void c12(Outcome& o) {
    o.require(lyapunov_ratio(CoverFamily(20, {7, 13, 17, 3}), 3) == Rational(1, 3), "lambda_2");
    std::ostringstream out, err;
    int code = run_cli({"spectrum", "2", "5", "--format", "json"}, out, err);
    o.require(code == 0, "exit");
    bool flagged = false;
    if (code == 0) {
        auto j = nlohmann::json::parse(out.str());
        for (const auto& f : j["flags"]) flagged |= f.get<std::string>().find("odd Veech discrepancy") != std::string::npos;
    }
    o.require(flagged, "discrepancy flag");
    o.detail << "lambda_2 = 1/3 on (20,[7,13,17,3]); report flags the odd Veech discrepancy";
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int a = 1; a < argc; ++a) {
        std::string s = argv[a];
        if (s == "--expect-fail" && a + 1 < argc) {
            std::stringstream ss(argv[++a]);
            for (std::string tok; std::getline(ss, tok, ',');) expected.insert(std::stoi(tok));
        }
    }
    std::vector<std::function<void(Outcome&)>> cs{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
    std::set<int> failed;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        Outcome o;
        try {
            cs[k](o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "threw: " << e.what();
        }
        int id = static_cast<int>(k) + 1;
        if (!o.pass) failed.insert(id);
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str();
        if (!o.failures.empty()) {
            std::cout << " [failed:";
            for (std::size_t f = 0; f < o.failures.size() && f < 8; ++f) std::cout << (f ? ", " : " ") << o.failures[f];
            if (o.failures.size() > 8) std::cout << ", ...";
            std::cout << "]";
        }
        std::cout << "\n";
    }
    std::cout << (12 - failed.size()) << "/12 pass";
    if (!expected.empty()) {
        std::cout << " (expected failures:";
        for (int e : expected) std::cout << " " << e;
        std::cout << ")";
    }
    std::cout << "\n";
    return failed == expected ? 0 : 1;
}
