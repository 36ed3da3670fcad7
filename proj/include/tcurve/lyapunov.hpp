#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcurve/arith.hpp"
#include "tcurve/triangle_family.hpp"

namespace tcurve {

struct SpectrumEntry {
    i64 representative = 0;
    Rational lambda;
    i64 multiplicity = 1;
};

struct LyapunovSpectrum {
    std::vector<SpectrumEntry> entries; // descending by lambda
    i64 total_rank = 0;
    std::string normalization;
    bool certified = false;
    std::vector<std::string> flags;
};

// corrected weighting (mn - e1 m - e2 n)/(mn - m - n)
Rational split_lambda(const FamilyInvariants& inv, i64 i);

LyapunovSpectrum spectrum_general(i64 m, i64 n);
LyapunovSpectrum spectrum_veech_even(i64 n);
LyapunovSpectrum spectrum_veech_quotient(i64 n);
LyapunovSpectrum spectrum_veech_odd(i64 n);

struct SpectrumReport {
    std::vector<Rational> defects;
    std::optional<i64> denominator_bound; // 2g-2+s
    bool denominators_ok = true;
    std::optional<Rational> sum;          // present when the spectrum is complete
};

SpectrumReport spectrum_report(const LyapunovSpectrum& s, std::optional<i64> genus = std::nullopt,
                               std::optional<i64> cusps = std::nullopt);

} // namespace tcurve
