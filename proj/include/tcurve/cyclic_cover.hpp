#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tcurve/arith.hpp"

namespace tcurve {

// y^N = x^a1 (x-1)^a2 (x-t)^a3, a4 the exponent at infinity
struct CoverFamily {
    i64 N = 0;
    std::array<i64, 4> a{};

    CoverFamily() = default;
    CoverFamily(i64 N_, std::array<i64, 4> a_); // validates
};

struct CharacterData {
    i64 index = 0;
    std::array<Rational, 4> sigma;
    i64 k = 0;
    i64 s = 0;
    i64 dim = 0;
    std::pair<i64, i64> hodge; // ((1,0)-rank, (0,1)-rank)
};

CharacterData character_data(const CoverFamily& fam, i64 i);

i64 genus_smooth_fiber(const CoverFamily& fam);

// genus of the cyclic cover of P^1 of degree d with local exponents e_p at the
// listed points (unramified points may be included with e_p ≡ 0); requires the
// cover to be connected, i.e. gcd(d, e_p...) = 1
i64 riemann_hurwitz_genus(i64 degree, std::span<const i64> exponents);

enum class DegenerationPoint { Zero, One, Infinity };

struct DegenerationData {
    i64 nodes = 0;
    std::pair<i64, i64> component_degree;
    std::pair<i64, i64> component_genus;
    std::pair<i64, i64> beta;
    // beta1*g1 + beta2*g2 + nodes - (beta1+beta2) + 1
    i64 arithmetic_genus() const;
};

DegenerationData degeneration_at_zero(const CoverFamily& fam);
// t -> 1 and t -> ∞ via the branch-point permutations
DegenerationData degeneration(const CoverFamily& fam, DegenerationPoint pt);

} // namespace tcurve
