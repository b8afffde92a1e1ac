#pragma once

#include "parahiggs/core.hpp"
#include "parahiggs/triple.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace parahiggs {

// Discrete type of a subtriple T' = (E1', E2'). w1/w2 hold 1-based weight indices per surface point.
struct SubtripleInvariants {
    int r1p = 0;
    int r2p = 0;
    std::int64_t d1p = 0;
    std::int64_t d2p = 0;
    std::vector<std::vector<int>> w1;
    std::vector<std::vector<int>> w2;

    friend auto operator<=>(const SubtripleInvariants&, const SubtripleInvariants&) = default;
    friend bool operator==(const SubtripleInvariants&, const SubtripleInvariants&) = default;
};

struct Wall {
    Rational sigma;
    std::vector<SubtripleInvariants> witnesses;
};

// A subtriple type with the same sigma-independent slope data as T: equal at every sigma.
struct Coincidence {
    int r1p = 0;
    int r2p = 0;
    std::int64_t total_degree = 0;
    std::vector<std::vector<int>> w1;
    std::vector<std::vector<int>> w2;

    friend auto operator<=>(const Coincidence&, const Coincidence&) = default;
    friend bool operator==(const Coincidence&, const Coincidence&) = default;
};

struct WallReport {
    std::vector<Wall> walls;
    std::vector<Coincidence> coincidences;
};

// upper == nullopt means +infinity.
struct SigmaWindow {
    Rational lower;
    std::optional<Rational> upper;
};

struct EpsilonReport {
    Rational via_pdeg;
    Rational via_recipe;
};

// The destabilizing subtriple type for r1 > r2 and its quotient.
struct DestabilizingType {
    TripleData sub;
    TripleData quot;
    std::vector<int> r_p;  // per surface point
};

enum class TripleVerdict { NonEmptyIrreducible, Empty };

const char* to_string(TripleVerdict v);

Rational sigma_deg(const TripleData& t, const Rational& sigma);
Rational sigma_slope(const TripleData& t, const Rational& sigma);

SigmaWindow sigma_window(const TripleData& t);

// Sum over points of r_p for the map E2 -> E1 (requires r1 >= r2).
int total_r_p(const TripleData& t);

DestabilizingType destabilizing_type(const TripleData& t);
EpsilonReport epsilon_both(const TripleData& t);
Rational epsilon(const TripleData& t);
Rational sigma_L(const TripleData& t);

TripleData dualize(const TripleData& t);
// Returns t if r1 >= r2, otherwise its dual.
TripleData oriented(const TripleData& t);

// Numerical walls in the open interval (lo, hi). hi == nullopt is rejected with UnboundedInterval.
WallReport enumerate_walls(const TripleData& t, const Rational& lo, const std::optional<Rational>& hi,
                           bool include_dependent);

std::vector<SubtripleInvariants> witnesses_at(const TripleData& t, const Rational& sigma);
std::vector<Coincidence> coincidences(const TripleData& t);
bool is_generic_at(const TripleData& t, const Rational& sigma);

Rational sigma_one(const TripleData& t);
Rational sigma_two_bound(const TripleData& t);

TripleVerdict large_sigma_nonempty(const TripleData& t);

}  // namespace parahiggs
