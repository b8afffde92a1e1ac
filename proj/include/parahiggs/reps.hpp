#pragma once

#include "parahiggs/core.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace parahiggs {

using WeightSystem = std::map<std::string, WeightList>;  // point -> weights

struct HolonomyClass {
    std::vector<Rational> phases;  // eigenvalues exp(2 pi i phase)
};

struct OrbifoldData {
    MarkedSurface surface;
    std::map<std::string, int> orders;                                     // point -> m
    std::map<std::string, std::map<std::string, std::vector<int>>> l;      // bundle -> point -> l
};

struct ComponentCount {
    int count = 0;
    std::vector<std::int64_t> admissible_a;
    std::int64_t total_degree = 0;  // a + b
    std::vector<bool> boundary;     // per admissible a: |tau| == tau_L
};

HolonomyClass holonomy_from_weights(const ParabolicBundleData& bundle, const std::string& point);

// a + b forced by vanishing total parabolic degree.
std::int64_t pdeg_zero_degrees(int p, int q, const WeightSystem& v, const WeightSystem& w,
                               const MarkedSurface& surface);

ComponentCount component_count(int p, int q, const WeightSystem& v, const WeightSystem& w,
                               const MarkedSurface& surface);

void validate_orbifold(const OrbifoldData& data);

std::map<std::string, WeightSystem> orbifold_to_weights(const OrbifoldData& data);

ComponentCount orbifold_component_count(const OrbifoldData& data, int p, int q);

}  // namespace parahiggs
