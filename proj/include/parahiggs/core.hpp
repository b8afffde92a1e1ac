#pragma once

#include "parahiggs/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace parahiggs {

struct MarkedSurface {
    int genus = 0;
    std::vector<std::string> points;

    int s() const { return static_cast<int>(points.size()); }
    friend bool operator==(const MarkedSurface&, const MarkedSurface&) = default;
};

using WeightList = std::vector<Rational>;

// Rank 0 is the empty bundle: degree 0 and empty weight lists.
struct ParabolicBundleData {
    int rank = 0;
    std::int64_t degree = 0;
    std::map<std::string, WeightList> weights;

    const WeightList& at(const std::string& point) const;
    friend bool operator==(const ParabolicBundleData&, const ParabolicBundleData&) = default;
};

enum class HomConstraint { Parabolic, StronglyParabolic };

void validate_surface(const MarkedSurface& surface);

// Throws ViolatedFlag unless every point carries `rank` strictly increasing weights in [0,1).
void validate(const ParabolicBundleData& bundle, const MarkedSurface& surface);

// Throws WeightCollision if some point has a weight shared by both bundles.
void require_disjoint_weights(const ParabolicBundleData& a, const ParabolicBundleData& b,
                              const MarkedSurface& surface);

Rational weight_sum(const ParabolicBundleData& bundle, const MarkedSurface& surface);
Rational pdeg(const ParabolicBundleData& bundle, const MarkedSurface& surface);
Rational pmu(const ParabolicBundleData& bundle, const MarkedSurface& surface);

ParabolicBundleData direct_sum(const ParabolicBundleData& a, const ParabolicBundleData& b);
ParabolicBundleData parabolic_dual(const ParabolicBundleData& bundle, const MarkedSurface& surface);
// E(kD)
ParabolicBundleData twist_integral(const ParabolicBundleData& bundle, const MarkedSurface& surface,
                                   std::int64_t k);
ParabolicBundleData twist_parabolic_line(const ParabolicBundleData& bundle,
                                         const MarkedSurface& surface, const std::string& point,
                                         const Rational& x0);

// Convenience constructor used heavily by tests and the CLI.
ParabolicBundleData make_bundle(int rank, std::int64_t degree,
                                std::map<std::string, WeightList> weights);

}  // namespace parahiggs
