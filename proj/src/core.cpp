#include "parahiggs/core.hpp"

#include "parahiggs/errors.hpp"

#include <algorithm>
#include <set>

namespace parahiggs {

const WeightList& ParabolicBundleData::at(const std::string& point) const {
    static const WeightList empty;
    auto it = weights.find(point);
    if (it == weights.end()) {
        if (rank == 0) return empty;
        throw Error(ErrorKind::ViolatedFlag, "no weights at point '" + point + "'");
    }
    return it->second;
}

void validate_surface(const MarkedSurface& surface) {
    if (surface.genus < 0) throw Error(ErrorKind::Schema, "negative genus");
    std::set<std::string> seen;
    for (const auto& p : surface.points)
        if (!seen.insert(p).second) throw Error(ErrorKind::Schema, "duplicate point label '" + p + "'");
}

void validate(const ParabolicBundleData& bundle, const MarkedSurface& surface) {
    if (bundle.rank < 0) throw Error(ErrorKind::ViolatedFlag, "negative rank");
    if (bundle.rank == 0 && bundle.degree != 0)
        throw Error(ErrorKind::ViolatedFlag, "empty bundle must have degree 0");
    for (const auto& [point, _] : bundle.weights)
        if (std::find(surface.points.begin(), surface.points.end(), point) == surface.points.end())
            throw Error(ErrorKind::SurfaceMismatch, "weights given at unknown point '" + point + "'");
    for (const auto& point : surface.points) {
        const WeightList& w = bundle.at(point);
        if (static_cast<int>(w.size()) != bundle.rank)
            throw Error(ErrorKind::ViolatedFlag, "point '" + point + "' has " +
                                                     std::to_string(w.size()) + " weights, rank is " +
                                                     std::to_string(bundle.rank));
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i] < 0 || w[i] >= 1)
                throw Error(ErrorKind::ViolatedFlag,
                            "weight " + w[i].to_string() + " at '" + point + "' not in [0,1)");
            if (i > 0 && !(w[i - 1] < w[i]))
                throw Error(ErrorKind::ViolatedFlag,
                            "weights at '" + point + "' not strictly increasing");
        }
    }
}

void require_disjoint_weights(const ParabolicBundleData& a, const ParabolicBundleData& b,
                              const MarkedSurface& surface) {
    for (const auto& point : surface.points) {
        const WeightList& wa = a.at(point);
        const WeightList& wb = b.at(point);
        for (const auto& x : wa)
            if (std::binary_search(wb.begin(), wb.end(), x))
                throw Error(ErrorKind::WeightCollision,
                            "weight " + x.to_string() + " repeated at '" + point + "'");
    }
}

Rational weight_sum(const ParabolicBundleData& bundle, const MarkedSurface& surface) {
    Rational total;
    for (const auto& point : surface.points)
        for (const auto& w : bundle.at(point)) total += w;
    return total;
}

Rational pdeg(const ParabolicBundleData& bundle, const MarkedSurface& surface) {
    return Rational(bundle.degree) + weight_sum(bundle, surface);
}

Rational pmu(const ParabolicBundleData& bundle, const MarkedSurface& surface) {
    if (bundle.rank == 0) throw Error(ErrorKind::DimensionMismatch, "slope of an empty bundle");
    return pdeg(bundle, surface) / Rational(bundle.rank);
}

ParabolicBundleData direct_sum(const ParabolicBundleData& a, const ParabolicBundleData& b) {
    ParabolicBundleData out;
    out.rank = a.rank + b.rank;
    out.degree = a.degree + b.degree;
    std::set<std::string> points;
    for (const auto& [p, _] : a.weights) points.insert(p);
    for (const auto& [p, _] : b.weights) points.insert(p);
    for (const auto& p : points) {
        WeightList merged;
        const WeightList& wa = a.at(p);
        const WeightList& wb = b.at(p);
        std::merge(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(merged));
        if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
            throw Error(ErrorKind::WeightCollision, "direct sum repeats a weight at '" + p + "'");
        out.weights[p] = std::move(merged);
    }
    return out;
}

ParabolicBundleData parabolic_dual(const ParabolicBundleData& bundle, const MarkedSurface& surface) {
    ParabolicBundleData out;
    out.rank = bundle.rank;
    out.degree = -bundle.degree;
    for (const auto& point : surface.points) {
        WeightList w;
        for (const auto& a : bundle.at(point)) {
            if (a == 0) {
                w.push_back(a);
            } else {
                w.push_back(Rational(1) - a);
                out.degree -= 1;
            }
        }
        std::sort(w.begin(), w.end());
        out.weights[point] = std::move(w);
    }
    return out;
}

ParabolicBundleData twist_integral(const ParabolicBundleData& bundle, const MarkedSurface& surface,
                                   std::int64_t k) {
    ParabolicBundleData out = bundle;
    out.degree += static_cast<std::int64_t>(bundle.rank) * k * surface.s();
    return out;
}

ParabolicBundleData twist_parabolic_line(const ParabolicBundleData& bundle,
                                         const MarkedSurface& surface, const std::string& point,
                                         const Rational& x0) {
    if (std::find(surface.points.begin(), surface.points.end(), point) == surface.points.end())
        throw Error(ErrorKind::SurfaceMismatch, "unknown point '" + point + "'");
    if (x0 < 0 || x0 >= 1) throw Error(ErrorKind::ViolatedFlag, "twist parameter not in [0,1)");
    const WeightList& old = bundle.at(point);
    if (std::binary_search(old.begin(), old.end(), x0))
        throw Error(ErrorKind::WeightCollision, "twist parameter equals a weight");
    ParabolicBundleData out = bundle;
    if (x0 == 0) return out;
    WeightList w;
    int below = 0;
    for (const auto& a : old) {
        if (a < x0) ++below;
        w.push_back((a - x0 + Rational(1)).frac());
    }
    std::sort(w.begin(), w.end());
    out.weights[point] = std::move(w);
    out.degree += bundle.rank - below;
    return out;
}

ParabolicBundleData make_bundle(int rank, std::int64_t degree,
                                std::map<std::string, WeightList> weights) {
    ParabolicBundleData b;
    b.rank = rank;
    b.degree = degree;
    b.weights = std::move(weights);
    return b;
}

}  // namespace parahiggs
