#include "parahiggs/reps.hpp"

#include "parahiggs/errors.hpp"
#include "parahiggs/higgs.hpp"

namespace parahiggs {

HolonomyClass holonomy_from_weights(const ParabolicBundleData& bundle, const std::string& point) {
    return HolonomyClass{bundle.at(point)};
}

namespace {

UpqHiggsData build(int p, int q, const WeightSystem& v, const WeightSystem& w,
                   const MarkedSurface& surface, std::int64_t a, std::int64_t b) {
    UpqHiggsData h;
    h.surface = surface;
    h.v = make_bundle(p, a, v);
    h.w = make_bundle(q, b, w);
    return h;
}

}  // namespace

std::int64_t pdeg_zero_degrees(int p, int q, const WeightSystem& v, const WeightSystem& w,
                               const MarkedSurface& surface) {
    UpqHiggsData h = build(p, q, v, w, surface, 0, 0);
    validate_higgs(h);
    Rational total = weight_sum(h.v, surface) + weight_sum(h.w, surface);
    if (!total.is_integer())
        throw Error(ErrorKind::NoIntegralSolution,
                    "total weight " + total.to_string() + " is not an integer");
    return -to_int64(total.num());
}

ComponentCount component_count(int p, int q, const WeightSystem& v, const WeightSystem& w,
                               const MarkedSurface& surface) {
    ComponentCount out;
    out.total_degree = pdeg_zero_degrees(p, q, v, w, surface);
    if (surface.genus == 0 || surface.s() == 0)
        throw Error(ErrorKind::Unsupported, "component count needs g > 0 and s > 0");
    const Rational wv = weight_sum(make_bundle(p, 0, v), surface);
    // tau = 2 (a + wv) when the total parabolic degree vanishes; tau_L <= tau_M bounds the search.
    const Rational tau_M(std::min(p, q) * (2 * surface.genus - 2 + surface.s()));
    const std::int64_t from = to_int64((-wv - tau_M / Rational(2)).floor());
    const std::int64_t to = to_int64((-wv + tau_M / Rational(2)).ceil());
    for (std::int64_t a = from; a <= to; ++a) {
        UpqHiggsData h = build(p, q, v, w, surface, a, out.total_degree - a);
        const Rational half_tau = Rational(a) + wv;
        const Rational half_tau_L = bounds(h).tau_L / Rational(2);
        if (half_tau.abs() > half_tau_L) continue;
        Classification c = classify(h);  // throws NonGenericWeights
        out.admissible_a.push_back(a);
        out.boundary.push_back(c.verdict == Verdict::BoundaryCase);
    }
    out.count = static_cast<int>(out.admissible_a.size());
    return out;
}

void validate_orbifold(const OrbifoldData& data) {
    validate_surface(data.surface);
    Rational hyperbolic(2 * data.surface.genus);
    for (const auto& x : data.surface.points) {
        auto it = data.orders.find(x);
        if (it == data.orders.end()) throw Error(ErrorKind::Schema, "no order at point '" + x + "'");
        if (it->second < 1) throw Error(ErrorKind::Schema, "order at '" + x + "' must be >= 1");
        hyperbolic += Rational(1) - Rational(1, it->second);
    }
    if (!(hyperbolic > 2))
        throw Error(ErrorKind::Schema, "orbifold is not hyperbolic: 2g + sum(1 - 1/m) = " +
                                           hyperbolic.to_string());
    for (const auto& [bundle, per_point] : data.l) {
        for (const auto& x : data.surface.points) {
            auto it = per_point.find(x);
            if (it == per_point.end())
                throw Error(ErrorKind::Schema, "bundle '" + bundle + "' has no l-vector at '" + x + "'");
            const int m = data.orders.at(x);
            const auto& l = it->second;
            for (size_t i = 0; i < l.size(); ++i) {
                if (l[i] < 0 || l[i] >= m)
                    throw Error(ErrorKind::ViolatedFlag, "l value out of range [0, m) at '" + x + "'");
                if (i > 0 && l[i - 1] >= l[i])
                    throw Error(ErrorKind::ViolatedFlag,
                                "l-vector of '" + bundle + "' at '" + x + "' not strictly increasing");
            }
        }
        for (const auto& [x, _] : per_point)
            if (!data.orders.count(x))
                throw Error(ErrorKind::SurfaceMismatch, "l-vector at unknown point '" + x + "'");
    }
}

std::map<std::string, WeightSystem> orbifold_to_weights(const OrbifoldData& data) {
    validate_orbifold(data);
    std::map<std::string, WeightSystem> out;
    for (const auto& [bundle, per_point] : data.l)
        for (const auto& [x, l] : per_point) {
            WeightList w;
            for (int v : l) w.push_back(Rational(v, data.orders.at(x)));
            out[bundle][x] = std::move(w);
        }
    return out;
}

ComponentCount orbifold_component_count(const OrbifoldData& data, int p, int q) {
    auto weights = orbifold_to_weights(data);
    if (!weights.count("V") || !weights.count("W"))
        throw Error(ErrorKind::Schema, "orbifold data needs bundles 'V' and 'W'");
    return component_count(p, q, weights["V"], weights["W"], data.surface);
}

}  // namespace parahiggs
