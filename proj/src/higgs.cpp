#include "parahiggs/higgs.hpp"

#include "parahiggs/errors.hpp"
#include "parahiggs/flagalg.hpp"

#include <algorithm>

namespace parahiggs {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::NonEmptyConnected: return "NonEmptyConnected";
        case Verdict::Empty: return "Empty";
        case Verdict::BoundaryCase: return "BoundaryCase";
        case Verdict::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

void validate_higgs(const UpqHiggsData& h) {
    validate_surface(h.surface);
    validate(h.v, h.surface);
    validate(h.w, h.surface);
    if (h.p() < 1 || h.q() < 1) throw Error(ErrorKind::ViolatedFlag, "V and W need positive rank");
    require_disjoint_weights(h.v, h.w, h.surface);
}

Rational toledo(const UpqHiggsData& h) {
    const int p = h.p(), q = h.q();
    return Rational(2 * p * q, p + q) * (pmu(h.v, h.surface) - pmu(h.w, h.surface));
}

MinimaTriple minima_to_triple(const UpqHiggsData& h) {
    const Rational tau = toledo(h);
    const std::int64_t k = 2 * static_cast<std::int64_t>(h.surface.genus) - 2;
    MinimaTriple out;
    out.triple.surface = h.surface;
    if (tau < 0) {
        out.triple.e1 = h.v;
        out.triple.e1.degree += h.p() * k;
        out.triple.e2 = h.w;
    } else {
        out.triple.e1 = h.w;
        out.triple.e1.degree += h.q() * k;
        out.triple.e2 = h.v;
        out.degenerate_orientation = tau == 0;
    }
    return out;
}

TripleData oriented_minima_triple(const UpqHiggsData& h) { return oriented(minima_to_triple(h).triple); }

ToledoBounds bounds(const UpqHiggsData& h) {
    const int p = h.p(), q = h.q();
    ToledoBounds b;
    b.tau_M = Rational(std::min(p, q) * (2 * h.surface.genus - 2 + h.surface.s()));
    TripleData t = oriented_minima_triple(h);
    for (const auto& x : h.surface.points)
        b.epsilon += epsilon_recipe_point(ParabolicPoint(t.e2.at(x)), ParabolicPoint(t.e1.at(x)));
    b.tau_L = b.tau_M;
    if (p != q) b.tau_L -= Rational(std::abs(p - q), p + q) * b.epsilon;
    return b;
}

Rational gl_dimension(int n, int genus, int s) {
    const Rational nn(n);
    return Rational(2) * (Rational(1) + Rational(genus - 1) * nn * nn +
                          Rational(s, 2) * (nn * nn - nn));
}

Rational moduli_dimension(const UpqHiggsData& h) {
    const Rational n(h.p() + h.q());
    return Rational(1) + Rational(h.surface.genus - 1) * n * n +
           Rational(h.surface.s(), 2) * (n * n - n);
}

Classification classify(const UpqHiggsData& h) {
    validate_higgs(h);
    Classification c;
    c.tau = toledo(h);
    c.bounds = bounds(h);
    const int g = h.surface.genus;
    if (g == 0 || h.surface.s() == 0) {
        c.verdict = Verdict::Unsupported;
        c.placement = "unsupported";
        return c;
    }
    c.minima = minima_to_triple(h);
    const TripleData& t = c.minima->triple;
    const Rational sigma(2 * g - 2);
    c.window = sigma_window(t);
    if (h.p() != h.q()) c.sigma_L = sigma_L(oriented(t));
    if (sigma < c.window->lower)
        c.placement = "below";
    else if (sigma == c.window->lower)
        c.placement = "lower-endpoint";
    else if (!c.window->upper || sigma < *c.window->upper)
        c.placement = "inside";
    else if (sigma == *c.window->upper)
        c.placement = "upper-endpoint";
    else
        c.placement = "above";
    if (!is_generic_at(t, sigma))
        throw Error(ErrorKind::NonGenericWeights,
                    "sigma = 2g-2 is a numerical wall or a sigma-independent coincidence");
    const Rational abs_tau = c.tau.abs();
    if (abs_tau < c.bounds.tau_L)
        c.verdict = Verdict::NonEmptyConnected;
    else if (abs_tau > c.bounds.tau_L)
        c.verdict = Verdict::Empty;
    else
        c.verdict = Verdict::BoundaryCase;
    return c;
}

}  // namespace parahiggs
