#include "parahiggs/homcalc.hpp"

#include "parahiggs/errors.hpp"
#include "parahiggs/flagalg.hpp"

namespace parahiggs {

void validate_triple(const TripleData& t) {
    validate_surface(t.surface);
    validate(t.e1, t.surface);
    validate(t.e2, t.surface);
    require_disjoint_weights(t.e1, t.e2, t.surface);
}

BundleInvariants parhom_bundle(const ParabolicBundleData& source, const ParabolicBundleData& target,
                               const MarkedSurface& surface, HomConstraint c) {
    BundleInvariants out;
    const std::int64_t rs = source.rank, rt = target.rank;
    out.rank = rs * rt;
    out.degree = rs * target.degree - rt * source.degree;
    for (const auto& point : surface.points) {
        int dim = dim_parhom_point(ParabolicPoint(source.at(point)), ParabolicPoint(target.at(point)), c);
        out.degree += dim - out.rank;
    }
    out.pdeg = Rational(rs) * pdeg(target, surface) - Rational(rt) * pdeg(source, surface);
    return out;
}

Rational chi_bundle(const BundleInvariants& inv, int genus) {
    return Rational(inv.degree) + Rational(inv.rank) * Rational(1 - genus);
}

Rational chi_triple_pair(const TripleData& sub, const TripleData& quot) {
    if (!(sub.surface == quot.surface))
        throw Error(ErrorKind::SurfaceMismatch, "triples live on different surfaces");
    const MarkedSurface& x = sub.surface;
    const int g = x.genus;
    Rational chi = chi_bundle(parhom_bundle(sub.e1, quot.e1, x, HomConstraint::Parabolic), g);
    chi += chi_bundle(parhom_bundle(sub.e2, quot.e2, x, HomConstraint::Parabolic), g);
    chi -= chi_bundle(
        parhom_bundle(sub.e2, twist_integral(quot.e1, x, 1), x, HomConstraint::StronglyParabolic), g);
    return chi;
}

Rational triple_moduli_dimension(const TripleData& t) {
    return Rational(1) - chi_triple_pair(t, t);
}

Rational flip_codim_bound(const TripleData& sub, const TripleData& quot) {
    return -chi_triple_pair(sub, quot);
}

}  // namespace parahiggs
