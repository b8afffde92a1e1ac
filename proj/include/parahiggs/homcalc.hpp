#pragma once

#include "parahiggs/core.hpp"
#include "parahiggs/triple.hpp"

#include <cstdint>

namespace parahiggs {

struct BundleInvariants {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
    Rational pdeg;
    friend bool operator==(const BundleInvariants&, const BundleInvariants&) = default;
};

BundleInvariants parhom_bundle(const ParabolicBundleData& source, const ParabolicBundleData& target,
                               const MarkedSurface& surface, HomConstraint c);

// Riemann-Roch: deg + rank (1 - g).
Rational chi_bundle(const BundleInvariants& inv, int genus);

// chi of the deformation complex of homomorphisms from `sub` to `quot`.
Rational chi_triple_pair(const TripleData& sub, const TripleData& quot);

Rational triple_moduli_dimension(const TripleData& t);

Rational flip_codim_bound(const TripleData& sub, const TripleData& quot);

}  // namespace parahiggs
