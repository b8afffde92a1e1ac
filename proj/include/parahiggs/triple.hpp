#pragma once

#include "parahiggs/core.hpp"

namespace parahiggs {

// T = (E1, E2, phi) with phi: E2 -> E1(D). Only discrete invariants are stored.
struct TripleData {
    ParabolicBundleData e1;
    ParabolicBundleData e2;
    MarkedSurface surface;

    int r1() const { return e1.rank; }
    int r2() const { return e2.rank; }
    friend bool operator==(const TripleData&, const TripleData&) = default;
};

// Each component validated, and E1/E2 weights disjoint at every point.
void validate_triple(const TripleData& t);

}  // namespace parahiggs
