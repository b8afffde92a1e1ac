#pragma once

#include "parahiggs/core.hpp"
#include "parahiggs/triple.hpp"
#include "parahiggs/triples.hpp"

#include <optional>
#include <string>

namespace parahiggs {

// E = V + W with V of rank p, degree a and W of rank q, degree b.
struct UpqHiggsData {
    ParabolicBundleData v;
    ParabolicBundleData w;
    MarkedSurface surface;

    int p() const { return v.rank; }
    int q() const { return w.rank; }
};

enum class Verdict { NonEmptyConnected, Empty, BoundaryCase, Unsupported };

const char* to_string(Verdict v);

struct ToledoBounds {
    Rational tau_M;
    Rational epsilon;
    Rational tau_L;
};

struct MinimaTriple {
    TripleData triple;
    bool degenerate_orientation = false;  // tau == 0
};

struct Classification {
    Verdict verdict = Verdict::Unsupported;
    Rational tau;
    ToledoBounds bounds;
    std::optional<MinimaTriple> minima;
    std::optional<SigmaWindow> window;        // of the minima triple
    std::optional<Rational> sigma_L;          // of the oriented minima triple, when p != q
    std::string placement;                    // where 2g-2 sits relative to the window
};

void validate_higgs(const UpqHiggsData& h);

Rational toledo(const UpqHiggsData& h);

// Minima triple with r1 >= r2 (dualized when needed); the epsilon recipe runs on its weights.
TripleData oriented_minima_triple(const UpqHiggsData& h);

ToledoBounds bounds(const UpqHiggsData& h);

Rational moduli_dimension(const UpqHiggsData& h);
Rational gl_dimension(int n, int genus, int s);

MinimaTriple minima_to_triple(const UpqHiggsData& h);

Classification classify(const UpqHiggsData& h);

}  // namespace parahiggs
