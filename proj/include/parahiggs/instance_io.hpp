#pragma once

#include "parahiggs/core.hpp"
#include "parahiggs/higgs.hpp"
#include "parahiggs/reps.hpp"
#include "parahiggs/triple.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace parahiggs {

enum class InstanceKind { Higgs, Triple, Orbifold, Flags };

const char* to_string(InstanceKind kind);

struct Instance {
    InstanceKind kind = InstanceKind::Higgs;
    MarkedSurface surface;
    std::map<std::string, ParabolicBundleData> bundles;
    OrbifoldData orbifold;  // kind == Orbifold only
};

Instance parse_instance(const nlohmann::json& doc);
Instance load_instance(const std::string& path);

// Bundle names: higgs V/W, triple E1/E2, flags source/target.
UpqHiggsData as_higgs(const Instance& inst);
TripleData as_triple(const Instance& inst);
const ParabolicBundleData& bundle_named(const Instance& inst, const std::string& name);

nlohmann::json bundle_to_json(const ParabolicBundleData& b);
nlohmann::json surface_to_json(const MarkedSurface& s);

}  // namespace parahiggs
