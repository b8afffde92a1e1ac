#include "parahiggs/instance_io.hpp"

#include "parahiggs/errors.hpp"
#include "parahiggs/homcalc.hpp"

#include <fstream>

namespace parahiggs {

using nlohmann::json;

const char* to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::Higgs: return "higgs";
        case InstanceKind::Triple: return "triple";
        case InstanceKind::Orbifold: return "orbifold";
        case InstanceKind::Flags: return "flags";
    }
    return "unknown";
}

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::Schema, msg); }

const json& field(const json& obj, const char* name, const std::string& where) {
    if (!obj.is_object() || !obj.contains(name)) schema(where + ": missing field '" + name + "'");
    return obj.at(name);
}

std::int64_t as_int(const json& v, const std::string& where) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) {
        Rational r = Rational::parse(v.get<std::string>());
        if (r.is_integer()) return to_int64(r.num());
    }
    schema(where + ": expected an integer");
}

Rational as_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    schema(where + ": expected a rational string such as \"3/10\"");
}

MarkedSurface parse_surface(const json& doc) {
    const json& s = field(doc, "surface", "instance");
    MarkedSurface out;
    out.genus = static_cast<int>(as_int(field(s, "genus", "surface"), "surface.genus"));
    if (s.contains("points")) {
        if (!s.at("points").is_array()) schema("surface.points must be an array");
        for (const auto& p : s.at("points")) {
            if (!p.is_string()) schema("surface.points entries must be strings");
            out.points.push_back(p.get<std::string>());
        }
    }
    validate_surface(out);
    return out;
}

ParabolicBundleData parse_bundle(const json& b, const std::string& name) {
    const std::string where = "bundles." + name;
    ParabolicBundleData out;
    out.rank = static_cast<int>(as_int(field(b, "rank", where), where + ".rank"));
    out.degree = b.contains("degree") ? as_int(b.at("degree"), where + ".degree") : 0;
    if (b.contains("weights")) {
        const json& w = b.at("weights");
        if (!w.is_object()) schema(where + ".weights must be an object");
        for (const auto& [point, list] : w.items()) {
            if (!list.is_array()) schema(where + ".weights." + point + " must be an array");
            WeightList wl;
            for (const auto& v : list) wl.push_back(as_rational(v, where + ".weights." + point));
            out.weights[point] = std::move(wl);
        }
    }
    return out;
}

}  // namespace

Instance parse_instance(const json& doc) {
    if (!doc.is_object()) schema("instance must be a JSON object");
    Instance inst;
    const json& kind = field(doc, "kind", "instance");
    if (!kind.is_string()) schema("kind must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "higgs") inst.kind = InstanceKind::Higgs;
    else if (k == "triple") inst.kind = InstanceKind::Triple;
    else if (k == "orbifold") inst.kind = InstanceKind::Orbifold;
    else if (k == "flags") inst.kind = InstanceKind::Flags;
    else schema("unknown kind '" + k + "'");
    inst.surface = parse_surface(doc);
    if (inst.kind == InstanceKind::Orbifold) {
        inst.orbifold.surface = inst.surface;
        const json& orders = field(doc, "orders", "instance");
        if (!orders.is_object()) schema("orders must be an object");
        for (const auto& [x, m] : orders.items())
            inst.orbifold.orders[x] = static_cast<int>(as_int(m, "orders." + x));
        const json& l = field(doc, "l", "instance");
        if (!l.is_object()) schema("l must be an object");
        for (const auto& [bundle, per_point] : l.items()) {
            if (!per_point.is_object()) schema("l." + bundle + " must be an object");
            for (const auto& [x, list] : per_point.items()) {
                if (!list.is_array()) schema("l." + bundle + "." + x + " must be an array");
                std::vector<int> vals;
                for (const auto& v : list) vals.push_back(static_cast<int>(as_int(v, "l." + bundle + "." + x)));
                inst.orbifold.l[bundle][x] = std::move(vals);
            }
        }
        validate_orbifold(inst.orbifold);
        return inst;
    }
    const json& bundles = field(doc, "bundles", "instance");
    if (!bundles.is_object()) schema("bundles must be an object");
    for (const auto& [name, b] : bundles.items()) {
        inst.bundles[name] = parse_bundle(b, name);
        validate(inst.bundles[name], inst.surface);
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) schema("cannot open instance file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        schema(std::string("malformed JSON: ") + e.what());
    }
    return parse_instance(doc);
}

const ParabolicBundleData& bundle_named(const Instance& inst, const std::string& name) {
    auto it = inst.bundles.find(name);
    if (it == inst.bundles.end()) schema("instance has no bundle '" + name + "'");
    return it->second;
}

UpqHiggsData as_higgs(const Instance& inst) {
    if (inst.kind != InstanceKind::Higgs) schema("expected a higgs instance");
    UpqHiggsData h{bundle_named(inst, "V"), bundle_named(inst, "W"), inst.surface};
    validate_higgs(h);
    return h;
}

TripleData as_triple(const Instance& inst) {
    if (inst.kind != InstanceKind::Triple) schema("expected a triple instance");
    TripleData t{bundle_named(inst, "E1"), bundle_named(inst, "E2"), inst.surface};
    validate_triple(t);
    return t;
}

json bundle_to_json(const ParabolicBundleData& b) {
    json w = json::object();
    for (const auto& [x, list] : b.weights) {
        json arr = json::array();
        for (const auto& v : list) arr.push_back(v.to_string());
        w[x] = arr;
    }
    return json{{"rank", b.rank}, {"degree", b.degree}, {"weights", w}};
}

json surface_to_json(const MarkedSurface& s) {
    return json{{"genus", s.genus}, {"points", s.points}};
}

}  // namespace parahiggs
