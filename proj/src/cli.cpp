#include "parahiggs/cli.hpp"

#include "parahiggs/errors.hpp"
#include "parahiggs/flagalg.hpp"
#include "parahiggs/higgs.hpp"
#include "parahiggs/homcalc.hpp"
#include "parahiggs/instance_io.hpp"
#include "parahiggs/reps.hpp"
#include "parahiggs/triples.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <sstream>

namespace parahiggs::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string input;
    std::string format = "json";
    int places = 6;
    std::string lo;
    std::string hi;
    std::string sigma;
    bool include_dependent = false;
};

// Writes an exact value and records its decimal rendering under "decimal".
void put(json& j, const std::string& key, const Rational& v, int places) {
    j[key] = v.to_string();
    j["decimal"][key] = v.to_decimal(places);
}

void put_opt(json& j, const std::string& key, const std::optional<Rational>& v, int places) {
    if (v) {
        put(j, key, *v, places);
    } else {
        j[key] = nullptr;
        j[key + "_infinite"] = true;
    }
}

json witness_json(const SubtripleInvariants& w) {
    return json{{"r1p", w.r1p}, {"r2p", w.r2p}, {"d1p", w.d1p}, {"d2p", w.d2p}, {"w1", w.w1}, {"w2", w.w2}};
}

json coincidence_json(const Coincidence& c) {
    return json{{"r1p", c.r1p}, {"r2p", c.r2p}, {"total_degree", c.total_degree}, {"w1", c.w1}, {"w2", c.w2}};
}

json triple_json(const TripleData& t) {
    return json{{"E1", bundle_to_json(t.e1)}, {"E2", bundle_to_json(t.e2)}};
}

Rational parse_sigma(const std::string& text) { return Rational::parse(text); }

// ---- text rendering ----

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "n/a";
    return v.dump();
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (k == "decimal" || k == "grid") continue;
            flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
        }
    } else if (j.is_array()) {
        bool scalars = std::all_of(j.begin(), j.end(), [](const json& e) { return !e.is_structured(); });
        if (scalars) {
            std::string s;
            for (size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + scalar_text(j[i]);
            rows.emplace_back(prefix, "[" + s + "]");
        } else {
            for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
        }
    } else {
        rows.emplace_back(prefix, scalar_text(j));
    }
}

void emit(const json& j, const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        out << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    if (opt.format == "csv") {
        out << "key,value\n";
        for (const auto& [k, v] : rows) out << k << "," << v << "\n";
        return;
    }
    for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
    if (j.contains("points"))
        for (const auto& p : j.at("points"))
            if (p.contains("grid")) {
                out << "grid at " << p.at("point").get<std::string>() << ":\n";
                for (const auto& line : p.at("grid")) out << "  " << line.get<std::string>() << "\n";
            }
}

// ---- commands ----

json cmd_higgs_classify(const Instance& inst, const Options& o) {
    UpqHiggsData h = as_higgs(inst);
    Classification c = classify(h);
    json j;
    j["verdict"] = to_string(c.verdict);
    put(j, "tau", c.tau, o.places);
    put(j, "tau_M", c.bounds.tau_M, o.places);
    put(j, "epsilon", c.bounds.epsilon, o.places);
    put(j, "tau_L", c.bounds.tau_L, o.places);
    if (c.minima) {
        j["triple"] = triple_json(c.minima->triple);
        j["degenerate_orientation"] = c.minima->degenerate_orientation;
        json w;
        put(w, "sigma", Rational(2 * h.surface.genus - 2), o.places);
        put(w, "sigma_m", c.window->lower, o.places);
        put_opt(w, "sigma_M", c.window->upper, o.places);
        if (c.sigma_L) put(w, "sigma_L", *c.sigma_L, o.places);
        w["placement"] = c.placement;
        j["window"] = w;
    }
    return j;
}

json cmd_higgs_invariants(const Instance& inst, const Options& o) {
    UpqHiggsData h = as_higgs(inst);
    ToledoBounds b = bounds(h);
    json j;
    j["p"] = h.p();
    j["q"] = h.q();
    j["a"] = h.v.degree;
    j["b"] = h.w.degree;
    put(j, "pdeg_V", pdeg(h.v, h.surface), o.places);
    put(j, "pdeg_W", pdeg(h.w, h.surface), o.places);
    put(j, "pmu_V", pmu(h.v, h.surface), o.places);
    put(j, "pmu_W", pmu(h.w, h.surface), o.places);
    put(j, "tau", toledo(h), o.places);
    put(j, "tau_M", b.tau_M, o.places);
    put(j, "epsilon", b.epsilon, o.places);
    put(j, "tau_L", b.tau_L, o.places);
    put(j, "moduli_dimension", moduli_dimension(h), o.places);
    return j;
}

json cmd_higgs_dimension(const Instance& inst, const Options& o) {
    UpqHiggsData h = as_higgs(inst);
    json j;
    j["genus"] = h.surface.genus;
    j["s"] = h.surface.s();
    j["rank"] = h.p() + h.q();
    put(j, "moduli_dimension", moduli_dimension(h), o.places);
    put(j, "gl_dimension", gl_dimension(h.p() + h.q(), h.surface.genus, h.surface.s()), o.places);
    return j;
}

json cmd_triple_window(const Instance& inst, const Options& o) {
    TripleData t = as_triple(inst);
    SigmaWindow w = sigma_window(t);
    json j;
    j["r1"] = t.r1();
    j["r2"] = t.r2();
    put(j, "sigma_m", w.lower, o.places);
    put_opt(j, "sigma_M", w.upper, o.places);
    put(j, "sigma_one", sigma_one(t), o.places);
    if (t.r1() != t.r2()) {
        TripleData ot = oriented(t);
        put(j, "sigma_L", sigma_L(ot), o.places);
    } else {
        put(j, "sigma_two_bound", sigma_two_bound(t), o.places);
    }
    return j;
}

json cmd_triple_sigma_l(const Instance& inst, const Options& o) {
    TripleData t = as_triple(inst);
    TripleData ot = oriented(t);
    EpsilonReport e = epsilon_both(ot);
    json j;
    j["orientation"] = t.r1() > t.r2() ? "direct" : "dual";
    put(j, "epsilon", e.via_pdeg, o.places);
    put(j, "epsilon_recipe", e.via_recipe, o.places);
    j["epsilon_routes_agree"] = e.via_pdeg == e.via_recipe;
    put_opt(j, "sigma_M", sigma_window(ot).upper, o.places);
    put(j, "sigma_L", sigma_L(ot), o.places);
    return j;
}

json cmd_triple_walls(const Instance& inst, const Options& o, std::vector<std::pair<Rational, size_t>>& csv) {
    TripleData t = as_triple(inst);
    SigmaWindow w = sigma_window(t);
    Rational lo = o.lo.empty() ? w.lower : parse_sigma(o.lo);
    std::optional<Rational> hi = o.hi.empty() ? w.upper : std::optional<Rational>(parse_sigma(o.hi));
    WallReport r = enumerate_walls(t, lo, hi, o.include_dependent);
    json j;
    put(j, "lo", lo, o.places);
    put(j, "hi", *hi, o.places);
    json walls = json::array();
    for (const auto& wall : r.walls) {
        json e;
        put(e, "sigma", wall.sigma, o.places);
        e["num_witnesses"] = wall.witnesses.size();
        json ws = json::array();
        for (const auto& x : wall.witnesses) ws.push_back(witness_json(x));
        e["witnesses"] = ws;
        walls.push_back(e);
        csv.emplace_back(wall.sigma, wall.witnesses.size());
    }
    j["walls"] = walls;
    if (o.include_dependent) {
        json cs = json::array();
        for (const auto& c : r.coincidences) cs.push_back(coincidence_json(c));
        j["coincidences"] = cs;
    }
    return j;
}

json cmd_triple_nonempty(const Instance& inst, const Options& o) {
    TripleData t = as_triple(inst);
    json j;
    j["verdict"] = to_string(large_sigma_nonempty(t));
    j["lhs"] = t.e1.degree + static_cast<std::int64_t>(t.r1()) * t.surface.s() - t.e2.degree;
    j["sum_r_p"] = total_r_p(t);
    put(j, "sigma_one", sigma_one(t), o.places);
    put(j, "sigma_two_bound", sigma_two_bound(t), o.places);
    return j;
}

struct FlagPair {
    ParabolicPoint source;
    ParabolicPoint target;
};

std::vector<std::pair<std::string, FlagPair>> flag_pairs(const Instance& inst) {
    if (inst.kind != InstanceKind::Flags) throw Error(ErrorKind::Schema, "expected a flags instance");
    const auto& src = bundle_named(inst, "source");
    const auto& tgt = bundle_named(inst, "target");
    std::vector<std::pair<std::string, FlagPair>> out;
    for (const auto& x : inst.surface.points) {
        FlagPair fp{ParabolicPoint(src.at(x)), ParabolicPoint(tgt.at(x))};
        for (const auto& b : fp.source.weights)
            if (std::binary_search(fp.target.weights.begin(), fp.target.weights.end(), b))
                throw Error(ErrorKind::WeightCollision, "source and target share a weight at '" + x + "'");
        out.emplace_back(x, fp);
    }
    return out;
}

json cmd_flag_rp(const Instance& inst, const Options&) {
    json pts = json::array();
    int total = 0;
    bool agree_all = true;
    for (const auto& [x, fp] : flag_pairs(inst)) {
        json e;
        e["point"] = x;
        int greedy = r_p(fp.source, fp.target);
        e["greedy"] = greedy;
        bool agree = true;
        try {
            int bf = r_p_bruteforce(fp.source, fp.target);
            e["bruteforce"] = bf;
            agree = agree && bf == greedy;
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::TooLarge) throw;
            e["bruteforce"] = nullptr;
        }
        if (fp.source.dim() == fp.target.dim()) {
            int st = r_p_stepfunction(fp.source, fp.target);
            e["stepfunction"] = st;
            agree = agree && st == greedy;
        } else {
            e["stepfunction"] = nullptr;
        }
        e["agree"] = agree;
        e["r_p"] = greedy;
        agree_all = agree_all && agree;
        total += greedy;
        pts.push_back(e);
    }
    return json{{"points", pts}, {"r_p", total}, {"agree", agree_all}};
}

json cmd_flag_generic_map(const Instance& inst, const Options&) {
    json pts = json::array();
    for (const auto& [x, fp] : flag_pairs(inst)) {
        StaircasePattern p = generic_map_pattern(fp.source, fp.target);
        json e;
        e["point"] = x;
        e["rows"] = p.rows;
        e["cols"] = p.cols;
        e["allowed"] = p.allowed;
        e["marks"] = p.marks;
        e["image_indices"] = p.image_indices;
        e["generic_rank"] = generic_rank(fp.source, fp.target);
        e["min_coker"] = min_coker(fp.source, fp.target);
        std::vector<std::string> grid(static_cast<size_t>(p.rows), std::string(static_cast<size_t>(p.cols), '.'));
        for (const auto& [r, c] : p.allowed) grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = '*';
        for (const auto& [r, c] : p.marks) grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = '1';
        e["grid"] = grid;
        pts.push_back(e);
    }
    return json{{"points", pts}};
}

json cmd_flag_subset(const Instance& inst, const Options& o) {
    json pts = json::array();
    for (const auto& [x, fp] : flag_pairs(inst)) {
        WeightSubset ws = destabilizing_weight_subset(fp.source, fp.target);
        std::vector<int> both = ws.I;
        both.insert(both.end(), ws.J.begin(), ws.J.end());
        std::sort(both.begin(), both.end());
        std::vector<int> rest;
        for (int j = 1; j <= fp.target.dim(); ++j)
            if (!std::binary_search(both.begin(), both.end(), j)) rest.push_back(j);
        json e;
        e["point"] = x;
        e["I"] = ws.I;
        e["J"] = ws.J;
        e["union"] = both;
        e["complement"] = rest;
        e["r_p"] = static_cast<int>(ws.J.size());
        put(e, "epsilon_recipe", epsilon_recipe_point(fp.source, fp.target), o.places);
        pts.push_back(e);
    }
    return json{{"points", pts}};
}

json components_json(const ComponentCount& c) {
    json j;
    j["count"] = c.count;
    j["admissible_a"] = c.admissible_a;
    j["total_degree"] = c.total_degree;
    j["boundary"] = c.boundary;
    return j;
}

json cmd_reps_components(const Instance& inst, const Options&) {
    if (inst.kind != InstanceKind::Higgs) throw Error(ErrorKind::Schema, "expected a higgs instance");
    const auto& v = bundle_named(inst, "V");
    const auto& w = bundle_named(inst, "W");
    json j = components_json(component_count(v.rank, w.rank, v.weights, w.weights, inst.surface));
    j["p"] = v.rank;
    j["q"] = w.rank;
    return j;
}

json cmd_orbifold_components(const Instance& inst, const Options&) {
    if (inst.kind != InstanceKind::Orbifold) throw Error(ErrorKind::Schema, "expected an orbifold instance");
    const auto& l = inst.orbifold.l;
    if (!l.count("V") || !l.count("W") || inst.surface.points.empty())
        throw Error(ErrorKind::Schema, "orbifold components needs bundles 'V' and 'W' on at least one point");
    const std::string& x0 = inst.surface.points.front();
    int p = static_cast<int>(l.at("V").at(x0).size());
    int q = static_cast<int>(l.at("W").at(x0).size());
    json j = components_json(orbifold_component_count(inst.orbifold, p, q));
    j["p"] = p;
    j["q"] = q;
    return j;
}

json cmd_check_generic(const Instance& inst, const Options& o) {
    TripleData t;
    if (inst.kind == InstanceKind::Higgs)
        t = minima_to_triple(as_higgs(inst)).triple;
    else
        t = as_triple(inst);
    Rational sigma = o.sigma.empty() ? Rational(2 * t.surface.genus - 2) : parse_sigma(o.sigma);
    auto ws = witnesses_at(t, sigma);
    auto cs = coincidences(t);
    json j;
    put(j, "sigma", sigma, o.places);
    j["generic"] = ws.empty() && cs.empty();
    json wj = json::array();
    for (const auto& w : ws) wj.push_back(witness_json(w));
    json cj = json::array();
    for (const auto& c : cs) cj.push_back(coincidence_json(c));
    j["witnesses"] = wj;
    j["coincidences"] = cj;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of parabolic U(p,q)-Higgs bundles and parabolic triples", "parahiggs"};
    app.require_subcommand(1);
    Options opt;
    std::function<json(const Instance&)> action;
    bool walls_csv = false;
    std::vector<std::pair<Rational, size_t>> csv_rows;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<json(const Instance&, const Options&)> fn) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->add_option("--input", opt.input, "Instance JSON file")->required();
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
        sub->add_option("--decimal-places", opt.places, "Digits in decimal annotations")->check(CLI::Range(0, 60));
        sub->callback([&, fn] { action = [&, fn](const Instance& i) { return fn(i, opt); }; });
        return sub;
    };

    CLI::App* higgs = app.add_subcommand("higgs", "U(p,q)-Higgs invariants")->require_subcommand(1);
    leaf(higgs, "classify", "Non-emptiness and connectedness verdict", cmd_higgs_classify);
    leaf(higgs, "invariants", "Toledo invariant and bounds", cmd_higgs_invariants);
    leaf(higgs, "dimension", "Moduli space dimension", cmd_higgs_dimension);

    CLI::App* triple = app.add_subcommand("triple", "Parabolic triple stability data")->require_subcommand(1);
    leaf(triple, "window", "Sigma window and related constants", cmd_triple_window);
    CLI::App* walls = leaf(triple, "walls", "Numerical walls in an open interval",
                           [&](const Instance& i, const Options& o) {
                               walls_csv = true;
                               return cmd_triple_walls(i, o, csv_rows);
                           });
    walls->add_option("--lo", opt.lo, "Lower end (default sigma_m)");
    walls->add_option("--hi", opt.hi, "Upper end (default sigma_M)");
    walls->add_flag("--include-dependent", opt.include_dependent, "Also report sigma-independent coincidences");
    leaf(triple, "sigma-l", "Epsilon and sigma_L", cmd_triple_sigma_l);
    leaf(triple, "nonempty", "Large-sigma non-emptiness for equal ranks", cmd_triple_nonempty);

    CLI::App* flag = app.add_subcommand("flag", "Pointwise flag combinatorics")->require_subcommand(1);
    leaf(flag, "rp", "r_p by greedy, matching and step function", cmd_flag_rp);
    leaf(flag, "generic-map", "Staircase pattern and generic representative", cmd_flag_generic_map);
    leaf(flag, "subset", "Destabilizing weight subsets", cmd_flag_subset);

    CLI::App* reps = app.add_subcommand("reps", "Representation varieties")->require_subcommand(1);
    leaf(reps, "components", "Count connected components", cmd_reps_components);
    CLI::App* orb = app.add_subcommand("orbifold", "Orbifold fundamental groups")->require_subcommand(1);
    leaf(orb, "components", "Count connected components", cmd_orbifold_components);

    CLI::App* check = app.add_subcommand("check", "Genericity checks")->require_subcommand(1);
    CLI::App* generic = leaf(check, "generic", "Is sigma free of numerical walls and coincidences", cmd_check_generic);
    generic->add_option("--sigma", opt.sigma, "Stability parameter (default 2g-2)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Instance inst = load_instance(opt.input);
        json result = action(inst);
        if (walls_csv && opt.format == "csv") {
            out << "sigma,num_witnesses\n";
            for (const auto& [s, n] : csv_rows) out << s.to_string() << "," << n << "\n";
        } else {
            emit(result, opt, out);
        }
        return 0;
    } catch (const Error& e) {
        if (opt.format == "json") {
            json body;
            body["error"]["kind"] = to_string(e.kind());
            body["error"]["message"] = e.what();
            out << body.dump(2) << "\n";
        }
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return is_validation_error(e.kind()) ? 2 : 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace parahiggs::cli
