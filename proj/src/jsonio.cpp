#include "jsonio.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ydc {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::invalid_input, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

Rat rat_value(const Json& v, const char* what) {
    if (!v.is_string()) bad(std::string(what) + " must be a rational string like \"3/2\"");
    return parse_rat(v.get<std::string>());
}

const Json& array_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) bad(std::string("field \"") + key + "\" must be an array");
    return v;
}

Json residual_entry(const Partition& lam, const Rat& r) {
    Json e = Json::object();
    e["partition"] = lam.to_string();
    e["residual"] = format_rat(r);
    return e;
}

}  // namespace

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("malformed json");
    return j;
}

std::string dump_json(const Json& j) { return j.dump(); }

Json profile_to_json(const Profile& p) {
    Json pts = Json::array();
    for (const auto& pt : p.breakpoints()) pts.push_back({format_rat(pt.z), format_rat(pt.w)});
    Json out = Json::object();
    out["breakpoints"] = std::move(pts);
    return out;
}

Profile profile_from_json(const Json& j) {
    std::vector<Profile::Point> pts;
    for (const Json& e : array_field(j, "breakpoints")) {
        if (!e.is_array() || e.size() != 2) bad("breakpoint must be a [z, w] pair");
        pts.push_back({rat_value(e[0], "breakpoint z"), rat_value(e[1], "breakpoint w")});
    }
    return Profile(std::move(pts));
}

Json graph_to_json(const BipartiteGraph& g) {
    Json es = Json::array();
    for (const Edge& e : g.edges()) es.push_back({e.white, e.black});
    Json out = Json::object();
    out["white"] = g.white_count();
    out["black"] = g.black_count();
    out["edges"] = std::move(es);
    return out;
}

BipartiteGraph graph_from_json(const Json& j) {
    int w = int_field(j, "white");
    int b = int_field(j, "black");
    std::vector<Edge> es;
    for (const Json& e : array_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            bad("edge must be a [white, black] index pair");
        es.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::sort(es.begin(), es.end());
    return BipartiteGraph(w, b, std::move(es));
}

Json graph_sum_to_json(const GraphSum& s) {
    Json ts = Json::array();
    for (const auto& [g, c] : s.terms()) {
        Json t = Json::object();
        t["coeff"] = format_rat(c);
        t["graph"] = graph_to_json(g);
        ts.push_back(std::move(t));
    }
    Json out = Json::object();
    out["terms"] = std::move(ts);
    return out;
}

GraphSum graph_sum_from_json(const Json& j) {
    GraphSum s;
    for (const Json& t : array_field(j, "terms")) {
        if (t.contains("decorated")) bad("plain graph sum has a decorated term");
        s.add(graph_from_json(field(t, "graph")), rat_value(field(t, "coeff"), "coeff"));
    }
    return s;
}

Json decorated_sum_to_json(const DecoratedSum& s) {
    Json ts = Json::array();
    for (const auto& [d, c] : s.terms()) {
        Json t = Json::object();
        t["coeff"] = format_rat(c);
        t["graph"] = graph_to_json(d.graph);
        t["decorated"] = {d.decorated.white, d.decorated.black};
        ts.push_back(std::move(t));
    }
    Json out = Json::object();
    out["terms"] = std::move(ts);
    return out;
}

DecoratedSum decorated_sum_from_json(const Json& j) {
    DecoratedSum s;
    for (const Json& t : array_field(j, "terms")) {
        const Json& d = array_field(t, "decorated");
        if (d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
            bad("decorated must be a [white, black] index pair");
        DecoratedGraph dg(graph_from_json(field(t, "graph")),
                          Edge{d[0].get<int>(), d[1].get<int>()});
        s.add(std::move(dg), rat_value(field(t, "coeff"), "coeff"));
    }
    return s;
}

Json spoly_to_json(const SPolynomial& p) {
    Json ts = Json::array();
    for (const auto& [mon, c] : p.terms()) {
        Json t = Json::object();
        t["gens"] = mon;
        t["coeff"] = format_rat(c);
        ts.push_back(std::move(t));
    }
    Json out = Json::object();
    out["terms"] = std::move(ts);
    return out;
}

SPolynomial spoly_from_json(const Json& j) {
    SPolynomial p;
    for (const Json& t : array_field(j, "terms")) {
        SMonomial mon;
        for (const Json& g : array_field(t, "gens")) {
            if (!g.is_number_integer() || g.get<int>() < 2) bad("gens entries must be integers >= 2");
            mon.push_back(g.get<int>());
        }
        std::sort(mon.begin(), mon.end());
        p.add(mon, rat_value(field(t, "coeff"), "coeff"));
    }
    return p;
}

Json zpoly_to_json(const ZPolynomial& p) {
    Json cs = Json::array();
    for (const SPolynomial& c : p.coeffs()) cs.push_back(spoly_to_json(c));
    Json out = Json::object();
    out["z_coeffs"] = std::move(cs);
    return out;
}

Json criterion_to_json(const CriterionReport& r) {
    Json res = Json::object();
    for (const auto& [k, ds] : r.residuals) res[std::to_string(k)] = decorated_sum_to_json(ds);
    Json out = Json::object();
    out["verdict"] = r.pass ? "pass" : "fail";
    out["residuals"] = std::move(res);
    out["k_max"] = r.k_max;
    out["cap_note"] = r.cap_note;
    return out;
}

Json scan_to_json(const ScanReport& r) {
    Json ces = Json::array();
    for (const ScanCounterexample& ce : r.counterexamples) {
        Json e = Json::object();
        e["k"] = ce.k;
        e["residual_terms"] = ce.residual_terms;
        e["sum"] = graph_sum_to_json(ce.sum);
        ces.push_back(std::move(e));
    }
    Json out = Json::object();
    out["verdict"] = r.all_pass ? "pass" : "fail";
    out["mode"] = r.mode == ScanMode::exhaustive ? "exhaustive" : "random";
    out["max_edges"] = r.max_edges;
    out["graphs_enumerated"] = r.graphs_enumerated;
    out["kernel_dim"] = r.kernel_dim;
    out["trials"] = r.trials;
    out["seed"] = r.seed;
    out["counterexamples"] = std::move(ces);
    return out;
}

Json zfit_to_json(const ZFit& f) {
    Json cs = Json::array();
    for (const Rat& c : f.coeffs) cs.push_back(format_rat(c));
    Json out = Json::object();
    out["coeffs"] = std::move(cs);
    out["is_polynomial"] = f.is_polynomial;
    if (!f.is_polynomial) out["witness_z"] = format_rat(f.witness_z);
    return out;
}

Json decomposition_to_json(const DecompositionReport& r) {
    Json cs = Json::array();
    for (const Rat& c : r.coeffs) cs.push_back(format_rat(c));
    Json out = Json::object();
    out["holds"] = r.holds;
    out["lhs"] = format_rat(r.lhs);
    out["rhs"] = format_rat(r.rhs);
    out["vertex_count"] = r.vertex_count;
    out["z_coeffs"] = std::move(cs);
    out["criterion_pass"] = r.criterion_pass;
    out["z_polynomial"] = r.z_polynomial;
    out["note"] = r.constants_note;
    return out;
}

Json fit_to_json(const FitReport& r) {
    Json res = Json::array();
    for (const auto& [lam, c] : r.residuals) res.push_back(residual_entry(lam, c));
    Json out = Json::object();
    out["status"] = r.status == FitReport::Status::fitted ? "fitted" : "infeasible";
    out["s_polynomial"] = spoly_to_json(r.poly);
    out["rank"] = r.rank;
    out["residuals"] = std::move(res);
    return out;
}

Json map_to_json(const GluedMap& m) {
    Json pairs = Json::array();
    for (const auto& [a, b] : m.pairing) pairs.push_back({a, b});
    Json out = Json::object();
    out["pairing"] = std::move(pairs);
    out["white_classes"] = m.white_classes;
    out["black_classes"] = m.black_classes;
    out["euler"] = m.euler_characteristic;
    out["component_euler"] = m.component_euler;
    out["orientable"] = m.orientable;
    out["oriented"] = m.oriented;
    out["graph"] = graph_to_json(m.underlying);
    return out;
}

Json map_sums_to_json(const MapSums& s) {
    Json out = Json::object();
    out["oriented_signed"] = format_rat(s.oriented_signed);
    out["all_signed"] = format_rat(s.all_signed);
    out["all_zonal"] = format_rat(s.all_zonal);
    out["maps"] = s.maps;
    out["oriented"] = s.oriented_count;
    out["orientable"] = s.orientable_count;
    return out;
}

Json character_to_json(const CharacterResult& c) {
    Json out = Json::object();
    out["value"] = format_rat(c.value);
    out["raw_sum"] = format_rat(c.raw);
    out["calibration"] = c.calibration > 0 ? "+1" : "-1";
    out["maps_enumerated"] = c.maps;
    return out;
}

Json mc_to_json(const McResult& r, std::uint64_t seed) {
    Json out = Json::object();
    out["estimate"] = r.estimate;
    out["stderr"] = r.stderr_est;
    out["samples"] = r.samples;
    out["seed"] = seed;
    return out;
}

Json decompose_report(const GraphSum& s, const Profile& omega) {
    int m = 0;
    for (const auto& [g, c] : s.terms()) m = std::max(m, g.vertex_count());
    std::vector<Partition> train = default_train(m);
    std::vector<Partition> test = default_test(m);
    FitReport fit = fit_s_basis(s, train, test);
    CriterionReport crit = criterion_check(s);
    DecompositionReport idc = decomposition_identity_check(s, omega);

    std::set<Partition> test_set(test.begin(), test.end());
    Json train_res = Json::array();
    Json test_res = Json::array();
    for (const auto& [lam, r] : fit.residuals)
        (test_set.count(lam) ? test_res : train_res).push_back(residual_entry(lam, r));

    Json out = Json::object();
    out["s_polynomial"] = spoly_to_json(fit.poly);
    out["criterion"] = criterion_to_json(crit);
    out["identity_check"] = decomposition_to_json(idc);
    out["train_rank"] = fit.rank;
    out["test_residuals"] = std::move(test_res);
    out["train_residuals"] = std::move(train_res);
    out["fit_status"] = fit.status == FitReport::Status::fitted ? "fitted" : "infeasible";
    return out;
}

}  // namespace ydc
