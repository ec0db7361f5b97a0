#include "ydcalc/ydcalc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "characters.hpp"
#include "derivations.hpp"
#include "embedding.hpp"
#include "functionals.hpp"
#include "jsonio.hpp"
#include "maps.hpp"
#include "partition.hpp"
#include "profile.hpp"
#include "rational.hpp"
#include "sbasis.hpp"

struct ydcalc_partition {
    ydc::Partition v;
};
struct ydcalc_profile {
    ydc::Profile v;
};
struct ydcalc_graph {
    ydc::BipartiteGraph v;
};
struct ydcalc_sum {
    ydc::GraphSum v;
};

namespace {

thread_local std::string g_error;

ydcalc_status invalid_arg(const char* msg) {
    g_error = msg;
    return YDCALC_ERR_INVALID;
}

template <typename F>
ydcalc_status guarded(F&& f) {
    try {
        f();
        return YDCALC_OK;
    } catch (const ydc::Error& e) {
        g_error = e.what();
        switch (e.code()) {
            case ydc::errc::invalid_input:
                return YDCALC_ERR_INVALID;
            case ydc::errc::limit_exceeded:
                return YDCALC_ERR_LIMIT;
            default:
                return YDCALC_ERR_INTERNAL;
        }
    } catch (const std::exception& e) {
        g_error = e.what();
        return YDCALC_ERR_INTERNAL;
    } catch (...) {
        g_error = "unknown failure";
        return YDCALC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out_json, ydc::Json j) { *out_json = dup_string(ydc::dump_json(j)); }

}  // namespace

extern "C" {

const char* ydcalc_last_error(void) { return g_error.c_str(); }

void ydcalc_string_free(char* s) { std::free(s); }

ydcalc_status ydcalc_partition_parse(const char* text, ydcalc_partition** out) {
    if (!text || !out) return invalid_arg("null argument");
    return guarded([&] { *out = new ydcalc_partition{ydc::Partition::parse(text)}; });
}

void ydcalc_partition_free(ydcalc_partition* p) { delete p; }

ydcalc_status ydcalc_profile_parse(const char* json_text, ydcalc_profile** out) {
    if (!json_text || !out) return invalid_arg("null argument");
    return guarded([&] {
        *out = new ydcalc_profile{ydc::profile_from_json(ydc::parse_json_text(json_text))};
    });
}

ydcalc_status ydcalc_profile_of_partition(const ydcalc_partition* p, ydcalc_profile** out) {
    if (!p || !out) return invalid_arg("null argument");
    return guarded([&] { *out = new ydcalc_profile{ydc::Profile::of_partition(p->v)}; });
}

void ydcalc_profile_free(ydcalc_profile* p) { delete p; }

ydcalc_status ydcalc_graph_parse(const char* json_text, ydcalc_graph** out) {
    if (!json_text || !out) return invalid_arg("null argument");
    return guarded(
        [&] { *out = new ydcalc_graph{ydc::graph_from_json(ydc::parse_json_text(json_text))}; });
}

void ydcalc_graph_free(ydcalc_graph* g) { delete g; }

ydcalc_status ydcalc_sum_parse(const char* json_text, ydcalc_sum** out) {
    if (!json_text || !out) return invalid_arg("null argument");
    return guarded(
        [&] { *out = new ydcalc_sum{ydc::graph_sum_from_json(ydc::parse_json_text(json_text))}; });
}

void ydcalc_sum_free(ydcalc_sum* s) { delete s; }

ydcalc_status ydcalc_functional(const ydcalc_partition* p, int k, char** out_json) {
    if (!p || !out_json) return invalid_arg("null argument");
    return guarded([&] {
        ydc::Rat v = ydc::s_k(p->v, k);
        ydc::Json out = ydc::Json::object();
        out["value"] = ydc::format_rat(v);
        out["config"] = {{"diagram", p->v.to_string()}, {"k", k}};
        emit(out_json, std::move(out));
    });
}

ydcalc_status ydcalc_functional_profile(const ydcalc_profile* p, int k, char** out_json) {
    if (!p || !out_json) return invalid_arg("null argument");
    return guarded([&] {
        ydc::Rat v = ydc::s_k(p->v, k);
        ydc::Json out = ydc::Json::object();
        out["value"] = ydc::format_rat(v);
        out["config"] = {{"profile", ydc::profile_to_json(p->v)}, {"k", k}};
        emit(out_json, std::move(out));
    });
}

ydcalc_status ydcalc_embed_count(const ydcalc_graph* g, const ydcalc_partition* p,
                                 char** out_json) {
    if (!g || !p || !out_json) return invalid_arg("null argument");
    return guarded([&] {
        ydc::Int n = ydc::count_embeddings(g->v, p->v);
        ydc::Json out = ydc::Json::object();
        out["count"] = n.get_str();
        out["config"] = {{"graph", ydc::graph_to_json(g->v)}, {"partition", p->v.to_string()}};
        emit(out_json, std::move(out));
    });
}

ydcalc_status ydcalc_embed_volume(const ydcalc_graph* g, const ydcalc_profile* omega,
                                  char** out_json) {
    if (!g || !omega || !out_json) return invalid_arg("null argument");
    return guarded([&] {
        ydc::Rat v = ydc::embedding_volume(g->v, omega->v);
        ydc::Json out = ydc::Json::object();
        out["volume"] = ydc::format_rat(v);
        out["config"] = {{"graph", ydc::graph_to_json(g->v)},
                         {"profile", ydc::profile_to_json(omega->v)}};
        emit(out_json, std::move(out));
    });
}

ydcalc_status ydcalc_mc(const ydcalc_graph* g, const ydcalc_profile* omega, long long samples,
                        uint64_t seed, int threads, char** out_json) {
    if (!g || !omega || !out_json) return invalid_arg("null argument");
    return guarded([&] {
        ydc::McResult r = ydc::mc_volume(g->v, omega->v, samples, seed, threads);
        ydc::Json out = ydc::mc_to_json(r, seed);
        out["config"] = {{"graph", ydc::graph_to_json(g->v)},
                         {"profile", ydc::profile_to_json(omega->v)},
                         {"samples", samples},
                         {"seed", seed},
                         {"threads", threads}};
        emit(out_json, std::move(out));
    });
}

ydcalc_status ydcalc_check_poly(const ydcalc_sum* s, char** out_json) {
    if (!s || !out_json) return invalid_arg("null argument");
    return guarded([&] {
        ydc::Json out = ydc::criterion_to_json(ydc::criterion_check(s->v));
        out["config"] = {{"terms", s->v.term_count()}};
        emit(out_json, std::move(out));
    });
}

ydcalc_status ydcalc_decompose(const ydcalc_sum* s, const ydcalc_profile* omega,
                               char** out_json) {
    if (!s || !omega || !out_json) return invalid_arg("null argument");
    return guarded([&] {
        ydc::Json out = ydc::decompose_report(s->v, omega->v);
        out["config"] = {{"terms", s->v.term_count()},
                         {"profile", ydc::profile_to_json(omega->v)}};
        emit(out_json, std::move(out));
    });
}

ydcalc_status ydcalc_character(const ydcalc_partition* mu, const ydcalc_partition* lambda,
                               int alpha, const char* method, int bound, char** out_json) {
    if (!mu || !lambda || !method || !out_json) return invalid_arg("null argument");
    return guarded([&] {
        std::string mode = method;
        bool with_maps = mode == "maps" || mode == "both";
        bool with_mn = mode == "mn" || mode == "both";
        if (!with_maps && !with_mn)
            ydc::fail(ydc::errc::invalid_input, "method must be maps, mn, or both");
        if (with_mn && alpha != 1)
            ydc::fail(ydc::errc::invalid_input, "the determinantal rule needs alpha = 1");

        ydc::Json out = ydc::Json::object();
        ydc::CharacterResult cm;
        if (with_maps) {
            cm = ydc::character_maps(mu->v, lambda->v, alpha, bound);
            out = ydc::character_to_json(cm);
        }
        if (with_mn) {
            ydc::Rat mn = ydc::normalized_sigma(mu->v, lambda->v);
            if (with_maps) {
                out["mn_value"] = ydc::format_rat(mn);
                out["match"] = (mn == cm.value);
            } else {
                out["value"] = ydc::format_rat(mn);
            }
        }
        out["config"] = {{"mu", mu->v.to_string()},
                         {"lambda", lambda->v.to_string()},
                         {"alpha", alpha},
                         {"method", mode},
                         {"bound", bound}};
        emit(out_json, std::move(out));
    });
}

ydcalc_status ydcalc_maps(const ydcalc_partition* mu, const ydcalc_partition* lambda, int list,
                          int bound, char** out_json) {
    if (!mu || !out_json) return invalid_arg("null argument");
    return guarded([&] {
        std::vector<ydc::GluedMap> maps = ydc::enumerate_gluings(mu->v, bound);
        long long oriented = 0, orientable = 0;
        for (const ydc::GluedMap& m : maps) {
            oriented += m.oriented;
            orientable += m.orientable;
        }
        ydc::Json out = ydc::Json::object();
        out["count"] = static_cast<long long>(maps.size());
        out["oriented"] = oriented;
        out["orientable"] = orientable;
        if (lambda) out["sums"] = ydc::map_sums_to_json(ydc::map_sums(maps, lambda->v));
        if (list) {
            ydc::Json ms = ydc::Json::array();
            for (const ydc::GluedMap& m : maps) ms.push_back(ydc::map_to_json(m));
            out["maps"] = std::move(ms);
        }
        ydc::Json cfg = {{"mu", mu->v.to_string()}, {"bound", bound}, {"list", list != 0}};
        if (lambda) cfg["lambda"] = lambda->v.to_string();
        out["config"] = std::move(cfg);
        emit(out_json, std::move(out));
    });
}

ydcalc_status ydcalc_scan(int max_edges, const char* mode, long long trials, uint64_t seed,
                          char** out_json) {
    if (!mode || !out_json) return invalid_arg("null argument");
    return guarded([&] {
        std::string m = mode;
        ydc::ScanMode sm;
        if (m == "exhaustive")
            sm = ydc::ScanMode::exhaustive;
        else if (m == "random")
            sm = ydc::ScanMode::random;
        else
            ydc::fail(ydc::errc::invalid_input, "mode must be exhaustive or random");
        ydc::Json out = ydc::scan_to_json(ydc::conjecture_scan(max_edges, sm, trials, seed));
        out["config"] = {{"max_edges", max_edges}, {"mode", m}, {"trials", trials}, {"seed", seed}};
        emit(out_json, std::move(out));
    });
}

}  // extern "C"
