#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ydcalc/ydcalc.h"

namespace {

template <typename T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    ~Handle() { Free(p); }
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
};

using PartitionH = Handle<ydcalc_partition, ydcalc_partition_free>;
using ProfileH = Handle<ydcalc_profile, ydcalc_profile_free>;
using GraphH = Handle<ydcalc_graph, ydcalc_graph_free>;
using SumH = Handle<ydcalc_sum, ydcalc_sum_free>;

// Exit codes: 0 computed, 1 internal fault, 2 bad input, 3 resource bound.
int status_exit(ydcalc_status st) {
    std::fprintf(stderr, "error: %s\n", ydcalc_last_error());
    switch (st) {
        case YDCALC_ERR_INVALID:
            return 2;
        case YDCALC_ERR_LIMIT:
            return 3;
        default:
            return 1;
    }
}

int finish(ydcalc_status st, char* out) {
    if (st != YDCALC_OK) return status_exit(st);
    std::printf("%s\n", out);
    ydcalc_string_free(out);
    return 0;
}

bool slurp(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int usage_error(const char* msg) {
    std::fprintf(stderr, "error: %s\n", msg);
    return 2;
}

constexpr const char* kDefaultProfile = R"({"breakpoints":[["-2/1","2/1"],["2/1","2/1"]]})";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for polynomial functions on Young diagrams"};
    app.require_subcommand(1);

    std::string f_partition, f_profile;
    int f_k = 2;
    auto* c_fun = app.add_subcommand("functional", "Evaluate the shape functional S_k");
    auto* f_part = c_fun->add_option("--partition", f_partition, "partition, e.g. 4,3,1");
    auto* f_prof = c_fun->add_option("--profile", f_profile, "profile JSON file");
    c_fun->add_option("-k,--k", f_k, "functional index")->required();
    f_part->excludes(f_prof);

    std::string e_graph, e_partition, e_profile;
    auto* c_embed = app.add_subcommand("embed", "Count or measure embeddings of a graph");
    c_embed->add_option("--graph", e_graph, "graph JSON file")->required();
    auto* e_part = c_embed->add_option("--partition", e_partition, "count into this diagram");
    auto* e_prof = c_embed->add_option("--profile", e_profile, "exact volume on this profile");
    e_part->excludes(e_prof);

    std::string m_graph, m_profile;
    long long m_samples = 1000000;
    std::uint64_t m_seed = 1;
    int m_threads = 1;
    auto* c_mc = app.add_subcommand("mc", "Monte Carlo embedding volume");
    c_mc->add_option("--graph", m_graph, "graph JSON file")->required();
    c_mc->add_option("--profile", m_profile, "profile JSON file")->required();
    c_mc->add_option("--samples", m_samples, "sample count");
    c_mc->add_option("--seed", m_seed, "RNG seed");
    c_mc->add_option("--threads", m_threads, "worker threads (result is thread-count independent)");

    std::string p_sum;
    auto* c_poly = app.add_subcommand("check-poly", "Polynomiality criterion for a formal sum");
    c_poly->add_option("--sum", p_sum, "formal sum JSON file")->required();

    std::string d_sum, d_profile;
    auto* c_dec =
        app.add_subcommand("decompose", "Criterion, S-basis fit, and volume identity for a sum");
    c_dec->add_option("--sum", d_sum, "formal sum JSON file")->required();
    auto* d_prof =
        c_dec->add_option("--profile", d_profile, "profile JSON file (default: flat-top triangle)");

    std::string ch_mu, ch_lambda, ch_method = "both";
    int ch_alpha = 1, ch_bound = 6;
    auto* c_chr = app.add_subcommand("character", "Normalized character via maps and/or the "
                                                  "determinantal rule");
    c_chr->add_option("--mu", ch_mu, "evaluation partition")->required();
    c_chr->add_option("--lambda", ch_lambda, "diagram partition")->required();
    c_chr->add_option("--alpha", ch_alpha, "deformation parameter, 1 or 2");
    c_chr->add_option("--method", ch_method, "maps | mn | both");
    c_chr->add_option("--bound", ch_bound, "face-type size cap");

    std::string mp_mu, mp_lambda;
    bool mp_list = false;
    int mp_bound = 6;
    auto* c_maps = app.add_subcommand("maps", "Enumerate gluings of a face type");
    c_maps->add_option("--mu", mp_mu, "face type partition")->required();
    auto* mp_lam = c_maps->add_option("--lambda", mp_lambda, "also sum embeddings into this diagram");
    c_maps->add_flag("--list", mp_list, "dump every gluing");
    c_maps->add_option("--bound", mp_bound, "face-type size cap");

    int s_max_edges = 3;
    std::string s_mode = "exhaustive";
    long long s_trials = 10000;
    std::uint64_t s_seed = 1;
    auto* c_scan = app.add_subcommand("conjecture-scan", "Kernel scan for the criterion");
    c_scan->add_option("--max-edges", s_max_edges, "largest edge count")->required();
    c_scan->add_option("--mode", s_mode, "exhaustive | random");
    c_scan->add_option("--trials", s_trials, "random vectors tried");
    c_scan->add_option("--seed", s_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    char* out = nullptr;

    if (*c_fun) {
        ydcalc_status st;
        if (f_prof->count()) {
            std::string text;
            if (!slurp(f_profile, text)) return usage_error("cannot read profile file");
            ProfileH prof;
            st = ydcalc_profile_parse(text.c_str(), &prof.p);
            if (st == YDCALC_OK) st = ydcalc_functional_profile(prof.p, f_k, &out);
            return finish(st, out);
        }
        if (!f_part->count()) return usage_error("functional needs --partition or --profile");
        PartitionH part;
        st = ydcalc_partition_parse(f_partition.c_str(), &part.p);
        if (st == YDCALC_OK) st = ydcalc_functional(part.p, f_k, &out);
        return finish(st, out);
    }

    if (*c_embed) {
        std::string text;
        if (!slurp(e_graph, text)) return usage_error("cannot read graph file");
        GraphH graph;
        ydcalc_status st = ydcalc_graph_parse(text.c_str(), &graph.p);
        if (st != YDCALC_OK) return status_exit(st);
        if (e_prof->count()) {
            std::string ptext;
            if (!slurp(e_profile, ptext)) return usage_error("cannot read profile file");
            ProfileH prof;
            st = ydcalc_profile_parse(ptext.c_str(), &prof.p);
            if (st == YDCALC_OK) st = ydcalc_embed_volume(graph.p, prof.p, &out);
            return finish(st, out);
        }
        if (!e_part->count()) return usage_error("embed needs --partition or --profile");
        PartitionH part;
        st = ydcalc_partition_parse(e_partition.c_str(), &part.p);
        if (st == YDCALC_OK) st = ydcalc_embed_count(graph.p, part.p, &out);
        return finish(st, out);
    }

    if (*c_mc) {
        std::string gtext, ptext;
        if (!slurp(m_graph, gtext)) return usage_error("cannot read graph file");
        if (!slurp(m_profile, ptext)) return usage_error("cannot read profile file");
        GraphH graph;
        ProfileH prof;
        ydcalc_status st = ydcalc_graph_parse(gtext.c_str(), &graph.p);
        if (st == YDCALC_OK) st = ydcalc_profile_parse(ptext.c_str(), &prof.p);
        if (st == YDCALC_OK)
            st = ydcalc_mc(graph.p, prof.p, m_samples, m_seed, m_threads, &out);
        return finish(st, out);
    }

    if (*c_poly) {
        std::string text;
        if (!slurp(p_sum, text)) return usage_error("cannot read sum file");
        SumH sum;
        ydcalc_status st = ydcalc_sum_parse(text.c_str(), &sum.p);
        if (st == YDCALC_OK) st = ydcalc_check_poly(sum.p, &out);
        return finish(st, out);
    }

    if (*c_dec) {
        std::string stext;
        if (!slurp(d_sum, stext)) return usage_error("cannot read sum file");
        std::string ptext = kDefaultProfile;
        if (d_prof->count() && !slurp(d_profile, ptext)) return usage_error("cannot read profile file");
        SumH sum;
        ProfileH prof;
        ydcalc_status st = ydcalc_sum_parse(stext.c_str(), &sum.p);
        if (st == YDCALC_OK) st = ydcalc_profile_parse(ptext.c_str(), &prof.p);
        if (st == YDCALC_OK) st = ydcalc_decompose(sum.p, prof.p, &out);
        return finish(st, out);
    }

    if (*c_chr) {
        PartitionH mu, lambda;
        ydcalc_status st = ydcalc_partition_parse(ch_mu.c_str(), &mu.p);
        if (st == YDCALC_OK) st = ydcalc_partition_parse(ch_lambda.c_str(), &lambda.p);
        if (st == YDCALC_OK)
            st = ydcalc_character(mu.p, lambda.p, ch_alpha, ch_method.c_str(), ch_bound, &out);
        return finish(st, out);
    }

    if (*c_maps) {
        PartitionH mu, lambda;
        ydcalc_status st = ydcalc_partition_parse(mp_mu.c_str(), &mu.p);
        if (st == YDCALC_OK && mp_lam->count())
            st = ydcalc_partition_parse(mp_lambda.c_str(), &lambda.p);
        if (st == YDCALC_OK)
            st = ydcalc_maps(mu.p, lambda.p, mp_list ? 1 : 0, mp_bound, &out);
        return finish(st, out);
    }

    if (*c_scan) {
        ydcalc_status st =
            ydcalc_scan(s_max_edges, s_mode.c_str(), s_trials, s_seed, &out);
        return finish(st, out);
    }

    return usage_error("no command");
}
