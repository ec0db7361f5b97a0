#include "derivations.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "linalg.hpp"

namespace ydc {

DecoratedSum del_z(const BipartiteGraph& g) {
    DecoratedSum out;
    for (const Edge& e : g.edges()) out.add(DecoratedGraph(g, e), Rat(1));
    return out;
}

DecoratedSum del_z(const GraphSum& s) {
    DecoratedSum out;
    for (const auto& [g, c] : s.terms())
        for (const Edge& e : g.edges()) out.add(DecoratedGraph(g, e), c);
    return out;
}

namespace {

// Glue edge f onto the decorated edge of d by merging the non-shared ends.
// merge_white: true when f shares the decorated black (white ends merge).
DecoratedGraph glue(const DecoratedGraph& d, const Edge& f, bool merge_white) {
    const BipartiteGraph& g = d.graph;
    int kept = merge_white ? d.decorated.white : d.decorated.black;
    int gone = merge_white ? f.white : f.black;
    auto renumber = [&](int v) {
        if (v == gone) v = kept;
        return v > gone ? v - 1 : v;
    };
    std::set<Edge> edges;
    for (const Edge& e : g.edges()) {
        Edge ne = merge_white ? Edge{renumber(e.white), e.black}
                              : Edge{e.white, renumber(e.black)};
        edges.insert(ne);
    }
    Edge dec = merge_white ? Edge{renumber(d.decorated.white), d.decorated.black}
                           : Edge{d.decorated.white, renumber(d.decorated.black)};
    BipartiteGraph out(g.white_count() - (merge_white ? 1 : 0),
                       g.black_count() - (merge_white ? 0 : 1),
                       std::vector<Edge>(edges.begin(), edges.end()));
    return DecoratedGraph(std::move(out), dec);
}

}  // namespace

DecoratedSum del_x(const DecoratedGraph& d) {
    DecoratedSum out;
    for (const Edge& f : d.graph.edges()) {
        if (f == d.decorated || f.black != d.decorated.black) continue;
        out.add(glue(d, f, true), Rat(1));
    }
    return out;
}

DecoratedSum del_x(const DecoratedSum& s) {
    DecoratedSum out;
    for (const auto& [d, c] : s.terms()) {
        for (const Edge& f : d.graph.edges()) {
            if (f == d.decorated || f.black != d.decorated.black) continue;
            out.add(glue(d, f, true), c);
        }
    }
    return out;
}

DecoratedSum del_y(const DecoratedGraph& d) {
    DecoratedSum out;
    for (const Edge& f : d.graph.edges()) {
        if (f == d.decorated || f.white != d.decorated.white) continue;
        out.add(glue(d, f, false), Rat(1));
    }
    return out;
}

DecoratedSum del_y(const DecoratedSum& s) {
    DecoratedSum out;
    for (const auto& [d, c] : s.terms()) {
        for (const Edge& f : d.graph.edges()) {
            if (f == d.decorated || f.white != d.decorated.white) continue;
            out.add(glue(d, f, false), c);
        }
    }
    return out;
}

CriterionReport criterion_check(const GraphSum& s) {
    CriterionReport rep;
    int max_edges = 0;
    for (const auto& [g, c] : s.terms()) max_edges = std::max(max_edges, g.edge_count());
    rep.k_max = std::max(1, max_edges - 1);
    rep.cap_note =
        "gluing removes at least one edge per step and a lone decorated edge has no partners, "
        "so both iterated derivatives vanish identically for k >= " +
        std::to_string(std::max(1, max_edges));
    DecoratedSum dz = del_z(s);
    DecoratedSum ax = dz, ay = dz;
    for (int k = 1; k <= rep.k_max; ++k) {
        ax = del_x(ax);
        ay = del_y(ay);
        DecoratedSum residual = ax;
        residual -= ay.scaled(Rat(k % 2 == 0 ? 1 : -1));
        if (!residual.is_zero()) {
            rep.pass = false;
            rep.residuals.emplace(k, std::move(residual));
        }
    }
    return rep;
}

std::vector<BipartiteGraph> enumerate_graphs(int max_edges) {
    if (max_edges < 1) fail(errc::invalid_input, "max_edges must be >= 1");
    if (max_edges > 6) fail(errc::limit_exceeded, "graph enumeration capped at 6 edges");
    std::set<BipartiteGraph> seen;
    for (int w = 1; w <= max_edges; ++w) {
        for (int b = 1; b <= max_edges; ++b) {
            std::vector<Edge> cells;
            for (int i = 0; i < w; ++i)
                for (int j = 0; j < b; ++j) cells.push_back({i, j});
            int ncells = static_cast<int>(cells.size());
            std::vector<int> pick;
            auto emit = [&]() {
                std::vector<Edge> edges;
                for (int idx : pick) edges.push_back(cells[idx]);
                std::vector<char> ws(w, 0), bs(b, 0);
                for (const Edge& e : edges) ws[e.white] = 1, bs[e.black] = 1;
                if (std::find(ws.begin(), ws.end(), 0) != ws.end()) return;
                if (std::find(bs.begin(), bs.end(), 0) != bs.end()) return;
                seen.insert(canonicalize(BipartiteGraph(w, b, std::move(edges))));
            };
            // all subsets of size 1..max_edges
            std::function<void(int)> rec = [&](int from) {
                if (!pick.empty()) emit();
                if (static_cast<int>(pick.size()) == max_edges) return;
                for (int i = from; i < ncells; ++i) {
                    pick.push_back(i);
                    rec(i + 1);
                    pick.pop_back();
                }
            };
            rec(0);
        }
    }
    return std::vector<BipartiteGraph>(seen.begin(), seen.end());
}

namespace {

GraphSum combine(const std::vector<BipartiteGraph>& graphs, const std::vector<Rat>& coeffs) {
    GraphSum out;
    for (size_t i = 0; i < graphs.size(); ++i) out.add(graphs[i], coeffs[i]);
    return out;
}

// nonzero residual exponent of the full criterion, or 0 if it passes
std::pair<int, size_t> first_violation(const GraphSum& s) {
    CriterionReport rep = criterion_check(s);
    if (rep.pass) return {0, 0};
    const auto& [k, residual] = *rep.residuals.begin();
    return {k, residual.term_count()};
}

}  // namespace

ScanReport conjecture_scan(int max_edges, ScanMode mode, long long trials, std::uint64_t seed,
                           int exhaustive_cap) {
    ScanReport rep;
    rep.mode = mode;
    rep.max_edges = max_edges;
    rep.seed = seed;
    if (mode == ScanMode::exhaustive && max_edges > exhaustive_cap)
        fail(errc::limit_exceeded, "exhaustive scan capped at " + std::to_string(exhaustive_cap) +
                                       " edges");
    std::vector<BipartiteGraph> graphs = enumerate_graphs(max_edges);
    rep.graphs_enumerated = static_cast<int>(graphs.size());

    // matrix of the base map G -> (del_x + del_y) del_z G over the graph span
    std::map<DecoratedGraph, int> row_of;
    std::vector<std::map<int, Rat>> cols(graphs.size());
    for (size_t i = 0; i < graphs.size(); ++i) {
        DecoratedSum dz = del_z(graphs[i]);
        DecoratedSum base = del_x(dz);
        base += del_y(dz);
        for (const auto& [d, c] : base.terms()) {
            auto [it, fresh] = row_of.emplace(d, static_cast<int>(row_of.size()));
            cols[i][it->second] = c;
        }
    }
    Matrix a(row_of.size(), std::vector<Rat>(graphs.size(), Rat(0)));
    for (size_t i = 0; i < graphs.size(); ++i)
        for (const auto& [r, c] : cols[i]) a[r][i] = c;
    std::vector<std::vector<Rat>> kernel = nullspace(std::move(a), static_cast<int>(graphs.size()));
    rep.kernel_dim = static_cast<int>(kernel.size());

    auto check_vector = [&](const std::vector<Rat>& v) {
        GraphSum s = combine(graphs, v);
        auto [k, nterms] = first_violation(s);
        if (k != 0) {
            rep.all_pass = false;
            if (rep.counterexamples.size() < 10)
                rep.counterexamples.push_back({s, k, nterms});
        }
    };

    if (mode == ScanMode::exhaustive) {
        for (const auto& v : kernel) check_vector(v);
        rep.trials = static_cast<long long>(kernel.size());
    } else {
        if (trials < 0) fail(errc::invalid_input, "negative trial count");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (long long t = 0; t < trials; ++t) {
            std::vector<Rat> v(graphs.size(), Rat(0));
            bool nonzero = false;
            for (size_t i = 0; i < graphs.size(); ++i) v[i] = 0;
            std::vector<Rat> weights(kernel.size());
            for (auto& w : weights) {
                int c = coeff(rng);
                w = c;
                if (c != 0) nonzero = true;
            }
            if (!nonzero && !kernel.empty()) weights[0] = 1;
            for (size_t j = 0; j < kernel.size(); ++j)
                if (weights[j] != 0)
                    for (size_t i = 0; i < graphs.size(); ++i) v[i] += weights[j] * kernel[j][i];
            check_vector(v);
        }
        rep.trials = trials;
    }
    return rep;
}

}  // namespace ydc
