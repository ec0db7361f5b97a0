#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bigraph.hpp"

namespace ydc {

// Sum over all ways of marking one edge.
DecoratedSum del_z(const BipartiteGraph& g);
DecoratedSum del_z(const GraphSum& s);

// For each other edge at the decorated black vertex, glue it onto the
// decorated edge (the white ends merge, parallel duplicates collapse).
DecoratedSum del_x(const DecoratedGraph& d);
DecoratedSum del_x(const DecoratedSum& s);

// Mirror image: glue at the decorated white vertex, black ends merge.
DecoratedSum del_y(const DecoratedGraph& d);
DecoratedSum del_y(const DecoratedSum& s);

struct CriterionReport {
    bool pass = true;
    int k_max = 0;                         // largest exponent checked
    std::map<int, DecoratedSum> residuals; // nonzero (del_x^k - (-del_y)^k) del_z only
    std::string cap_note;                  // why exponents beyond k_max vanish
};

// Checks (del_x^k - (-del_y)^k) del_z s = 0 for k = 1..k_max, where k_max is
// one less than the largest edge count in s (each gluing removes at least one
// edge, and a lone decorated edge has no gluing partners, so larger k vanish
// identically).
CriterionReport criterion_check(const GraphSum& s);

enum class ScanMode { exhaustive, random };

struct ScanCounterexample {
    GraphSum sum;
    int k = 0;
    size_t residual_terms = 0;
};

struct ScanReport {
    ScanMode mode = ScanMode::exhaustive;
    int max_edges = 0;
    std::uint64_t seed = 0;
    long long trials = 0;            // vectors checked beyond the base condition
    int graphs_enumerated = 0;
    int kernel_dim = 0;
    bool all_pass = true;
    std::vector<ScanCounterexample> counterexamples;
};

// All canonical graphs with 1..max_edges edges, deterministic order.
std::vector<BipartiteGraph> enumerate_graphs(int max_edges);

// Tests whether the base condition (del_x + del_y) del_z s = 0 forces the full
// criterion. The solution set of the base condition is the kernel of a linear
// map on the span of all graphs with <= max_edges edges; exhaustive mode
// checks every kernel basis vector (by linearity this covers every sum
// satisfying the base condition), random mode checks seeded integer
// combinations of the basis.
ScanReport conjecture_scan(int max_edges, ScanMode mode, long long trials, std::uint64_t seed,
                           int exhaustive_cap = 4);

}  // namespace ydc
