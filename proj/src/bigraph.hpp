#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "rational.hpp"

namespace ydc {

struct Edge {
    int white = 0;
    int black = 0;
    auto operator<=>(const Edge&) const = default;
};

// Simple bipartite graph with labeled vertex sets {0..whites-1}, {0..blacks-1}.
// Every vertex must be incident to an edge (the empty graph is allowed).
class BipartiteGraph {
  public:
    BipartiteGraph() = default;
    BipartiteGraph(int whites, int blacks, std::vector<Edge> edges);

    int white_count() const { return whites_; }
    int black_count() const { return blacks_; }
    int vertex_count() const { return whites_ + blacks_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::vector<int> white_degrees() const;
    std::vector<int> black_degrees() const;

    bool is_forest() const;

    auto operator<=>(const BipartiteGraph&) const = default;

  private:
    int whites_ = 0;
    int blacks_ = 0;
    std::vector<Edge> edges_;  // sorted, unique
};

// A graph with one marked edge.
struct DecoratedGraph {
    BipartiteGraph graph;
    Edge decorated;

    DecoratedGraph() = default;
    DecoratedGraph(BipartiteGraph g, Edge d);

    auto operator<=>(const DecoratedGraph&) const = default;
};

// wperm[i] = new index of old white i, and likewise for blacks.
BipartiteGraph relabeled(const BipartiteGraph& g, const std::vector<int>& wperm,
                         const std::vector<int>& bperm);
DecoratedGraph relabeled(const DecoratedGraph& d, const std::vector<int>& wperm,
                         const std::vector<int>& bperm);

// Canonical representative of the isomorphism class (colors fixed): minimum,
// over white relabelings compatible with degree invariants, of the sorted
// black-adjacency bitmask vector. Two graphs are isomorphic iff their
// canonical forms are equal.
BipartiteGraph canonicalize(const BipartiteGraph& g);
DecoratedGraph canonicalize(const DecoratedGraph& d);

// Formal rational combination of canonical representatives.
template <typename Term>
class FormalSum {
  public:
    using Map = std::map<Term, Rat>;

    FormalSum() = default;

    void add(const Term& t, const Rat& c) {
        if (c == 0) return;
        Term key = canonicalize(t);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [t, c] : o.terms_) add(t, -c);
        return *this;
    }
    FormalSum scaled(const Rat& f) const {
        FormalSum out;
        if (f == 0) return out;
        out.terms_ = terms_;
        for (auto& [t, c] : out.terms_) c *= f;
        return out;
    }

    bool operator==(const FormalSum&) const = default;

  private:
    Map terms_;
};

using GraphSum = FormalSum<BipartiteGraph>;
using DecoratedSum = FormalSum<DecoratedGraph>;

}  // namespace ydc
