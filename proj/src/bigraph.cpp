#include "bigraph.hpp"

#include <algorithm>
#include <numeric>

namespace ydc {

BipartiteGraph::BipartiteGraph(int whites, int blacks, std::vector<Edge> edges)
    : whites_(whites), blacks_(blacks), edges_(std::move(edges)) {
    if (whites_ < 0 || blacks_ < 0) fail(errc::invalid_input, "negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        fail(errc::invalid_input, "duplicate edge");
    std::vector<char> wseen(whites_, 0), bseen(blacks_, 0);
    for (const Edge& e : edges_) {
        if (e.white < 0 || e.white >= whites_ || e.black < 0 || e.black >= blacks_)
            fail(errc::invalid_input, "edge endpoint out of range");
        wseen[e.white] = 1;
        bseen[e.black] = 1;
    }
    for (char s : wseen)
        if (!s) fail(errc::invalid_input, "isolated white vertex");
    for (char s : bseen)
        if (!s) fail(errc::invalid_input, "isolated black vertex");
}

std::vector<int> BipartiteGraph::white_degrees() const {
    std::vector<int> d(whites_, 0);
    for (const Edge& e : edges_) ++d[e.white];
    return d;
}

std::vector<int> BipartiteGraph::black_degrees() const {
    std::vector<int> d(blacks_, 0);
    for (const Edge& e : edges_) ++d[e.black];
    return d;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // returns false if already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

bool BipartiteGraph::is_forest() const {
    Dsu dsu(whites_ + blacks_);
    for (const Edge& e : edges_)
        if (!dsu.unite(e.white, whites_ + e.black)) return false;
    return true;
}

DecoratedGraph::DecoratedGraph(BipartiteGraph g, Edge d) : graph(std::move(g)), decorated(d) {
    const auto& es = graph.edges();
    if (!std::binary_search(es.begin(), es.end(), decorated))
        fail(errc::invalid_input, "decorated edge not in graph");
}

BipartiteGraph relabeled(const BipartiteGraph& g, const std::vector<int>& wperm,
                         const std::vector<int>& bperm) {
    if (static_cast<int>(wperm.size()) != g.white_count() ||
        static_cast<int>(bperm.size()) != g.black_count())
        fail(errc::invalid_input, "permutation size mismatch");
    std::vector<Edge> out;
    out.reserve(g.edges().size());
    for (const Edge& e : g.edges()) out.push_back({wperm[e.white], bperm[e.black]});
    return BipartiteGraph(g.white_count(), g.black_count(), std::move(out));
}

DecoratedGraph relabeled(const DecoratedGraph& d, const std::vector<int>& wperm,
                         const std::vector<int>& bperm) {
    return DecoratedGraph(relabeled(d.graph, wperm, bperm),
                          Edge{wperm[d.decorated.white], bperm[d.decorated.black]});
}

namespace {

constexpr int kMaxCanonWhites = 62;

// Whites are split into classes by (degree, sorted degrees of neighbors);
// the minimizing search only permutes within a class, which is sound because
// the invariant is preserved by isomorphisms and the block layout is fixed
// by the sorted class order.
struct CanonState {
    int whites, blacks;
    std::vector<std::vector<int>> class_members;  // target positions are blocks in this order
    std::vector<uint64_t> white_bit_by_black;     // adjacency row per black, bit = white slot
    std::vector<std::vector<int>> black_adj;      // black -> sorted list of whites
};

CanonState make_state(const BipartiteGraph& g) {
    if (g.white_count() > kMaxCanonWhites)
        fail(errc::limit_exceeded, "graph too large to canonicalize");
    CanonState st;
    st.whites = g.white_count();
    st.blacks = g.black_count();
    st.black_adj.assign(st.blacks, {});
    auto wdeg = g.white_degrees();
    auto bdeg = g.black_degrees();
    for (const Edge& e : g.edges()) st.black_adj[e.black].push_back(e.white);

    std::vector<std::pair<std::pair<int, std::vector<int>>, int>> keyed;
    keyed.reserve(st.whites);
    std::vector<std::vector<int>> wneigh(st.whites);
    for (const Edge& e : g.edges()) wneigh[e.white].push_back(bdeg[e.black]);
    for (int w = 0; w < st.whites; ++w) {
        std::sort(wneigh[w].begin(), wneigh[w].end());
        keyed.push_back({{wdeg[w], wneigh[w]}, w});
    }
    std::sort(keyed.begin(), keyed.end());
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) st.class_members.push_back({});
        st.class_members.back().push_back(keyed[i].second);
    }
    return st;
}

// Enumerate class-respecting white placements; reports the slot of each white.
template <typename Fn>
void for_each_placement(CanonState& st, Fn&& fn) {
    std::vector<int> slot(st.whites, 0);
    int base = 0;
    std::vector<int> starts;
    for (auto& cls : st.class_members) {
        starts.push_back(base);
        std::sort(cls.begin(), cls.end());
        base += static_cast<int>(cls.size());
    }
    // odometer over per-class permutations
    std::vector<std::vector<int>> perms = st.class_members;
    auto assign = [&]() {
        for (size_t c = 0; c < perms.size(); ++c)
            for (size_t i = 0; i < perms[c].size(); ++i)
                slot[perms[c][i]] = starts[c] + static_cast<int>(i);
        fn(slot);
    };
    // iterate: next_permutation on classes in mixed-radix order
    size_t k = perms.size();
    std::vector<bool> exhausted(k, false);
    while (true) {
        assign();
        size_t c = 0;
        for (; c < k; ++c) {
            if (std::next_permutation(perms[c].begin(), perms[c].end())) break;
        }
        if (c == k) break;
    }
}

struct CanonKey {
    std::vector<uint64_t> masks;
    int dec_white = -1;
    int dec_black_pos = -1;

    bool operator<(const CanonKey& o) const {
        if (masks != o.masks) return masks < o.masks;
        if (dec_white != o.dec_white) return dec_white < o.dec_white;
        return dec_black_pos < o.dec_black_pos;
    }
};

CanonKey key_for(const CanonState& st, const std::vector<int>& slot, const Edge* dec) {
    CanonKey key;
    key.masks.resize(st.blacks);
    for (int b = 0; b < st.blacks; ++b) {
        uint64_t m = 0;
        for (int w : st.black_adj[b]) m |= uint64_t(1) << slot[w];
        key.masks[b] = m;
    }
    uint64_t dec_mask = 0;
    if (dec) dec_mask = key.masks[dec->black];
    std::sort(key.masks.begin(), key.masks.end());
    if (dec) {
        key.dec_white = slot[dec->white];
        key.dec_black_pos = static_cast<int>(
            std::lower_bound(key.masks.begin(), key.masks.end(), dec_mask) - key.masks.begin());
    }
    return key;
}

BipartiteGraph graph_from_masks(int whites, const std::vector<uint64_t>& masks) {
    std::vector<Edge> edges;
    for (size_t b = 0; b < masks.size(); ++b) {
        uint64_t m = masks[b];
        while (m) {
            int w = __builtin_ctzll(m);
            m &= m - 1;
            edges.push_back({w, static_cast<int>(b)});
        }
    }
    return BipartiteGraph(whites, static_cast<int>(masks.size()), std::move(edges));
}

CanonKey best_key(const BipartiteGraph& g, const Edge* dec) {
    CanonState st = make_state(g);
    CanonKey best;
    bool have = false;
    for_each_placement(st, [&](const std::vector<int>& slot) {
        CanonKey k = key_for(st, slot, dec);
        if (!have || k < best) {
            best = std::move(k);
            have = true;
        }
    });
    if (!have) best.masks.assign(g.black_count(), 0);  // graph with no whites
    return best;
}

}  // namespace

BipartiteGraph canonicalize(const BipartiteGraph& g) {
    if (g.edge_count() == 0) return g;
    CanonKey key = best_key(g, nullptr);
    return graph_from_masks(g.white_count(), key.masks);
}

DecoratedGraph canonicalize(const DecoratedGraph& d) {
    CanonKey key = best_key(d.graph, &d.decorated);
    BipartiteGraph g = graph_from_masks(d.graph.white_count(), key.masks);
    // the block of equal masks is interchangeable, so pinning the decorated
    // black to the first slot of its block is reached by an automorphism
    Edge dec{key.dec_white, key.dec_black_pos};
    return DecoratedGraph(std::move(g), dec);
}

}  // namespace ydc
