#include "embedding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "piecewise.hpp"

namespace ydc {

Int count_embeddings(const BipartiteGraph& g, const Partition& lambda) {
    int nw = g.white_count(), nb = g.black_count();
    if (nb == 0) return Int(1);  // empty graph: one empty coloring
    // group equal row lengths: assignments only care about the value
    std::vector<long> values;
    std::vector<long> mult;
    for (int i = 1; i <= lambda.length(); ++i) {
        long v = lambda.row(i);
        if (!values.empty() && values.back() == v) {
            ++mult.back();
        } else {
            values.push_back(v);
            mult.push_back(1);
        }
    }
    if (values.empty()) return Int(0);
    int r = static_cast<int>(values.size());

    std::vector<std::vector<int>> white_adj(nw);
    for (const Edge& e : g.edges()) white_adj[e.white].push_back(e.black);

    Int total(0);
    std::vector<int> choice(nb, 0);
    while (true) {
        Int term(1);
        for (int b = 0; b < nb; ++b) term *= mult[choice[b]];
        for (int w = 0; w < nw; ++w) {
            long m = values[choice[white_adj[w][0]]];
            for (size_t i = 1; i < white_adj[w].size(); ++i)
                m = std::min(m, values[choice[white_adj[w][i]]]);
            term *= m;
        }
        total += term;
        int b = nb - 1;
        while (b >= 0 && choice[b] == r - 1) choice[b--] = 0;
        if (b < 0) break;
        ++choice[b];
    }
    return total;
}

Rat count_embeddings_sum(const GraphSum& s, const Partition& lambda) {
    Rat total(0);
    for (const auto& [g, c] : s.terms()) total += c * Rat(count_embeddings(g, lambda));
    return total;
}

namespace {

struct PinMap {
    std::vector<char> pinned_w, pinned_b;
    Rat x_pin, y_pin;
};

// Shared elimination routine; pins are optional (decorated evaluation).
Rat volume_impl(const BipartiteGraph& g, const Profile& omega, const PinMap* pins) {
    if (!g.is_forest()) fail(errc::invalid_input, "volume needs a forest; use the sampler");
    int nw = g.white_count(), nb = g.black_count();
    AffinePieces xe = omega.x_extent();
    AffinePieces ye = omega.y_extent();
    Rat xmax = omega.x_max(), ymax = omega.y_max();

    // a zero-area region admits no room for any edge's endpoints
    if ((xmax == 0 || ymax == 0) && g.edge_count() > 0) return Rat(0);

    // live weights; a vertex id is w in [0,nw) or nw+b
    int n = nw + nb;
    std::vector<PiecewisePoly> weight(n);
    std::vector<char> alive(n, 1);
    for (int w = 0; w < nw; ++w) weight[w] = PiecewisePoly::constant(Rat(0), xmax, Rat(1));
    for (int b = 0; b < nb; ++b) weight[nw + b] = PiecewisePoly::constant(Rat(0), ymax, Rat(1));

    std::vector<std::vector<int>> adj(n);
    std::vector<std::pair<int, int>> live_edges;
    Rat result(1);

    auto clip_hi = [&](int v, const Rat& hi) {
        Rat h = std::min(hi, weight[v].domain_hi());
        if (h < weight[v].domain_lo()) h = weight[v].domain_lo();  // empty range handled below
        weight[v] = weight[v].restricted(weight[v].domain_lo(), h);
    };

    if (pins) {
        for (int w = 0; w < nw; ++w)
            if (pins->pinned_w[w]) alive[w] = 0;
        for (int b = 0; b < nb; ++b)
            if (pins->pinned_b[b]) alive[nw + b] = 0;
    }
    for (const Edge& e : g.edges()) {
        bool wp = pins && pins->pinned_w[e.white];
        bool bp = pins && pins->pinned_b[e.black];
        if (wp && bp) {
            if (!omega.contains(pins->x_pin, pins->y_pin)) return Rat(0);
            continue;
        }
        if (wp) {
            clip_hi(nw + e.black, ye.eval(pins->x_pin));
            continue;
        }
        if (bp) {
            clip_hi(e.white, xe.eval(pins->y_pin));
            continue;
        }
        adj[e.white].push_back(nw + e.black);
        adj[nw + e.black].push_back(e.white);
        live_edges.push_back({e.white, nw + e.black});
    }

    std::vector<int> degree(n, 0);
    for (auto [a, b] : live_edges) ++degree[a], ++degree[b];

    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (alive[v] && degree[v] <= 1) order.push_back(v);

    while (!order.empty()) {
        int v = order.back();
        order.pop_back();
        if (!alive[v]) continue;
        alive[v] = 0;
        int u = -1;
        for (int cand : adj[v])
            if (alive[cand]) u = cand;
        if (u < 0) {
            result *= weight[v].integral();
            if (result == 0) return result;
            continue;
        }
        // fold v into u: factor(t_u) = A_v(min(extent(t_u), hi_v))
        PiecewisePoly anti = weight[v].antiderivative();
        const AffinePieces& ext = v < nw ? xe : ye;  // v white: u black queries X(y)
        PiecewisePoly factor = PiecewisePoly::compose(anti, ext, weight[v].domain_hi());
        factor = factor.restricted(weight[u].domain_lo(), weight[u].domain_hi());
        weight[u] = weight[u].times(factor);
        if (--degree[u] <= 1) order.push_back(u);
        --degree[v];
    }
    for (int v = 0; v < n; ++v)
        if (alive[v]) fail(errc::invalid_input, "elimination left a cycle");
    return result;
}

}  // namespace

Rat embedding_volume(const BipartiteGraph& g, const Profile& omega) {
    return volume_impl(g, omega, nullptr);
}

Rat decorated_value(const DecoratedGraph& d, const Profile& omega, const Rat& z) {
    if (!omega.is_strict())
        fail(errc::invalid_input, "decorated evaluation needs a strict profile");
    if (z < omega.support_lo() || z > omega.support_hi())
        fail(errc::invalid_input, "pin point outside the support");
    PinMap pins;
    pins.pinned_w.assign(d.graph.white_count(), 0);
    pins.pinned_b.assign(d.graph.black_count(), 0);
    pins.pinned_w[d.decorated.white] = 1;
    pins.pinned_b[d.decorated.black] = 1;
    pins.x_pin = omega.x_of(z);
    pins.y_pin = omega.y_of(z);
    return volume_impl(d.graph, omega, &pins);
}

McResult mc_volume(const BipartiteGraph& g, const Profile& omega, long long samples,
                   std::uint64_t seed, int threads) {
    if (samples <= 0) fail(errc::invalid_input, "sample count must be positive");
    if (threads < 1) fail(errc::invalid_input, "thread count must be positive");
    if (threads > 64) fail(errc::limit_exceeded, "thread count capped at 64");
    int nw = g.white_count(), nb = g.black_count();
    double xmax = to_double(omega.x_max()), ymax = to_double(omega.y_max());
    McResult res;
    res.samples = samples;
    res.seed = seed;
    double box = 1.0;
    for (int i = 0; i < nw; ++i) box *= xmax;
    for (int i = 0; i < nb; ++i) box *= ymax;
    if (box == 0.0) return res;

    // profile as doubles for the hot loop
    std::vector<double> bz, bw;
    for (const auto& p : omega.breakpoints()) {
        bz.push_back(to_double(p.z));
        bw.push_back(to_double(p.w));
    }
    auto inside = [&](double x, double y) {
        double z = x - y;
        double w;
        if (bz.empty() || z <= bz.front() || z >= bz.back()) {
            w = std::abs(z);
        } else {
            size_t hi = std::upper_bound(bz.begin(), bz.end(), z) - bz.begin();
            w = bw[hi - 1] + (z - bz[hi - 1]) * (bw[hi] - bw[hi - 1]) / (bz[hi] - bz[hi - 1]);
        }
        return x + y <= w;
    };

    const long long chunk_size = 1 << 14;
    const long long nchunks = (samples + chunk_size - 1) / chunk_size;
    std::atomic<long long> next_chunk{0};
    std::atomic<long long> hits_total{0};

    auto worker = [&]() {
        std::vector<double> xs(nw), ys(nb);
        for (;;) {
            long long c = next_chunk.fetch_add(1);
            if (c >= nchunks) return;
            long long begin = c * chunk_size;
            long long count = std::min(chunk_size, samples - begin);
            std::seed_seq sq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(c)};
            std::mt19937_64 rng(sq);
            std::uniform_real_distribution<double> ux(0.0, xmax), uy(0.0, ymax);
            long long hits = 0;
            for (long long i = 0; i < count; ++i) {
                for (int w = 0; w < nw; ++w) xs[w] = ux(rng);
                for (int b = 0; b < nb; ++b) ys[b] = uy(rng);
                bool ok = true;
                for (const Edge& e : g.edges()) {
                    if (!inside(xs[e.white], ys[e.black])) {
                        ok = false;
                        break;
                    }
                }
                hits += ok;
            }
            hits_total.fetch_add(hits);
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    double p = static_cast<double>(hits_total.load()) / static_cast<double>(samples);
    res.estimate = box * p;
    res.stderr_est = box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return res;
}

}  // namespace ydc
