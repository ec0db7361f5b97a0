#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "derivations.hpp"
#include "embedding.hpp"
#include "oracles.hpp"

using namespace ydc;
using namespace ydc::test;

namespace {

// disjoint union with shifted labels
BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b) {
    std::vector<Edge> es = a.edges();
    for (const Edge& e : b.edges())
        es.push_back({e.white + a.white_count(), e.black + a.black_count()});
    std::sort(es.begin(), es.end());
    return BipartiteGraph(a.white_count() + b.white_count(), a.black_count() + b.black_count(),
                          std::move(es));
}

}  // namespace

TEST_CASE("counts match brute force") {
    std::vector<BipartiteGraph> graphs = enumerate_graphs(3);
    for (const BipartiteGraph& g : graphs)
        for (const Partition& lam : partitions_up_to(4))
            CHECK(count_embeddings(g, lam) == brute_embeddings(g, lam));
}

TEST_CASE("count fixed points") {
    Partition p({4, 3, 1});
    CHECK(count_embeddings(black_star(2), p) == Int(26));  // sum of squared rows
    CHECK(count_embeddings(single_edge(), p) == Int(8));
    CHECK(count_embeddings(white_star(2), Partition({3, 1})) == Int(6));
    CHECK(count_embeddings(single_edge(), Partition()) == Int(0));
    CHECK(count_embeddings(BipartiteGraph(0, 0, {}), Partition()) == Int(1));
}

TEST_CASE("count homogeneity under dilation") {
    for (const BipartiteGraph& g : enumerate_graphs(3)) {
        int v = g.vertex_count();
        for (const Partition& lam : {Partition({2}), Partition({2, 1}), Partition({3, 1})}) {
            Int base = count_embeddings(g, lam);
            for (int t = 2; t <= 3; ++t) {
                Int scale(1);
                for (int i = 0; i < v; ++i) scale *= t;
                CHECK(count_embeddings(g, lam.dilate(t)) == scale * base);
            }
        }
    }
}

TEST_CASE("disjoint unions multiply") {
    std::vector<BipartiteGraph> pool = {single_edge(), black_star(2), white_star(2), path4()};
    for (const BipartiteGraph& a : pool)
        for (const BipartiteGraph& b : pool) {
            BipartiteGraph u = disjoint_union(a, b);
            for (const Partition& lam : {Partition({3, 1}), Partition({2, 2, 1})})
                CHECK(count_embeddings(u, lam) ==
                      count_embeddings(a, lam) * count_embeddings(b, lam));
            CHECK(embedding_volume(u, triangle_profile()) ==
                  embedding_volume(a, triangle_profile()) *
                      embedding_volume(b, triangle_profile()));
        }
}

TEST_CASE("volumes on straight boundaries") {
    Profile tri = triangle_profile();
    CHECK(embedding_volume(single_edge(), tri) == Rat(2));
    CHECK(embedding_volume(black_star(2), tri) == Rat(8, 3));
    CHECK(embedding_volume(white_star(2), tri) == Rat(8, 3));
    CHECK(embedding_volume(path4(), tri) == Rat(10, 3));

    Profile sl = slanted_profile();
    CHECK(embedding_volume(single_edge(), sl) == Rat(3, 2));
    CHECK(embedding_volume(black_star(2), sl) == Rat(3));
    CHECK(embedding_volume(white_star(2), sl) == Rat(1));
}

TEST_CASE("volume equals count on staircases") {
    // constraints are constant on unit cells, so Lebesgue measure and the
    // lattice count coincide
    for (const BipartiteGraph& g : enumerate_graphs(3)) {
        if (!g.is_forest()) continue;
        for (const Partition& lam : partitions_up_to(4))
            CHECK(embedding_volume(g, Profile::of_partition(lam)) ==
                  Rat(count_embeddings(g, lam)));
    }
}

TEST_CASE("volume homogeneity") {
    for (const BipartiteGraph& g : {single_edge(), black_star(3), path4()}) {
        Rat base = embedding_volume(g, triangle_profile());
        for (const Rat& t : {Rat(2), Rat(3), Rat(5, 2)}) {
            Rat scaled = embedding_volume(g, triangle_profile().dilate(t));
            CHECK(scaled == rat_pow(t, g.vertex_count()) * base);
        }
    }
}

TEST_CASE("volume rejects cycles") {
    CHECK_THROWS_AS(embedding_volume(four_cycle(), triangle_profile()), Error);
    try {
        embedding_volume(four_cycle(), triangle_profile());
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_input);
    }
}

TEST_CASE("decorated values") {
    Profile tri = triangle_profile();
    DecoratedGraph edge_d(single_edge(), Edge{0, 0});
    CHECK(decorated_value(edge_d, tri, Rat(0)) == Rat(1));
    CHECK(decorated_value(edge_d, tri, Rat(3, 2)) == Rat(1));

    DecoratedGraph star_d(black_star(2), Edge{0, 0});
    CHECK(decorated_value(star_d, tri, Rat(0)) == Rat(1));          // (2+z)/2
    CHECK(decorated_value(star_d, tri, Rat(1)) == Rat(3, 2));
    CHECK(decorated_value(star_d, tri, Rat(-1)) == Rat(1, 2));

    DecoratedGraph wstar_d(white_star(2), Edge{0, 0});
    CHECK(decorated_value(wstar_d, tri, Rat(1)) == Rat(1, 2));      // (2-z)/2

    CHECK_THROWS_AS(decorated_value(edge_d, tri, Rat(3)), Error);   // outside support
    CHECK_THROWS_AS(decorated_value(edge_d, Profile::of_partition(Partition({2, 1})), Rat(0)),
                    Error);                                         // not strict
}

TEST_CASE("monte carlo") {
    Profile tri = triangle_profile();
    McResult a = mc_volume(single_edge(), tri, 200000, 9001, 1);
    CHECK(a.samples == 200000);
    CHECK(std::fabs(a.estimate - 2.0) <= 4 * a.stderr_est);
    CHECK(a.stderr_est > 0);
    CHECK(a.stderr_est < 0.05);

    // deterministic, and independent of the thread count
    McResult b = mc_volume(single_edge(), tri, 200000, 9001, 4);
    CHECK(a.estimate == b.estimate);
    CHECK(a.stderr_est == b.stderr_est);
    McResult c = mc_volume(single_edge(), tri, 200000, 9002, 1);
    CHECK(a.estimate != c.estimate);

    // cycles are fine here
    McResult cyc = mc_volume(four_cycle(), tri, 400000, 7, 2);
    CHECK(std::fabs(cyc.estimate - 8.0 / 3.0) <= 4 * cyc.stderr_est);

    CHECK_THROWS_AS(mc_volume(single_edge(), tri, 0, 1, 1), Error);
    CHECK_THROWS_AS(mc_volume(single_edge(), tri, 100, 1, 0), Error);
    CHECK_THROWS_AS(mc_volume(single_edge(), tri, 100, 1, 65), Error);
}
