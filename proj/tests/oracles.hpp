#pragma once

#include <random>
#include <vector>

#include "bigraph.hpp"
#include "partition.hpp"
#include "profile.hpp"

namespace ydc::test {

// Plain odometer count of all vertex placements: whites to columns, blacks to
// rows, every edge's box inside the diagram.
Int brute_embeddings(const BipartiteGraph& g, const Partition& lambda);

// Gauss-Legendre quadrature of (k-1)/2 * integral z^(k-2) (omega(z) - |z|) dz,
// split at breakpoints and at 0.  Exact for piecewise-linear profiles up to
// roundoff.
double quad_s_k(const Profile& omega, int k);

// Tries every pair of color-preserving vertex bijections.
bool brute_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b);

Partition random_partition(std::mt19937_64& rng, int max_size);

// Uniform-ish random graph with 1..max_edges edges and no isolated vertices.
BipartiteGraph random_graph(std::mt19937_64& rng, int max_edges);

std::vector<int> random_perm(std::mt19937_64& rng, int n);

BipartiteGraph single_edge();
BipartiteGraph black_star(int whites);  // one black center
BipartiteGraph white_star(int blacks);  // one white center
BipartiteGraph four_cycle();
BipartiteGraph path4();  // w0 - b0 - w1 - b1

// black_star(2) - white_star(2); equal to S_3 as a function on diagrams.
GraphSum star_difference();

Profile triangle_profile();   // flat top over [-2, 2]
Profile slanted_profile();    // strict, asymmetric: one piece of slope 1/2

}  // namespace ydc::test
