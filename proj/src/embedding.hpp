#pragma once

#include <cstdint>

#include "bigraph.hpp"
#include "partition.hpp"
#include "profile.hpp"

namespace ydc {

// Number of colorings of g: whites get column indices, blacks get row
// indices, and every edge must land on a box of lambda.
Int count_embeddings(const BipartiteGraph& g, const Partition& lambda);

Rat count_embeddings_sum(const GraphSum& s, const Partition& lambda);

// Lebesgue volume of the embedding polytope of a forest in the French region
// of the profile; exact. Staircase profiles are fine (the boundary has
// measure zero); non-forests are rejected (use mc_volume).
Rat embedding_volume(const BipartiteGraph& g, const Profile& omega);

// Volume with the decorated edge pinned to the boundary point at content z:
// its white end at x(z), its black end at y(z). Requires a strict profile
// (all slopes inside (-1,1)) and z in the support.
Rat decorated_value(const DecoratedGraph& d, const Profile& omega, const Rat& z);

struct McResult {
    double estimate = 0.0;
    double stderr_est = 0.0;
    long long samples = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo volume for arbitrary graphs; deterministic for fixed seed
// regardless of thread count (fixed-size chunks, per-chunk generators).
McResult mc_volume(const BipartiteGraph& g, const Profile& omega, long long samples,
                   std::uint64_t seed, int threads = 1);

}  // namespace ydc
