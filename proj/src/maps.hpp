#pragma once

#include <utility>
#include <vector>

#include "bigraph.hpp"
#include "partition.hpp"

namespace ydc {

// One gluing of the family of bipartite 2*mu_j-gons into a map: a perfect
// matching of the 2n polygon sides plus everything derived from it. Corner
// classes keep the polygon colors (even corners vs odd corners); the
// underlying counting graph puts the odd-corner classes in the white
// (column) role, which is what makes row-doubling scale counts by
// 2^black_classes.
struct GluedMap {
    Partition face_type;
    std::vector<std::pair<int, int>> pairing;  // matched side pairs {lo, hi}
    int edge_count = 0;                        // n
    int face_count = 0;                        // number of polygons
    int white_classes = 0;                     // merged even corners
    int black_classes = 0;                     // merged odd corners
    bool orientable = false;
    bool oriented = false;  // every pair joins sides of opposite parity
    int euler_characteristic = 0;              // total over components
    std::vector<int> component_euler;          // per connected component
    BipartiteGraph underlying;                 // whites = odd-corner classes
};

// All (2n-1)!! side pairings, in lexicographic order of the block lists.
std::vector<GluedMap> enumerate_gluings(const Partition& mu, int bound = 6);

// Recomputed from the pairing; always equals the stored flag.
bool orientability(const GluedMap& m);

struct MapSums {
    Rat oriented_signed;  // sum over oriented gluings of (-1)^blacks * N
    Rat all_signed;       // same weight, all gluings
    Rat all_zonal;        // (-2)^blacks weight, all gluings
    long long maps = 0;
    long long oriented_count = 0;
    long long orientable_count = 0;
};

MapSums map_sums(const std::vector<GluedMap>& maps, const Partition& lambda);
MapSums map_sums(const Partition& mu, const Partition& lambda, int bound = 6);

struct CharacterResult {
    Rat value;            // sign-calibrated sum
    Rat raw;              // as summed
    int calibration = 1;  // the applied global sign
    long long maps = 0;
};

// alpha = 1: oriented gluings with weight (-1)^blacks; alpha = 2: all
// gluings with weight (-2)^blacks. The global sign is fixed per mu against
// the character oracle at the one-row diagram and must follow |mu| parity.
CharacterResult character_maps(const Partition& mu, const Partition& lambda, int alpha,
                               int bound = 6);

// Formal graph sums behind the two formulas; both carry (-1)^blacks weights
// (the zonal evaluation is the full sum composed with row-doubling).
GraphSum oriented_map_sum(const Partition& mu, int bound = 6);
GraphSum full_map_sum(const Partition& mu, int bound = 6);

}  // namespace ydc
