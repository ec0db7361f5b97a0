#pragma once

#include <vector>

#include "rational.hpp"

namespace ydc {

using Matrix = std::vector<std::vector<Rat>>;  // row-major, rectangular

struct SolveOutcome {
    bool consistent = false;
    std::vector<Rat> solution;   // one solution when consistent (free vars = 0)
    std::vector<int> free_cols;  // columns without a pivot
    int rank = 0;
};

// Exact Gaussian elimination over the rationals.
SolveOutcome solve(Matrix a, std::vector<Rat> b);

// Basis of the right kernel of a (vectors of length ncols).
std::vector<std::vector<Rat>> nullspace(Matrix a, int ncols);

}  // namespace ydc
