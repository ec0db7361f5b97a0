#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bigraph.hpp"
#include "partition.hpp"
#include "profile.hpp"
#include "spoly.hpp"

namespace ydc {

struct ZFit {
    std::vector<Rat> coeffs;  // coefficient of z^i, trailing zeros dropped
    bool is_polynomial = true;
    Rat witness_z = Rat(0);  // a check point that disagreed (when not)
};

// Fits z |-> pinned value of ds on omega as a polynomial of degree at most
// (max vertex count) - 2, then cross-checks at extra points on the other side
// of the support midpoint. sample_offset perturbs the node spacing; the
// result must not depend on it.
ZFit interpolate_in_z(const DecoratedSum& ds, const Profile& omega, int sample_offset = 0);

struct DecompositionReport {
    bool criterion_pass = false;
    bool z_polynomial = false;
    int vertex_count = 0;     // shared vertex count m
    std::vector<Rat> coeffs;  // c_i of the marked-edge sum
    Rat lhs = Rat(0);         // exact volume of the sum on omega
    Rat rhs = Rat(0);         // (1/m) sum_i (i+2)/(i+1) c_i S_{i+2}(omega)
    bool holds = false;
    std::string constants_note;
};

// Checks the volume of s against its expansion over the shape functionals.
// Terms must be forests with one shared vertex count; hypothesis failures
// (criterion, polynomiality in z) are reported, not thrown.
DecompositionReport decomposition_identity_check(const GraphSum& s, const Profile& omega);

struct FitReport {
    enum class Status { fitted, infeasible };
    Status status = Status::infeasible;
    SPolynomial poly;  // exact on success, best consistent fit otherwise
    int rank = 0;
    std::vector<std::pair<Partition, Rat>> residuals;  // nonzero only
};

// Solves for a graded-degree-m polynomial in the S_k matching the embedding
// counts of s on train, and validates on test. A training set that leaves
// monomial coefficients undetermined is an input error naming the unresolved
// monomials.
FitReport fit_s_basis(const GraphSum& s, const std::vector<Partition>& train,
                      const std::vector<Partition>& test);

// Default sample sets for vertex count m: train is every partition of
// m..m+4 plus all rectangles with sides <= 4; test is every partition of
// m+5 and m+6 plus rectangles with a side of 5, minus anything in train.
std::vector<Partition> default_train(int m);
std::vector<Partition> default_test(int m);

}  // namespace ydc
