#pragma once

#include "partition.hpp"
#include "profile.hpp"
#include "spoly.hpp"

namespace ydc {

// S_k of a partition, k >= 2: (1/k) * sum over boxes of
// (c+1)^k - 2c^k + (c-1)^k, c the content of the box. Exact.
Rat s_k(const Partition& p, int k);

// S_k of a profile: ((k-1)/2) * integral of z^{k-2} (omega(z) - |z|) dz.
Rat s_k(const Profile& w, int k);

Rat evaluate(const SPolynomial& p, const Partition& lam);
Rat evaluate(const SPolynomial& p, const Profile& w);

// Substitute both a profile and a point z into a z-dependent S-polynomial.
Rat evaluate(const ZPolynomial& p, const Profile& w, const Rat& z);

}  // namespace ydc
