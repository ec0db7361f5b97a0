#pragma once

#include "partition.hpp"
#include "rational.hpp"

namespace ydc {

// Irreducible symmetric-group character chi^lambda(pi) by the border-strip
// recursion on beta-numbers. Requires |lambda| = |pi|.
Int mn_character(const Partition& lambda, const Partition& pi);

// chi^lambda at the identity, via the hook length formula.
Int dimension(const Partition& lambda);

// Normalized character: |lambda|(|lambda|-1)...(|lambda|-k+1) times the
// character ratio at (mu, 1^{n-k}), k = |mu|; zero when k exceeds |lambda|.
Rat normalized_sigma(const Partition& mu, const Partition& lambda);

}  // namespace ydc
