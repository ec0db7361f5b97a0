#include "characters.hpp"

#include <vector>

namespace ydc {

namespace {

// Sum over ways of removing a border strip per remaining part of pi. A strip
// of length r moves one beta-number down by r onto a free slot; the sign is
// the parity of the numbers jumped over.
Int strip_rec(std::vector<long>& beta, const std::vector<int>& parts, size_t idx) {
    if (idx == parts.size()) return Int(1);
    long r = parts[idx];
    Int total(0);
    for (size_t i = 0; i < beta.size(); ++i) {
        long from = beta[i], to = from - r;
        if (to < 0) continue;
        bool taken = false;
        int jumped = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == to)
                taken = true;
            else if (beta[j] > to && beta[j] < from)
                ++jumped;
        }
        if (taken) continue;
        beta[i] = to;
        Int sub = strip_rec(beta, parts, idx + 1);
        beta[i] = from;
        if (jumped % 2)
            total -= sub;
        else
            total += sub;
    }
    return total;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& pi) {
    if (lambda.size() != pi.size())
        fail(errc::invalid_input, "character needs |lambda| = |pi|");
    int len = lambda.length();
    std::vector<long> beta(len);
    for (int i = 1; i <= len; ++i) beta[i - 1] = lambda.row(i) + (len - i);
    std::vector<int> parts;
    for (int i = 1; i <= pi.length(); ++i) parts.push_back(pi.row(i));
    return strip_rec(beta, parts, 0);
}

Int dimension(const Partition& lambda) {
    int n = lambda.size();
    Partition conj = lambda.conjugate();
    Int fact(1);
    for (int i = 2; i <= n; ++i) fact *= i;
    Rat d(fact);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j)
            d /= (lambda.row(i) - j) + (conj.row(j) - i) + 1;
    if (d.get_den() != 1) fail(errc::invalid_input, "hook product does not divide");
    return d.get_num();
}

Rat normalized_sigma(const Partition& mu, const Partition& lambda) {
    int n = lambda.size(), k = mu.size();
    if (k > n) return Rat(0);
    std::vector<int> parts;
    for (int i = 1; i <= mu.length(); ++i) parts.push_back(mu.row(i));
    parts.insert(parts.end(), n - k, 1);
    Int falling(1);
    for (int j = 0; j < k; ++j) falling *= (n - j);
    return Rat(falling) * Rat(mn_character(lambda, Partition(parts))) / Rat(dimension(lambda));
}

}  // namespace ydc
