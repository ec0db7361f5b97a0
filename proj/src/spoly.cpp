#include "spoly.hpp"

#include <algorithm>
#include <numeric>

namespace ydc {

int graded_degree(const SMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

SPolynomial SPolynomial::constant(const Rat& c) {
    SPolynomial p;
    p.add({}, c);
    return p;
}

SPolynomial SPolynomial::generator(int k) {
    if (k < 2) fail(errc::invalid_input, "generator index must be >= 2");
    SPolynomial p;
    p.add({k}, Rat(1));
    return p;
}

SPolynomial SPolynomial::monomial(SMonomial m, const Rat& coeff) {
    for (int k : m)
        if (k < 2) fail(errc::invalid_input, "generator index must be >= 2");
    std::sort(m.begin(), m.end());
    SPolynomial p;
    p.add(m, coeff);
    return p;
}

int SPolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, graded_degree(m));
    return d;
}

void SPolynomial::add(const SMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SPolynomial& SPolynomial::operator+=(const SPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

SPolynomial& SPolynomial::operator-=(const SPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

SPolynomial SPolynomial::operator*(const SPolynomial& o) const {
    SPolynomial out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            SMonomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            out.add(m, c1 * c2);
        }
    }
    return out;
}

SPolynomial SPolynomial::scaled(const Rat& c) const {
    SPolynomial out;
    for (const auto& [m, v] : terms_) out.add(m, v * c);
    return out;
}

SPolynomial operator+(SPolynomial a, const SPolynomial& b) { return a += b; }
SPolynomial operator-(SPolynomial a, const SPolynomial& b) { return a -= b; }

ZPolynomial::ZPolynomial(std::vector<SPolynomial> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void ZPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void ZPolynomial::add(int power, const SPolynomial& p) {
    if (power < 0) fail(errc::invalid_input, "negative z power");
    if (static_cast<size_t>(power) >= coeffs_.size()) coeffs_.resize(power + 1);
    coeffs_[power] += p;
    trim();
}

SPolynomial ZPolynomial::at(const Rat& z) const {
    SPolynomial out;
    Rat zp(1);
    for (const SPolynomial& c : coeffs_) {
        out += c.scaled(zp);
        zp *= z;
    }
    return out;
}

ZPolynomial content_derivative(const SPolynomial& p) {
    ZPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        for (size_t j = 0; j < m.size(); ++j) {
            if (j > 0 && m[j] == m[j - 1]) continue;  // handled with multiplicity below
            int k = m[j];
            Rat mult(static_cast<long>(std::count(m.begin(), m.end(), k)));
            SMonomial rest = m;
            rest.erase(rest.begin() + j);
            out.add(k - 2, SPolynomial::monomial(rest, c * mult * (k - 1)));
        }
    }
    return out;
}

}  // namespace ydc
