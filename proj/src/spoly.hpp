#pragma once

#include <map>
#include <vector>

#include "rational.hpp"

namespace ydc {

// Commutative monomial in the generators S_2, S_3, ...: sorted list of
// generator indices, possibly with repeats. Empty list = the constant 1.
using SMonomial = std::vector<int>;

// Graded degree: S_k has degree k, products add.
int graded_degree(const SMonomial& m);

// Polynomial in the S_k with rational coefficients.
class SPolynomial {
  public:
    SPolynomial() = default;

    static SPolynomial constant(const Rat& c);
    static SPolynomial generator(int k);
    static SPolynomial monomial(SMonomial m, const Rat& coeff);

    const std::map<SMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max graded degree; -1 for the zero polynomial

    void add(const SMonomial& m, const Rat& c);

    SPolynomial& operator+=(const SPolynomial& o);
    SPolynomial& operator-=(const SPolynomial& o);
    SPolynomial operator*(const SPolynomial& o) const;
    SPolynomial scaled(const Rat& c) const;

    bool operator==(const SPolynomial&) const = default;

  private:
    std::map<SMonomial, Rat> terms_;
};

SPolynomial operator+(SPolynomial a, const SPolynomial& b);
SPolynomial operator-(SPolynomial a, const SPolynomial& b);

// Polynomial in z with SPolynomial coefficients; coeffs()[i] multiplies z^i.
class ZPolynomial {
  public:
    ZPolynomial() = default;
    explicit ZPolynomial(std::vector<SPolynomial> coeffs);

    const std::vector<SPolynomial>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(int power, const SPolynomial& p);

    // Substitute a concrete z.
    SPolynomial at(const Rat& z) const;

    bool operator==(const ZPolynomial&) const = default;

  private:
    void trim();
    std::vector<SPolynomial> coeffs_;
};

// Derivative with respect to the content coordinate: d S_k = (k-1) z^{k-2},
// extended to products by the Leibniz rule.
ZPolynomial content_derivative(const SPolynomial& p);

}  // namespace ydc
