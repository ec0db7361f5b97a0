#pragma once

#include <vector>

#include "profile.hpp"
#include "rational.hpp"

namespace ydc {

// Dense univariate polynomial over the rationals, coefficients ascending.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& c);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Rat eval(const Rat& t) const;
    Poly antiderivative() const;  // vanishing at 0
    Poly compose_affine(const Rat& a, const Rat& b) const;  // p(a + b t)

    Poly operator*(const Poly& o) const;
    Poly operator+(const Poly& o) const;
    Poly scaled(const Rat& f) const;

  private:
    void trim();
    std::vector<Rat> c_;
};

// Piecewise polynomial on [cuts.front(), cuts.back()]; value jumps at cuts
// are allowed (each piece owns [cut_i, cut_{i+1}]).
class PiecewisePoly {
  public:
    PiecewisePoly() = default;
    static PiecewisePoly constant(const Rat& lo, const Rat& hi, const Rat& value);

    const std::vector<Rat>& cuts() const { return cuts_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    Rat domain_lo() const { return cuts_.front(); }
    Rat domain_hi() const { return cuts_.back(); }

    Rat eval(const Rat& t) const;

    // restrict to [lo, hi] (must be inside the domain)
    PiecewisePoly restricted(const Rat& lo, const Rat& hi) const;

    // pointwise product; domains must agree
    PiecewisePoly times(const PiecewisePoly& o) const;

    Rat integral() const;

    // running integral from domain_lo; continuous even across value jumps
    PiecewisePoly antiderivative() const;

    // F(min(E(t), clamp)) on E's domain; E must be monotone per piece and its
    // clamped values must stay inside F's domain
    static PiecewisePoly compose(const PiecewisePoly& f, const AffinePieces& e, const Rat& clamp);

  private:
    std::vector<Rat> cuts_;    // ascending, size = pieces + 1 (empty iff no pieces)
    std::vector<Poly> pieces_;
};

}  // namespace ydc
