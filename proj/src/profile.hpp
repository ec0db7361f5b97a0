#pragma once

#include <compare>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace ydc {

// Monotone piecewise-affine function given by endpoint values; used for the
// boundary extents X(y) and Y(x) of a diagram. Pieces cover [lo, hi] of the
// parameter; values may jump at joints (staircase boundaries), in which case
// eval() returns the larger one-sided value.
struct AffinePieces {
    struct Piece {
        Rat lo, hi;
        Rat value_lo, value_hi;
    };
    std::vector<Piece> pieces;

    Rat domain_lo() const { return pieces.empty() ? Rat(0) : pieces.front().lo; }
    Rat domain_hi() const { return pieces.empty() ? Rat(0) : pieces.back().hi; }
    Rat eval(const Rat& t) const;
};

// Generalized Young diagram profile omega(z) in Russian coordinates:
// Lipschitz-1, equal to |z| outside a bounded interval. Stored as the minimal
// breakpoint list (slope-change points), so structural equality is equality
// of functions. An empty list is omega = |z|.
class Profile {
  public:
    struct Point {
        Rat z;
        Rat w;
        auto operator<=>(const Point&) const = default;
    };

    Profile() = default;
    explicit Profile(std::vector<Point> breakpoints);

    static Profile of_partition(const Partition& p);

    const std::vector<Point>& breakpoints() const { return pts_; }
    bool is_flat() const { return pts_.empty(); }

    Rat support_lo() const { return pts_.empty() ? Rat(0) : pts_.front().z; }
    Rat support_hi() const { return pts_.empty() ? Rat(0) : pts_.back().z; }

    Rat operator()(const Rat& z) const;

    // Slope of the piece containing z, right-continuous at breakpoints
    // (left branch of |z| for z below the support).
    Rat slope(const Rat& z) const;

    // All interior slopes strictly inside (-1, 1); false for the flat profile.
    bool is_strict() const;

    // Area of the French region {x,y >= 0, x + y <= omega(x - y)}.
    Rat area() const;

    Rat x_of(const Rat& z) const;  // (omega(z) + z) / 2
    Rat y_of(const Rat& z) const;  // (omega(z) - z) / 2

    Rat x_max() const { return support_hi(); }
    Rat y_max() const { return -support_lo(); }

    bool contains(const Rat& x, const Rat& y) const;

    // Largest admissible x at height y (and vice versa), as piecewise-affine
    // functions of y in [0, y_max] resp. x in [0, x_max].
    AffinePieces x_extent() const;
    AffinePieces y_extent() const;

    Profile dilate(const Rat& t) const;

    auto operator<=>(const Profile&) const = default;

  private:
    std::vector<Point> pts_;
};

}  // namespace ydc
