#include "profile.hpp"

#include <algorithm>

namespace ydc {

Rat AffinePieces::eval(const Rat& t) const {
    if (pieces.empty()) return Rat(0);
    Rat best;
    bool found = false;
    for (const Piece& p : pieces) {
        if (t < p.lo || t > p.hi) continue;
        Rat v;
        if (p.lo == p.hi) {
            v = std::max(p.value_lo, p.value_hi);
        } else {
            v = p.value_lo + (t - p.lo) * (p.value_hi - p.value_lo) / (p.hi - p.lo);
        }
        if (!found || v > best) best = v;
        found = true;
    }
    if (!found) fail(errc::invalid_input, "extent queried outside its domain");
    return best;
}

namespace {

Rat abs_of(const Rat& z) { return z < 0 ? Rat(-z) : z; }

}  // namespace

Profile::Profile(std::vector<Point> breakpoints) : pts_(std::move(breakpoints)) {
    for (size_t i = 0; i + 1 < pts_.size(); ++i)
        if (!(pts_[i].z < pts_[i + 1].z))
            fail(errc::invalid_input, "profile breakpoints must have strictly increasing z");
    if (!pts_.empty()) {
        if (pts_.front().w != abs_of(pts_.front().z) || pts_.back().w != abs_of(pts_.back().z))
            fail(errc::invalid_input, "profile must join |z| at both ends");
    }
    std::vector<Rat> slope;  // slope entering point i; one extra for the exit side
    slope.reserve(pts_.size() + 1);
    if (!pts_.empty()) slope.push_back(Rat(pts_.front().z <= 0 ? -1 : 1));
    for (size_t i = 0; i + 1 < pts_.size(); ++i) {
        Rat s = (pts_[i + 1].w - pts_[i].w) / (pts_[i + 1].z - pts_[i].z);
        if (s < -1 || s > 1) fail(errc::invalid_input, "profile slope outside [-1, 1]");
        slope.push_back(s);
    }
    if (!pts_.empty()) slope.push_back(Rat(pts_.back().z >= 0 ? 1 : -1));

    std::vector<Point> kept;
    for (size_t i = 0; i < pts_.size(); ++i) {
        if (slope[i] == slope[i + 1]) continue;
        // the corner of |z| itself is not a breakpoint
        if (pts_[i].z == 0 && pts_[i].w == 0 && slope[i] == -1 && slope[i + 1] == 1) continue;
        kept.push_back(pts_[i]);
    }
    pts_ = std::move(kept);
}

Profile Profile::of_partition(const Partition& p) {
    const auto& parts = p.parts();
    std::vector<Point> raw;
    auto push = [&raw](int x, int y) {
        Point pt{Rat(x - y), Rat(x + y)};
        if (raw.empty() || raw.back() != pt) raw.push_back(pt);
    };
    int l = p.length();
    push(p.row(1), 0);
    for (int j = 1; j <= l; ++j) {
        push(p.row(j), j);
        push(p.row(j + 1), j);
    }
    std::reverse(raw.begin(), raw.end());
    return Profile(std::move(raw));
}

Rat Profile::operator()(const Rat& z) const {
    if (pts_.empty() || z <= pts_.front().z || z >= pts_.back().z) return abs_of(z);
    size_t hi = 1;
    while (pts_[hi].z < z) ++hi;
    const Point& a = pts_[hi - 1];
    const Point& b = pts_[hi];
    return a.w + (z - a.z) * (b.w - a.w) / (b.z - a.z);
}

Rat Profile::slope(const Rat& z) const {
    if (pts_.empty() || z < pts_.front().z || z >= pts_.back().z)
        return Rat(z < 0 ? -1 : 1);
    size_t hi = 1;
    while (pts_[hi].z <= z) ++hi;
    const Point& a = pts_[hi - 1];
    const Point& b = pts_[hi];
    return (b.w - a.w) / (b.z - a.z);
}

bool Profile::is_strict() const {
    if (pts_.size() < 2) return false;
    for (size_t i = 0; i + 1 < pts_.size(); ++i) {
        Rat s = (pts_[i + 1].w - pts_[i].w) / (pts_[i + 1].z - pts_[i].z);
        if (s <= -1 || s >= 1) return false;
    }
    return true;
}

Rat Profile::area() const {
    // (1/2) * integral of (omega - |z|), split so no piece straddles 0
    Rat total(0);
    for (size_t i = 0; i + 1 < pts_.size(); ++i) {
        Rat a = pts_[i].z, b = pts_[i + 1].z;
        Rat wa = pts_[i].w, wb = pts_[i + 1].w;
        if (a < 0 && b > 0) {
            Rat w0 = wa + (0 - a) * (wb - wa) / (b - a);
            total += (wa + w0 + a) / 2 * (0 - a);   // minus integral of -z on [a,0]
            total += (w0 + wb - b) / 2 * (b - 0);
        } else {
            Rat absint = (abs_of(a) + abs_of(b)) / 2 * (b - a);
            total += (wa + wb) / 2 * (b - a) - absint;
        }
    }
    return total / 2;
}

Rat Profile::x_of(const Rat& z) const { return ((*this)(z) + z) / 2; }
Rat Profile::y_of(const Rat& z) const { return ((*this)(z)-z) / 2; }

bool Profile::contains(const Rat& x, const Rat& y) const {
    if (x < 0 || y < 0) return false;
    return x + y <= (*this)(x - y);
}

AffinePieces Profile::x_extent() const {
    AffinePieces out;
    if (pts_.empty()) {
        out.pieces.push_back({Rat(0), Rat(0), Rat(0), Rat(0)});
        return out;
    }
    // walk segments right-to-left: y grows from 0 to y_max
    for (size_t i = pts_.size() - 1; i > 0; --i) {
        const Point& hi = pts_[i];
        const Point& lo = pts_[i - 1];
        Rat y_start = (hi.w - hi.z) / 2, y_end = (lo.w - lo.z) / 2;
        if (y_start == y_end) continue;  // horizontal row edge, no y-range
        out.pieces.push_back({y_start, y_end, (hi.w + hi.z) / 2, (lo.w + lo.z) / 2});
    }
    return out;
}

AffinePieces Profile::y_extent() const {
    AffinePieces out;
    if (pts_.empty()) {
        out.pieces.push_back({Rat(0), Rat(0), Rat(0), Rat(0)});
        return out;
    }
    for (size_t i = 0; i + 1 < pts_.size(); ++i) {
        const Point& lo = pts_[i];
        const Point& hi = pts_[i + 1];
        Rat x_start = (lo.w + lo.z) / 2, x_end = (hi.w + hi.z) / 2;
        if (x_start == x_end) continue;
        out.pieces.push_back({x_start, x_end, (lo.w - lo.z) / 2, (hi.w - hi.z) / 2});
    }
    return out;
}

Profile Profile::dilate(const Rat& t) const {
    if (t <= 0) fail(errc::invalid_input, "dilation factor must be positive");
    std::vector<Point> out = pts_;
    for (Point& p : out) {
        p.z *= t;
        p.w *= t;
    }
    return Profile(std::move(out));
}

}  // namespace ydc
