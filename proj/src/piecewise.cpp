#include "piecewise.hpp"

#include <algorithm>

namespace ydc {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Rat Poly::eval(const Rat& t) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return {};
    std::vector<Rat> out(c_.size() + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i + 1] = c_[i] / static_cast<long>(i + 1);
    return Poly(std::move(out));
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
    Poly acc;
    Poly lin({a, b});
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * lin;
        acc = acc + Poly::constant(c_[i]);
    }
    return acc;
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rat& f) const {
    std::vector<Rat> out = c_;
    for (Rat& v : out) v *= f;
    return Poly(std::move(out));
}

PiecewisePoly PiecewisePoly::constant(const Rat& lo, const Rat& hi, const Rat& value) {
    if (lo > hi) fail(errc::invalid_input, "inverted interval");
    PiecewisePoly out;
    out.cuts_ = {lo, hi};
    out.pieces_ = {Poly::constant(value)};
    return out;
}

Rat PiecewisePoly::eval(const Rat& t) const {
    if (cuts_.empty() || t < cuts_.front() || t > cuts_.back())
        fail(errc::invalid_input, "evaluation outside domain");
    size_t i = 0;
    while (i + 2 < cuts_.size() && t >= cuts_[i + 1]) ++i;
    return pieces_[i].eval(t);
}

PiecewisePoly PiecewisePoly::restricted(const Rat& lo, const Rat& hi) const {
    if (cuts_.empty() || lo < cuts_.front() || hi > cuts_.back() || lo > hi)
        fail(errc::invalid_input, "restriction outside domain");
    PiecewisePoly out;
    if (lo == hi) {
        out.cuts_ = {lo, hi};
        out.pieces_ = {Poly::constant(eval(lo))};
        return out;
    }
    out.cuts_.push_back(lo);
    for (size_t i = 0; i < pieces_.size(); ++i) {
        Rat a = std::max(cuts_[i], lo), b = std::min(cuts_[i + 1], hi);
        if (a >= b) continue;
        out.pieces_.push_back(pieces_[i]);
        out.cuts_.push_back(b);
    }
    return out;
}

PiecewisePoly PiecewisePoly::times(const PiecewisePoly& o) const {
    if (cuts_.empty() || o.cuts_.empty())
        fail(errc::invalid_input, "product of empty piecewise polynomials");
    if (cuts_.front() != o.cuts_.front() || cuts_.back() != o.cuts_.back())
        fail(errc::invalid_input, "piecewise domains disagree");
    if (cuts_.front() == cuts_.back()) {
        PiecewisePoly out;
        out.cuts_ = cuts_;
        out.pieces_ = {Poly::constant(pieces_[0].eval(cuts_[0]) * o.pieces_[0].eval(cuts_[0]))};
        return out;
    }
    std::vector<Rat> merged;
    std::merge(cuts_.begin(), cuts_.end(), o.cuts_.begin(), o.cuts_.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    PiecewisePoly out;
    out.cuts_ = merged;
    for (size_t i = 0; i + 1 < merged.size(); ++i) {
        Rat mid = (merged[i] + merged[i + 1]) / 2;
        size_t a = 0;
        while (a + 2 < cuts_.size() && mid >= cuts_[a + 1]) ++a;
        size_t b = 0;
        while (b + 2 < o.cuts_.size() && mid >= o.cuts_[b + 1]) ++b;
        out.pieces_.push_back(pieces_[a] * o.pieces_[b]);
    }
    return out;
}

Rat PiecewisePoly::integral() const {
    Rat total(0);
    for (size_t i = 0; i < pieces_.size(); ++i) {
        Poly anti = pieces_[i].antiderivative();
        total += anti.eval(cuts_[i + 1]) - anti.eval(cuts_[i]);
    }
    return total;
}

PiecewisePoly PiecewisePoly::antiderivative() const {
    PiecewisePoly out;
    out.cuts_ = cuts_;
    Rat acc(0);
    for (size_t i = 0; i < pieces_.size(); ++i) {
        Poly anti = pieces_[i].antiderivative();
        Rat shift = acc - anti.eval(cuts_[i]);
        out.pieces_.push_back(anti + Poly::constant(shift));
        acc = anti.eval(cuts_[i + 1]) + shift;
    }
    return out;
}

PiecewisePoly PiecewisePoly::compose(const PiecewisePoly& f, const AffinePieces& e,
                                     const Rat& clamp) {
    if (e.pieces.empty()) fail(errc::invalid_input, "empty extent");
    PiecewisePoly out;
    out.cuts_.push_back(e.pieces.front().lo);

    auto emit = [&out](const Rat& hi, Poly p) {
        if (hi <= out.cuts_.back()) return;
        out.pieces_.push_back(std::move(p));
        out.cuts_.push_back(hi);
    };

    // f is continuous in our use (an antiderivative), so evaluating at piece
    // boundaries of f is unambiguous
    auto affine_span = [&](const Rat& t0, const Rat& t1, const Rat& s0, const Rat& s1) {
        if (t0 >= t1) return;
        if (s0 == s1) {
            emit(t1, Poly::constant(f.eval(s0)));
            return;
        }
        Rat slope = (s1 - s0) / (t1 - t0);
        std::vector<Rat> stops{t0};
        Rat smin = std::min(s0, s1), smax = std::max(s0, s1);
        for (const Rat& cut : f.cuts()) {
            if (cut > smin && cut < smax) stops.push_back(t0 + (cut - s0) / slope);
        }
        stops.push_back(t1);
        std::sort(stops.begin(), stops.end());
        for (size_t i = 0; i + 1 < stops.size(); ++i) {
            if (stops[i] == stops[i + 1]) continue;
            Rat tmid = (stops[i] + stops[i + 1]) / 2;
            Rat smid = s0 + slope * (tmid - t0);
            size_t piece = 0;
            const auto& fcuts = f.cuts();
            while (piece + 2 < fcuts.size() && smid >= fcuts[piece + 1]) ++piece;
            emit(stops[i + 1], f.pieces()[piece].compose_affine(s0 - slope * t0, slope));
        }
    };

    for (const auto& piece : e.pieces) {
        if (piece.lo == piece.hi) continue;
        Rat vlo = piece.value_lo, vhi = piece.value_hi;
        bool clamp_lo = vlo > clamp, clamp_hi = vhi > clamp;
        if (clamp_lo && clamp_hi) {
            emit(piece.hi, Poly::constant(f.eval(clamp)));
        } else if (!clamp_lo && !clamp_hi) {
            affine_span(piece.lo, piece.hi, vlo, vhi);
        } else {
            Rat slope = (vhi - vlo) / (piece.hi - piece.lo);
            Rat t_cross = piece.lo + (clamp - vlo) / slope;
            if (clamp_lo) {
                emit(t_cross, Poly::constant(f.eval(clamp)));
                affine_span(t_cross, piece.hi, clamp, vhi);
            } else {
                affine_span(piece.lo, t_cross, vlo, clamp);
                emit(piece.hi, Poly::constant(f.eval(clamp)));
            }
        }
    }
    if (out.pieces_.empty()) {
        Rat lo = out.cuts_.front();
        out.cuts_ = {lo, lo};
        out.pieces_ = {Poly::constant(f.eval(std::min(e.pieces.front().value_lo, clamp)))};
    }
    return out;
}

}  // namespace ydc
