#include "functionals.hpp"

namespace ydc {

namespace {

// integral over [a, b] of z^m * L(z), L affine with L(a) = va, L(b) = vb
Rat monomial_times_affine(int m, const Rat& a, const Rat& b, const Rat& va, const Rat& vb) {
    if (a == b) return Rat(0);
    Rat s = (vb - va) / (b - a);
    Rat c = va - s * a;
    Rat r = c * (rat_pow(b, m + 1) - rat_pow(a, m + 1)) / (m + 1);
    r += s * (rat_pow(b, m + 2) - rat_pow(a, m + 2)) / (m + 2);
    return r;
}

}  // namespace

Rat s_k(const Partition& p, int k) {
    if (k < 2) fail(errc::invalid_input, "functional index must be >= 2");
    Rat total(0);
    const auto& parts = p.parts();
    for (int r = 1; r <= p.length(); ++r) {
        for (int col = 1; col <= parts[r - 1]; ++col) {
            Rat c(col - r);
            total += rat_pow(c + 1, k) - 2 * rat_pow(c, k) + rat_pow(c - 1, k);
        }
    }
    return total / k;
}

Rat s_k(const Profile& w, int k) {
    if (k < 2) fail(errc::invalid_input, "functional index must be >= 2");
    const auto& pts = w.breakpoints();
    Rat total(0);
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        Rat a = pts[i].z, b = pts[i + 1].z;
        Rat wa = pts[i].w, wb = pts[i + 1].w;
        if (a < 0 && b > 0) {
            Rat w0 = wa + (0 - a) * (wb - wa) / (b - a);
            total += monomial_times_affine(k - 2, a, Rat(0), wa + a, w0);
            total += monomial_times_affine(k - 2, Rat(0), b, w0, wb - b);
        } else if (b <= 0) {
            total += monomial_times_affine(k - 2, a, b, wa + a, wb + b);
        } else {
            total += monomial_times_affine(k - 2, a, b, wa - a, wb - b);
        }
    }
    return total * (k - 1) / 2;
}

namespace {

template <typename Shape>
Rat evaluate_terms(const SPolynomial& p, const Shape& shape) {
    Rat total(0);
    for (const auto& [m, c] : p.terms()) {
        Rat prod = c;
        for (int k : m) prod *= s_k(shape, k);
        total += prod;
    }
    return total;
}

}  // namespace

Rat evaluate(const SPolynomial& p, const Partition& lam) { return evaluate_terms(p, lam); }
Rat evaluate(const SPolynomial& p, const Profile& w) { return evaluate_terms(p, w); }

Rat evaluate(const ZPolynomial& p, const Profile& w, const Rat& z) {
    return evaluate(p.at(z), w);
}

}  // namespace ydc
