#include "sbasis.hpp"

#include <algorithm>
#include <set>

#include "derivations.hpp"
#include "embedding.hpp"
#include "functionals.hpp"
#include "linalg.hpp"

namespace ydc {

namespace {

Rat pinned_value(const DecoratedSum& ds, const Profile& omega, const Rat& z) {
    Rat v(0);
    for (const auto& [d, c] : ds.terms()) v += c * decorated_value(d, omega, z);
    return v;
}

Rat horner(const std::vector<Rat>& coeffs, const Rat& z) {
    Rat v(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
    return v;
}

std::string monomial_name(const SMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += "*";
        s += "S" + std::to_string(m[i]);
    }
    return s;
}

int shared_vertex_count(const GraphSum& s, const char* what) {
    int m = -1;
    for (const auto& [g, c] : s.terms()) {
        if (m < 0)
            m = g.vertex_count();
        else if (m != g.vertex_count())
            fail(errc::invalid_input, std::string(what) + " needs one shared vertex count");
    }
    return m;
}

}  // namespace

ZFit interpolate_in_z(const DecoratedSum& ds, const Profile& omega, int sample_offset) {
    if (!omega.is_strict())
        fail(errc::invalid_input, "z-interpolation needs a strict profile");
    ZFit out;
    if (ds.is_zero()) return out;
    int maxv = 0;
    for (const auto& [d, c] : ds.terms()) {
        if (!d.graph.is_forest())
            fail(errc::invalid_input, "z-interpolation needs forest terms");
        maxv = std::max(maxv, d.graph.vertex_count());
    }
    int deg = std::max(0, maxv - 2);

    Rat lo = omega.support_lo(), hi = omega.support_hi();
    Rat mid = (lo + hi) / 2, width = hi - lo;

    // fit nodes to the right of the midpoint, check points to the left; nudge
    // the spacing until every point clears the breakpoints (the support
    // endpoints are breakpoints, so this also keeps everything interior)
    std::vector<Rat> nodes, checks;
    for (int bump = std::max(0, sample_offset);; ++bump) {
        Rat delta = width / (2 * (2 * deg + 3) + bump);
        nodes.clear();
        checks.clear();
        for (int j = 1; j <= deg + 1; ++j) nodes.push_back(mid + j * delta);
        for (int j = 1; j <= 3; ++j) checks.push_back(mid - j * delta);
        bool clear = true;
        for (const auto& p : omega.breakpoints()) {
            for (const Rat& z : nodes) clear = clear && z != p.z;
            for (const Rat& z : checks) clear = clear && z != p.z;
        }
        if (clear) break;
    }

    Matrix a;
    std::vector<Rat> b;
    for (const Rat& z : nodes) {
        std::vector<Rat> row;
        Rat zp(1);
        for (int c = 0; c <= deg; ++c) {
            row.push_back(zp);
            zp *= z;
        }
        a.push_back(std::move(row));
        b.push_back(pinned_value(ds, omega, z));
    }
    SolveOutcome so = solve(std::move(a), std::move(b));

    out.coeffs = so.solution;
    while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
    for (const Rat& z : checks) {
        if (horner(out.coeffs, z) != pinned_value(ds, omega, z)) {
            out.is_polynomial = false;
            out.witness_z = z;
            break;
        }
    }
    return out;
}

DecompositionReport decomposition_identity_check(const GraphSum& s, const Profile& omega) {
    if (!omega.is_strict())
        fail(errc::invalid_input, "identity check needs a strict profile");
    DecompositionReport rep;
    rep.constants_note =
        "prefactor 1/m (m = vertices) with weight (i+2)/(i+1), locked by the "
        "single-edge and disjoint-pair calibrations; the prefactor 1/(2m) "
        "fails both";
    if (s.is_zero()) {
        rep.criterion_pass = rep.z_polynomial = rep.holds = true;
        return rep;
    }
    for (const auto& [g, c] : s.terms())
        if (!g.is_forest()) fail(errc::invalid_input, "identity check needs forest terms");
    rep.vertex_count = shared_vertex_count(s, "identity check");

    rep.criterion_pass = criterion_check(s).pass;
    ZFit fit = interpolate_in_z(del_z(s), omega);
    rep.z_polynomial = fit.is_polynomial;
    rep.coeffs = fit.coeffs;

    for (const auto& [g, c] : s.terms()) rep.lhs += c * embedding_volume(g, omega);
    for (int i = 0; i < static_cast<int>(fit.coeffs.size()); ++i)
        rep.rhs += fit.coeffs[i] * Rat(i + 2) / Rat(i + 1) * s_k(omega, i + 2);
    rep.rhs /= rep.vertex_count;
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

FitReport fit_s_basis(const GraphSum& s, const std::vector<Partition>& train,
                      const std::vector<Partition>& test) {
    FitReport rep;
    if (s.is_zero()) {
        rep.status = FitReport::Status::fitted;
        return rep;
    }
    if (train.empty()) fail(errc::invalid_input, "empty training set");
    int m = shared_vertex_count(s, "basis fit");

    // graded-degree-m monomials: partitions of m into parts >= 2
    std::vector<SMonomial> basis;
    for (const Partition& p : partitions_of(m)) {
        if (p.length() == 0 || p.row(p.length()) < 2) continue;
        SMonomial mon;
        for (int i = p.length(); i >= 1; --i) mon.push_back(p.row(i));
        basis.push_back(std::move(mon));
    }
    std::sort(basis.begin(), basis.end());

    auto value_row = [&](const Partition& lam) {
        std::vector<Rat> row;
        for (const SMonomial& mon : basis) {
            Rat v(1);
            for (int k : mon) v *= s_k(lam, k);
            row.push_back(v);
        }
        return row;
    };

    Matrix a;
    std::vector<Rat> b;
    for (const Partition& lam : train) {
        a.push_back(value_row(lam));
        b.push_back(count_embeddings_sum(s, lam));
    }
    SolveOutcome so = solve(a, b);
    if (so.consistent && so.rank < static_cast<int>(basis.size())) {
        std::string msg = "training set leaves monomials unresolved:";
        for (int c : so.free_cols) msg += " " + monomial_name(basis[c]);
        fail(errc::invalid_input, msg);
    }

    std::vector<Rat> x;
    if (so.consistent) {
        x = so.solution;
        rep.rank = so.rank;
    } else {
        // no exact solution; fit the largest greedily-consistent subsystem so
        // the residuals below have something concrete to witness against
        Matrix a2;
        std::vector<Rat> b2;
        for (size_t r = 0; r < a.size(); ++r) {
            a2.push_back(a[r]);
            b2.push_back(b[r]);
            SolveOutcome t = solve(a2, b2);
            if (!t.consistent) {
                a2.pop_back();
                b2.pop_back();
            } else {
                x = t.solution;
                rep.rank = t.rank;
            }
        }
        if (x.empty()) x.assign(basis.size(), Rat(0));
    }

    for (size_t i = 0; i < basis.size(); ++i) rep.poly.add(basis[i], x[i]);

    bool clean = true;
    auto check = [&](const Partition& lam) {
        Rat r = evaluate(rep.poly, lam) - count_embeddings_sum(s, lam);
        if (r != 0) {
            rep.residuals.push_back({lam, r});
            clean = false;
        }
    };
    for (const Partition& lam : train) check(lam);
    for (const Partition& lam : test) check(lam);
    rep.status = clean ? FitReport::Status::fitted : FitReport::Status::infeasible;
    return rep;
}

std::vector<Partition> default_train(int m) {
    std::set<Partition> out;
    for (int n = m; n <= m + 4; ++n)
        for (const Partition& p : partitions_of(n)) out.insert(p);
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q)
            out.insert(Partition(std::vector<int>(q, p)));
    return {out.begin(), out.end()};
}

std::vector<Partition> default_test(int m) {
    std::set<Partition> seen;
    for (const Partition& p : default_train(m)) seen.insert(p);
    std::set<Partition> out;
    for (int n = m + 5; n <= m + 6; ++n)
        for (const Partition& p : partitions_of(n)) out.insert(p);
    for (int q = 1; q <= 5; ++q) {
        out.insert(Partition(std::vector<int>(q, 5)));
        out.insert(Partition(std::vector<int>(5, q)));
    }
    std::vector<Partition> res;
    for (const Partition& p : out)
        if (!seen.count(p)) res.push_back(p);
    return res;
}

}  // namespace ydc
