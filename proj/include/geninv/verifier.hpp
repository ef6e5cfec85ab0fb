#pragma once

#include "geninv/inverses.hpp"

#include <string>
#include <utility>
#include <vector>

namespace geninv {

/// One master equation evaluated at (a, x); holds iff lhs == rhs exactly.
template <star_ring_element E>
struct EquationReport {
    int id;
    E lhs;
    E rhs;
    bool holds;
};

namespace detail {

template <star_ring_element E>
std::pair<E, E> equation_sides(const E& a, const E& x, int id) {
    switch (id) {
        case 1: return {a * x * a, a};
        case 2: return {x * a * x, x};
        case 3: { E ax = a * x; return {star(ax), ax}; }
        case 4: { E xa = x * a; return {star(xa), xa}; }
        case 5: return {a * x, x * a};
        case 6: return {x * (a * a), a};
        case 7: return {a * (x * x), x};
        case 8: return {(a * a) * x, a};
        case 9: return {(x * x) * a, x};
        default: throw std::invalid_argument("equation id out of 1..9");
    }
}

} // namespace detail

template <star_ring_element E>
std::vector<EquationReport<E>> check_equations(const E& a, const E& x,
                                               const std::vector<int>& ids) {
    require_same_context(a, x);
    std::vector<EquationReport<E>> out;
    out.reserve(ids.size());
    for (int id : ids) {
        auto [lhs, rhs] = detail::equation_sides(a, x, id);
        bool holds = lhs == rhs;
        out.push_back({id, std::move(lhs), std::move(rhs), holds});
    }
    return out;
}

// ---------------------------------------------------------------------------
// EP battery. An element is EP when group and MP inverse exist and coincide.
// Every evaluable condition below is equivalent to EP-ness (given its own
// prerequisite), so all evaluated entries must agree; `consistent` records
// that. A false `consistent` means the library itself is broken.
// ---------------------------------------------------------------------------

enum class EpStatus { Ep, NotEp, PrerequisiteMissing };

struct EpCondition {
    std::string name;
    bool holds;
};

struct EpVerdict {
    EpStatus status = EpStatus::PrerequisiteMissing;
    bool group_exists = false;
    bool mp_exists = false;
    std::vector<EpCondition> conditions;
    bool consistent = true;

    bool is_ep() const { return status == EpStatus::Ep; }
};

template <star_ring_element E>
EpVerdict ep_check(const E& a) {
    EpVerdict v;
    auto g = group_inverse(a);
    auto m = mp_inverse(a);
    auto c = core_inverse(a);
    auto d = dual_core_inverse(a);
    v.group_exists = g.has_value();
    v.mp_exists = m.has_value();

    auto add = [&v](const char* name, bool holds) { v.conditions.push_back({name, holds}); };

    // Identity-of-inverses and identity-of-idempotents conditions; each is
    // evaluated only when its ingredients exist.
    if (g && m) add("group_eq_mp", g.value() == m.value());
    if (m) add("p_eq_r", a * m.value() == m.value() * a);
    if (c && g) add("p_eq_q", a * c.value() == a * g.value());
    if (d && g) add("r_eq_q", d.value() * a == a * g.value());
    if (g && c) add("group_eq_core", g.value() == c.value());
    if (g && d) add("group_eq_dual_core", g.value() == d.value());
    if (m && c) add("mp_eq_core", m.value() == c.value());
    if (m && d) add("mp_eq_dual_core", m.value() == d.value());
    if (c && d) add("core_eq_dual_core", c.value() == d.value());

    if (g && m) {
        // Commutator and product forms; all four inverses and the triple
        // exist here.
        const E& gi = g.value();
        const E& mi = m.value();
        const E& ci = c.value();
        const E& di = d.value();
        const E p = a * mi, q = a * gi, r = mi * a, qs = star(q);
        auto commutes = [](const E& x, const E& y) { return x * y == y * x; };
        add("comm_a_mp", commutes(a, mi));
        add("comm_a_core", commutes(a, ci));
        add("comm_a_dual_core", commutes(a, di));
        add("comm_group_mp", commutes(gi, mi));
        add("comm_group_core", commutes(gi, ci));
        add("comm_group_dual_core", commutes(gi, di));
        add("ap_eq_a", a * p == a);
        add("ra_eq_a", r * a == a);
        add("rap_eq_a", r * a * p == a);
        add("qsa_eq_a", qs * a == a);
        add("aqs_eq_a", a * qs == a);
        add("qsaqs_eq_a", qs * a * qs == a);
        add("ap_eq_ra", a * p == r * a);
        add("rap_eq_ra", r * a * p == r * a);
        add("rap_eq_ap", r * a * p == a * p);
        add("qsa_eq_ap", qs * a == a * p);
        add("aqs_eq_ra", a * qs == r * a);
    }

    bool any_true = false, any_false = false;
    for (const auto& cond : v.conditions) (cond.holds ? any_true : any_false) = true;
    v.consistent = !(any_true && any_false);

    if (!(g && m))
        v.status = EpStatus::PrerequisiteMissing;
    else
        v.status = (g.value() == m.value()) ? EpStatus::Ep : EpStatus::NotEp;
    return v;
}

// ---------------------------------------------------------------------------
// Inverse along an element: the unique x with xad = d = dax and x below d in
// the H pre-order. Matrix route: exists iff rank(dad) = rank(d), witness
// x = d (dad)^(1) d; verified exactly after construction.
// ---------------------------------------------------------------------------

template <scalar_field F>
Result<Matrix<F>> inverse_along(const Matrix<F>& a, const Matrix<F>& d) {
    require_same_context(a, d);
    Matrix<F> dad = d * a * d;
    if (rank(dad) != rank(d))
        return InverseFailure{InverseKind::Along, InverseFailure::Reason::RankMismatch,
                              rank(d), rank(dad), "rank(dad) < rank(d)"};
    Matrix<F> x = d * inner_inverse(dad) * d;
    if (!(x * a * d == d) || !(d * a * x == d) || !h_preorder_leq(x, d))
        throw std::logic_error("inverse-along candidate failed verification");
    return x;
}

template <enumerable_ring_element E>
Result<E> inverse_along(const E& a, const E& d) {
    require_same_context(a, d);
    std::optional<E> found;
    const std::uint64_t n = ring_order(a);
    for (std::uint64_t i = 0; i < n; ++i) {
        E x = element_at(a, i);
        if (!(x * a * d == d) || !(d * a * x == d)) continue;
        if (!h_preorder_leq(x, d)) continue;
        if (found) throw std::logic_error("inverse along d is not unique");
        found = x;
    }
    if (!found)
        return InverseFailure{InverseKind::Along, InverseFailure::Reason::EmptySearch, 0, 0, ""};
    return *found;
}

// ---------------------------------------------------------------------------
// (b, c)-inverse: the unique x in bRx ∩ xRc with xab = b and cax = c.
// Matrix route: exists iff rank(cab) = rank(b) = rank(c), witness
// x = b (cab)^(1) c; memberships are column/row space containments.
// ---------------------------------------------------------------------------

template <scalar_field F>
Result<Matrix<F>> bc_inverse(const Matrix<F>& a, const Matrix<F>& b, const Matrix<F>& c) {
    require_same_context(a, b);
    require_same_context(a, c);
    Matrix<F> cab = c * a * b;
    const std::size_t rk = rank(cab);
    if (rk != rank(b) || rk != rank(c))
        return InverseFailure{InverseKind::Bc, InverseFailure::Reason::RankMismatch,
                              rank(b), rk, "rank(cab) below rank(b) or rank(c)"};
    Matrix<F> x = b * inner_inverse(cab) * c;
    bool in_bRx = b * inner_inverse(b) * x == x;   // col(x) within col(b)
    bool in_xRc = x * inner_inverse(c) * c == x;   // row(x) within row(c)
    if (!(x * a * b == b) || !(c * a * x == c) || !in_bRx || !in_xRc)
        throw std::logic_error("(b,c)-inverse candidate failed verification");
    return x;
}

template <enumerable_ring_element E>
Result<E> bc_inverse(const E& a, const E& b, const E& c) {
    require_same_context(a, b);
    require_same_context(a, c);
    const std::uint64_t n = ring_order(a);
    std::optional<E> found;
    for (std::uint64_t i = 0; i < n; ++i) {
        E x = element_at(a, i);
        if (!(x * a * b == b) || !(c * a * x == c)) continue;
        bool in_bRx = false, in_xRc = false;
        for (std::uint64_t s = 0; s < n && !in_bRx; ++s)
            in_bRx = b * element_at(a, s) * x == x;
        if (!in_bRx) continue;
        for (std::uint64_t t = 0; t < n && !in_xRc; ++t)
            in_xRc = x * element_at(a, t) * c == x;
        if (!in_xRc) continue;
        if (found) throw std::logic_error("(b,c)-inverse is not unique");
        found = x;
    }
    if (!found)
        return InverseFailure{InverseKind::Bc, InverseFailure::Reason::EmptySearch, 0, 0, ""};
    return *found;
}

// ---------------------------------------------------------------------------
// Cross-checks tying the along/(b,c) constructions to the four inverses.
// ---------------------------------------------------------------------------

namespace detail {

/// Existence patterns match and values coincide when both exist.
template <star_ring_element E>
bool results_agree(const Result<E>& x, const Result<E>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x.has_value() || x.value() == y.value();
}

} // namespace detail

struct AlongCoreReport {
    bool mp_exists = false;   // hypothesis of the equivalence
    bool core_agrees = false;
    bool dual_agrees = false;
    bool ok() const { return core_agrees && dual_agrees; }
};

/// Inverse along aa* vs core inverse, and along a*a vs dual core inverse.
/// Guaranteed to agree whenever a is MP invertible; reported either way.
template <star_ring_element E>
AlongCoreReport along_core_crosscheck_report(const E& a) {
    AlongCoreReport rep;
    rep.mp_exists = mp_inverse(a).has_value();
    E as = star(a);
    rep.core_agrees = detail::results_agree(inverse_along(a, a * as), core_inverse(a));
    rep.dual_agrees = detail::results_agree(inverse_along(a, as * a), dual_core_inverse(a));
    return rep;
}

template <star_ring_element E>
bool along_core_crosscheck(const E& a) {
    return along_core_crosscheck_report(a).ok();
}

// ---------------------------------------------------------------------------
// Certificate: the self-contained, machine-checkable record for one element.
// ---------------------------------------------------------------------------

struct CrossCheck {
    std::string name;
    bool applicable;   // the theorem's hypothesis holds for this element
    bool holds;
};

template <star_ring_element E>
struct Certificate {
    E element;
    InverseBundle<E> bundle;
    /// Equation reports for each inverse that exists, keyed by inverse name.
    std::vector<std::pair<std::string, std::vector<EquationReport<E>>>> equations;
    EpVerdict ep;
    std::vector<CrossCheck> cross_checks;
    bool presence_ok = false;
    bool valid = false;
};

template <star_ring_element E>
Certificate<E> emit_certificate(const E& a) {
    Certificate<E> cert{a, compute_bundle(a), {}, ep_check(a), {}, false, false};

    auto report = [&cert, &a](const char* name, const Result<E>& res, const std::vector<int>& ids) {
        if (res) cert.equations.emplace_back(name, check_equations(a, res.value(), ids));
    };
    report("group", cert.bundle.group, group_equations());
    report("mp", cert.bundle.mp, mp_equations());
    report("core", cert.bundle.core, core_equations());
    report("dual_core", cert.bundle.dual_core, dual_core_equations());

    const E as = star(a);
    const bool mp_ok = cert.bundle.mp.has_value();
    auto agree = [](const Result<E>& x, const Result<E>& y) {
        return detail::results_agree(x, y);
    };
    cert.cross_checks = {
        {"along_self_is_group", true, agree(inverse_along(a, a), cert.bundle.group)},
        {"along_star_is_mp", true, agree(inverse_along(a, as), cert.bundle.mp)},
        {"along_a_astar_is_core", mp_ok, agree(inverse_along(a, a * as), cert.bundle.core)},
        {"along_astar_a_is_dual_core", mp_ok, agree(inverse_along(a, as * a), cert.bundle.dual_core)},
        {"bc_a_a_is_group", true, agree(bc_inverse(a, a, a), cert.bundle.group)},
        {"bc_astar_astar_is_mp", true, agree(bc_inverse(a, as, as), cert.bundle.mp)},
        {"bc_a_astar_is_core", true, agree(bc_inverse(a, a, as), cert.bundle.core)},
        {"bc_astar_a_is_dual_core", true, agree(bc_inverse(a, as, a), cert.bundle.dual_core)},
    };

    cert.presence_ok = presence_pattern_consistent(cert.bundle);
    bool equations_ok = true;
    for (const auto& [name, reports] : cert.equations)
        for (const auto& rep : reports) equations_ok = equations_ok && rep.holds;
    bool crosschecks_ok = true;
    for (const auto& cc : cert.cross_checks)
        if (cc.applicable) crosschecks_ok = crosschecks_ok && cc.holds;
    cert.valid = cert.presence_ok && equations_ok && cert.ep.consistent && crosschecks_ok;
    return cert;
}

} // namespace geninv
