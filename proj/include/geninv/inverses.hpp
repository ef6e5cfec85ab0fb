#pragma once

#include "geninv/matrix.hpp"
#include "geninv/ring.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>

namespace geninv {

enum class InverseKind { Group, MoorePenrose, Core, DualCore, Along, Bc };

inline const char* inverse_name(InverseKind k) {
    switch (k) {
        case InverseKind::Group: return "group";
        case InverseKind::MoorePenrose: return "mp";
        case InverseKind::Core: return "core";
        case InverseKind::DualCore: return "dual_core";
        case InverseKind::Along: return "along";
        case InverseKind::Bc: return "bc";
    }
    return "?";
}

inline const std::vector<int>& defining_equations(InverseKind k) {
    switch (k) {
        case InverseKind::Group: return group_equations();
        case InverseKind::MoorePenrose: return mp_equations();
        case InverseKind::Core: return core_equations();
        case InverseKind::DualCore: return dual_core_equations();
        default: throw std::invalid_argument("no master equation set for this kind");
    }
}

/// Why a particular inverse does not exist; carries the witness so that a
/// certificate can explain the nonexistence.
struct InverseFailure {
    enum class Reason { RankMismatch, SingularGram, EmptySearch, PrerequisiteMissing };

    InverseKind kind;
    Reason reason;
    std::size_t rank_a = 0;
    std::size_t rank_a_sq = 0;
    std::string detail;

    std::string describe() const {
        std::string out = std::string(inverse_name(kind)) + " inverse does not exist: ";
        switch (reason) {
            case Reason::RankMismatch:
                out += "rank(a) = " + std::to_string(rank_a) +
                       " != rank(a^2) = " + std::to_string(rank_a_sq);
                break;
            case Reason::SingularGram:
                out += "singular Gram matrix (" + detail + ")";
                break;
            case Reason::EmptySearch:
                out += "no element of the ring satisfies the defining equations";
                break;
            case Reason::PrerequisiteMissing:
                out += detail;
                break;
        }
        return out;
    }
};

/// Either a computed inverse or the reason there is none.
template <typename T>
class Result {
public:
    Result(T value) : v_(std::move(value)) {}
    Result(InverseFailure f) : v_(std::move(f)) {}

    bool has_value() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return has_value(); }
    const T& value() const {
        if (!has_value()) throw std::logic_error("Result::value on failure: " + error().describe());
        return std::get<T>(v_);
    }
    const InverseFailure& error() const { return std::get<InverseFailure>(v_); }

private:
    std::variant<T, InverseFailure> v_;
};

// ---------------------------------------------------------------------------
// Matrix backend: existence by rank conditions, values by closed formulas on a
// rank factorization a = f*g. Everything exact, no search.
// ---------------------------------------------------------------------------

namespace detail {

template <scalar_field F>
InverseFailure rank_mismatch(InverseKind kind, const Matrix<F>& a) {
    return {kind, InverseFailure::Reason::RankMismatch, rank(a), rank(a * a), ""};
}

} // namespace detail

/// a^# = f (gf)^-2 g; exists iff rank(a) == rank(a^2), i.e. gf invertible.
template <scalar_field F>
Result<Matrix<F>> group_inverse(const Matrix<F>& a) {
    if (!a.is_square())
        throw DimensionMismatch("group inverse of a rectangular matrix");
    if (is_zero(a)) return a;
    RankFactorization<F> fac = rank_factorize(a);
    auto gf = try_inverse(fac.g * fac.f);
    if (!gf) return detail::rank_mismatch(InverseKind::Group, a);
    return Matrix<F>(fac.f * (*gf) * (*gf) * fac.g);
}

/// a† = g* (gg*)^-1 (f*f)^-1 f*; over Q(i) it always exists, over F_p exactly
/// when both Gram matrices are invertible.
template <scalar_field F>
Result<Matrix<F>> mp_inverse(const Matrix<F>& a) {
    if (!a.is_square())
        throw DimensionMismatch("MP inverse of a rectangular matrix");
    if (is_zero(a)) return a;
    RankFactorization<F> fac = rank_factorize(a);
    Matrix<F> gs = fac.g.conjugate_transpose();
    Matrix<F> fs = fac.f.conjugate_transpose();
    auto gg = try_inverse(fac.g * gs);
    if (!gg)
        return InverseFailure{InverseKind::MoorePenrose, InverseFailure::Reason::SingularGram,
                              0, 0, "g g*"};
    auto ff = try_inverse(fs * fac.f);
    if (!ff)
        return InverseFailure{InverseKind::MoorePenrose, InverseFailure::Reason::SingularGram,
                              0, 0, "f* f"};
    return Matrix<F>(gs * (*gg) * (*ff) * fs);
}

/// a⊕ = f (gf)^-1 (f*f)^-1 f* = q a^(1) p; exists iff gf and f*f invertible.
template <scalar_field F>
Result<Matrix<F>> core_inverse(const Matrix<F>& a) {
    if (!a.is_square())
        throw DimensionMismatch("core inverse of a rectangular matrix");
    if (is_zero(a)) return a;
    RankFactorization<F> fac = rank_factorize(a);
    auto gf = try_inverse(fac.g * fac.f);
    if (!gf) return detail::rank_mismatch(InverseKind::Core, a);
    Matrix<F> fs = fac.f.conjugate_transpose();
    auto ff = try_inverse(fs * fac.f);
    if (!ff)
        return InverseFailure{InverseKind::Core, InverseFailure::Reason::SingularGram,
                              0, 0, "f* f"};
    return Matrix<F>(fac.f * (*gf) * (*ff) * fs);
}

/// a_⊕ = g* (gg*)^-1 (gf)^-1 g = r a^(1) q; exists iff gf and gg* invertible.
template <scalar_field F>
Result<Matrix<F>> dual_core_inverse(const Matrix<F>& a) {
    if (!a.is_square())
        throw DimensionMismatch("dual core inverse of a rectangular matrix");
    if (is_zero(a)) return a;
    RankFactorization<F> fac = rank_factorize(a);
    auto gf = try_inverse(fac.g * fac.f);
    if (!gf) return detail::rank_mismatch(InverseKind::DualCore, a);
    Matrix<F> gs = fac.g.conjugate_transpose();
    auto gg = try_inverse(fac.g * gs);
    if (!gg)
        return InverseFailure{InverseKind::DualCore, InverseFailure::Reason::SingularGram,
                              0, 0, "g g*"};
    return Matrix<F>(gs * (*gg) * (*gf) * fac.g);
}

// Representation route x = (idempotent) a^(1) (idempotent), for cross-checking
// against the closed forms with any inner inverse. The idempotents are built
// directly from the factorization, independent of the inverse being tested:
//   p = f (f*f)^-1 f*   self-adjoint, pR = aR
//   r = g* (gg*)^-1 g   self-adjoint, Rr = Ra
//   q = f (gf)^-1 g     qR = aR and Rq = Ra

template <scalar_field F>
Result<Matrix<F>> range_idempotent(const Matrix<F>& a) {   // p
    if (is_zero(a)) return a;
    RankFactorization<F> fac = rank_factorize(a);
    Matrix<F> fs = fac.f.conjugate_transpose();
    auto ff = try_inverse(fs * fac.f);
    if (!ff)
        return InverseFailure{InverseKind::MoorePenrose, InverseFailure::Reason::SingularGram,
                              0, 0, "f* f"};
    return Matrix<F>(fac.f * (*ff) * fs);
}

template <scalar_field F>
Result<Matrix<F>> corange_idempotent(const Matrix<F>& a) {   // r
    if (is_zero(a)) return a;
    RankFactorization<F> fac = rank_factorize(a);
    Matrix<F> gs = fac.g.conjugate_transpose();
    auto gg = try_inverse(fac.g * gs);
    if (!gg)
        return InverseFailure{InverseKind::MoorePenrose, InverseFailure::Reason::SingularGram,
                              0, 0, "g g*"};
    return Matrix<F>(gs * (*gg) * fac.g);
}

template <scalar_field F>
Result<Matrix<F>> group_idempotent(const Matrix<F>& a) {   // q
    if (is_zero(a)) return a;
    RankFactorization<F> fac = rank_factorize(a);
    auto gf = try_inverse(fac.g * fac.f);
    if (!gf) return detail::rank_mismatch(InverseKind::Group, a);
    return Matrix<F>(fac.f * (*gf) * fac.g);
}

template <scalar_field F>
Result<Matrix<F>> group_inverse_via_representation(const Matrix<F>& a, const Matrix<F>& inner) {
    auto q = group_idempotent(a);
    if (!q) return q;
    return Matrix<F>(q.value() * inner * q.value());
}

template <scalar_field F>
Result<Matrix<F>> mp_inverse_via_representation(const Matrix<F>& a, const Matrix<F>& inner) {
    auto r = corange_idempotent(a);
    if (!r) return r;
    auto p = range_idempotent(a);
    if (!p) return p;
    return Matrix<F>(r.value() * inner * p.value());
}

template <scalar_field F>
Result<Matrix<F>> core_inverse_via_representation(const Matrix<F>& a, const Matrix<F>& inner) {
    auto q = group_idempotent(a);
    if (!q) return InverseFailure{InverseKind::Core, q.error().reason, q.error().rank_a,
                                  q.error().rank_a_sq, q.error().detail};
    auto p = range_idempotent(a);
    if (!p) return InverseFailure{InverseKind::Core, p.error().reason, 0, 0, p.error().detail};
    return Matrix<F>(q.value() * inner * p.value());
}

template <scalar_field F>
Result<Matrix<F>> dual_core_inverse_via_representation(const Matrix<F>& a, const Matrix<F>& inner) {
    auto r = corange_idempotent(a);
    if (!r) return InverseFailure{InverseKind::DualCore, r.error().reason, 0, 0, r.error().detail};
    auto q = group_idempotent(a);
    if (!q) return InverseFailure{InverseKind::DualCore, q.error().reason, q.error().rank_a,
                                  q.error().rank_a_sq, q.error().detail};
    return Matrix<F>(r.value() * inner * q.value());
}

// ---------------------------------------------------------------------------
// Enumerable backend: exhaustive search for the unique member of the defining
// equation set. This is the independent oracle for the constructive routes.
// ---------------------------------------------------------------------------

namespace detail {

template <enumerable_ring_element E>
Result<E> search_unique_inverse(const E& a, InverseKind kind) {
    const std::vector<int>& ids = defining_equations(kind);
    std::optional<E> found;
    const std::uint64_t n = ring_order(a);
    for (std::uint64_t i = 0; i < n; ++i) {
        E x = element_at(a, i);
        bool ok = true;
        for (int id : ids)
            if (!master_equation_holds(a, x, id)) { ok = false; break; }
        if (!ok) continue;
        if (found)
            throw std::logic_error(std::string("uniqueness violated for ") + inverse_name(kind));
        found = x;
    }
    if (!found)
        return InverseFailure{kind, InverseFailure::Reason::EmptySearch, 0, 0, ""};
    return *found;
}

} // namespace detail

template <enumerable_ring_element E>
Result<E> group_inverse(const E& a) {
    return detail::search_unique_inverse(a, InverseKind::Group);
}
template <enumerable_ring_element E>
Result<E> mp_inverse(const E& a) {
    return detail::search_unique_inverse(a, InverseKind::MoorePenrose);
}
template <enumerable_ring_element E>
Result<E> core_inverse(const E& a) {
    return detail::search_unique_inverse(a, InverseKind::Core);
}
template <enumerable_ring_element E>
Result<E> dual_core_inverse(const E& a) {
    return detail::search_unique_inverse(a, InverseKind::DualCore);
}

template <star_ring_element E>
Result<E> compute_inverse(InverseKind k, const E& a) {
    switch (k) {
        case InverseKind::Group: return group_inverse(a);
        case InverseKind::MoorePenrose: return mp_inverse(a);
        case InverseKind::Core: return core_inverse(a);
        case InverseKind::DualCore: return dual_core_inverse(a);
    }
    throw std::invalid_argument("bad inverse kind");
}

// ---------------------------------------------------------------------------
// Idempotent triple and derived identities, generic over both backends.
// ---------------------------------------------------------------------------

/// p = a a† (self-adjoint, pR = aR), q = a a# (qR = aR, Rq = Ra),
/// r = a† a (self-adjoint, Rr = Ra). A field is absent when the inverse
/// behind it does not exist.
template <star_ring_element E>
struct IdempotentTriple {
    std::optional<E> p, q, r;
};

namespace detail {

template <star_ring_element E>
bool ideal_equal_right(const E& x, const E& y) {   // xR == yR
    return right_ideal_contains(x, y) && right_ideal_contains(y, x);
}
template <star_ring_element E>
bool ideal_equal_left(const E& x, const E& y) {   // Rx == Ry
    return left_ideal_contains(x, y) && left_ideal_contains(y, x);
}

} // namespace detail

/// Checks the defining properties of a computed triple: idempotency,
/// self-adjointness of p and r, and the ideal equalities that make the triple
/// unique. A false return would contradict the underlying theory.
template <star_ring_element E>
bool verify_idempotent_triple(const E& a, const IdempotentTriple<E>& t) {
    if (t.p) {
        const E& p = *t.p;
        if (!(p * p == p) || !(star(p) == p)) return false;
        if (!detail::ideal_equal_right(p, a)) return false;
    }
    if (t.q) {
        const E& q = *t.q;
        if (!(q * q == q)) return false;
        if (!detail::ideal_equal_right(q, a) || !detail::ideal_equal_left(q, a)) return false;
    }
    if (t.r) {
        const E& r = *t.r;
        if (!(r * r == r) || !(star(r) == r)) return false;
        if (!detail::ideal_equal_left(r, a)) return false;
    }
    return true;
}

template <star_ring_element E>
IdempotentTriple<E> idempotent_triple(const E& a) {
    IdempotentTriple<E> t;
    auto g = group_inverse(a);
    auto m = mp_inverse(a);
    if (g) t.q = a * g.value();
    if (m) {
        t.p = a * m.value();
        t.r = m.value() * a;
    }
    if (!verify_idempotent_triple(a, t))
        throw std::logic_error("idempotent triple failed its defining conditions");
    return t;
}

/// The four inverses of one element, plus the triple.
template <star_ring_element E>
struct InverseBundle {
    E a;
    Result<E> group, mp, core, dual_core;
    IdempotentTriple<E> triple;
};

template <star_ring_element E>
InverseBundle<E> compute_bundle(const E& a) {
    return InverseBundle<E>{a, group_inverse(a), mp_inverse(a), core_inverse(a),
                            dual_core_inverse(a), idempotent_triple(a)};
}

/// Group and MP exist together iff core and dual core exist together; core or
/// dual core each imply group.
template <star_ring_element E>
bool presence_pattern_consistent(const InverseBundle<E>& b) {
    const bool g = b.group.has_value(), m = b.mp.has_value(), c = b.core.has_value(),
               d = b.dual_core.has_value();
    if ((g && m) != (c && d)) return false;
    if ((c || d) && !g) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Double inverses: the sixteen values inverse_j(inverse_i(a)), computed both
// recursively and by closed forms in a, p, q, r; the two tables must agree.
// ---------------------------------------------------------------------------

template <star_ring_element E>
struct DoubleInverseTable {
    std::array<E, 4> base;                       // a#, a†, a⊕, a_⊕
    std::array<std::array<E, 4>, 4> recursive;   // [i][j] = inverse_j(base[i])
    std::array<std::array<E, 4>, 4> closed_form;
    bool agree = false;
};

template <star_ring_element E>
Result<DoubleInverseTable<E>> double_inverse_table(const E& a) {
    auto g = group_inverse(a);
    auto m = mp_inverse(a);
    if (!g)
        return InverseFailure{InverseKind::Group, InverseFailure::Reason::PrerequisiteMissing,
                              0, 0, "double-inverse table needs a group invertible"};
    if (!m)
        return InverseFailure{InverseKind::MoorePenrose, InverseFailure::Reason::PrerequisiteMissing,
                              0, 0, "double-inverse table needs a MP invertible"};

    const E p = a * m.value();
    const E q = a * g.value();
    const E r = m.value() * a;
    const E qs = star(q);

    const std::array<E, 4> fill{a, a, a, a};
    DoubleInverseTable<E> t{{g.value(), m.value(), core_inverse(a).value(),
                             dual_core_inverse(a).value()},
                            {fill, fill, fill, fill},
                            {fill, fill, fill, fill},
                            true};

    const std::array<InverseKind, 4> kinds{InverseKind::Group, InverseKind::MoorePenrose,
                                           InverseKind::Core, InverseKind::DualCore};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            auto res = compute_inverse(kinds[j], t.base[i]);
            if (!res) throw std::logic_error("double inverse unexpectedly missing");
            t.recursive[i][j] = res.value();
        }

    t.closed_form[0] = {a, r * p, a * p, r * a};
    t.closed_form[1] = {qs * a * qs, a, qs * a, a * qs};
    t.closed_form[2] = {a * p, a * p, a * p, a * p};
    t.closed_form[3] = {r * a, r * a, r * a, r * a};

    for (std::size_t i = 0; i < 4 && t.agree; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!(t.recursive[i][j] == t.closed_form[i][j])) { t.agree = false; break; }
    if (!t.agree)
        throw std::logic_error("double-inverse closed forms disagree with recursion");
    return t;
}

/// (a^n)⊕, asserted equal to (a⊕)^n.
template <star_ring_element E>
Result<E> power_core(const E& a, unsigned n, unsigned bound = 6) {
    if (n < 1 || n > bound)
        throw std::invalid_argument("power_core exponent outside 1..bound");
    auto c = core_inverse(a);
    if (!c) return c;
    auto cn = core_inverse(ring_pow(a, n));
    if (!cn) throw std::logic_error("a^n lost core invertibility");
    if (!(cn.value() == ring_pow(c.value(), n)))
        throw std::logic_error("(a^n) core inverse differs from (a core)^n");
    return cn;
}

} // namespace geninv
