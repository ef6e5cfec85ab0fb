#pragma once

#include "geninv/errors.hpp"

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace geninv {

/// Element of a unital *-ring. Backends provide the arithmetic, the
/// involution `star`, and context plumbing via ADL.
template <typename E>
concept star_ring_element = std::equality_comparable<E> && std::copyable<E> &&
    requires(const E& x, const E& y) {
        { x + y } -> std::convertible_to<E>;
        { x - y } -> std::convertible_to<E>;
        { x * y } -> std::convertible_to<E>;
        { -x } -> std::convertible_to<E>;
        { star(x) } -> std::convertible_to<E>;
        { zero_like(x) } -> std::convertible_to<E>;
        { one_like(x) } -> std::convertible_to<E>;
        { is_zero(x) } -> std::convertible_to<bool>;
        { same_context(x, y) } -> std::convertible_to<bool>;
    };

/// Backend whose ring can be listed exhaustively (the brute-force oracle).
template <typename E>
concept enumerable_ring_element = star_ring_element<E> &&
    requires(const E& x, std::uint64_t i) {
        { ring_order(x) } -> std::convertible_to<std::uint64_t>;
        { element_at(x, i) } -> std::convertible_to<E>;
        { element_index(x) } -> std::convertible_to<std::uint64_t>;
    };

/// Backend that can decide ideal containment constructively through an inner
/// inverse (every matrix over a field is regular).
template <typename E>
concept linear_solvable_element = star_ring_element<E> && requires(const E& x) {
    { inner_inverse(x) } -> std::convertible_to<E>;
};

template <star_ring_element E>
void require_same_context(const E& a, const E& b) {
    if (!same_context(a, b))
        throw RingContextMismatch("operands belong to different ring contexts");
}

/// a in bR, i.e. some u solves a = b*u. Solvable route: b b^(1) a == a.
template <star_ring_element E>
    requires linear_solvable_element<E> || enumerable_ring_element<E>
bool right_ideal_contains(const E& b, const E& a) {
    require_same_context(a, b);
    if constexpr (linear_solvable_element<E>) {
        return b * inner_inverse(b) * a == a;
    } else {
        const std::uint64_t n = ring_order(b);
        for (std::uint64_t i = 0; i < n; ++i)
            if (b * element_at(b, i) == a) return true;
        return false;
    }
}

/// a in Rb. Solvable route: a b^(1) b == a.
template <star_ring_element E>
    requires linear_solvable_element<E> || enumerable_ring_element<E>
bool left_ideal_contains(const E& b, const E& a) {
    require_same_context(a, b);
    if constexpr (linear_solvable_element<E>) {
        return a * inner_inverse(b) * b == a;
    } else {
        const std::uint64_t n = ring_order(b);
        for (std::uint64_t i = 0; i < n; ++i)
            if (element_at(b, i) * b == a) return true;
        return false;
    }
}

/// x in a° (ax = 0).
template <star_ring_element E>
bool right_annihilator_contains(const E& a, const E& x) {
    require_same_context(a, x);
    return is_zero(a * x);
}

/// x in °a (xa = 0).
template <star_ring_element E>
bool left_annihilator_contains(const E& a, const E& x) {
    require_same_context(a, x);
    return is_zero(x * a);
}

/// Mary's H pre-order: Ra ⊆ Rb and aR ⊆ bR.
template <star_ring_element E>
    requires linear_solvable_element<E> || enumerable_ring_element<E>
bool h_preorder_leq(const E& a, const E& b) {
    return right_ideal_contains(b, a) && left_ideal_contains(b, a);
}

template <star_ring_element E>
E ring_pow(const E& a, unsigned n) {
    E acc = one_like(a);
    for (unsigned k = 0; k < n; ++k) acc = acc * a;
    return acc;
}

/// Master equation list shared by every inverse definition:
///   1: axa = a      2: xax = x      3: (ax)* = ax   4: (xa)* = xa
///   5: ax = xa      6: xa^2 = a     7: ax^2 = x     8: a^2x = a
///   9: x^2a = x
template <star_ring_element E>
bool master_equation_holds(const E& a, const E& x, int id) {
    switch (id) {
        case 1: return a * x * a == a;
        case 2: return x * a * x == x;
        case 3: { E ax = a * x; return star(ax) == ax; }
        case 4: { E xa = x * a; return star(xa) == xa; }
        case 5: return a * x == x * a;
        case 6: return x * (a * a) == a;
        case 7: return a * (x * x) == x;
        case 8: return (a * a) * x == a;
        case 9: return (x * x) * a == x;
        default: throw std::invalid_argument("equation id out of 1..9");
    }
}

template <star_ring_element E>
bool satisfies_all(const E& a, const E& x, std::initializer_list<int> ids) {
    for (int id : ids)
        if (!master_equation_holds(a, x, id)) return false;
    return true;
}

inline const std::vector<int>& group_equations() {
    static const std::vector<int> ids{1, 2, 5};
    return ids;
}
inline const std::vector<int>& mp_equations() {
    static const std::vector<int> ids{1, 2, 3, 4};
    return ids;
}
inline const std::vector<int>& core_equations() {
    static const std::vector<int> ids{1, 2, 3, 6, 7};
    return ids;
}
inline const std::vector<int>& dual_core_equations() {
    static const std::vector<int> ids{1, 2, 4, 8, 9};
    return ids;
}

} // namespace geninv
