#pragma once

#include "geninv/errors.hpp"
#include "geninv/ring.hpp"

#include <array>
#include <cstdint>
#include <future>
#include <string>
#include <vector>

namespace geninv {

inline constexpr std::uint64_t kDefaultCensusBound = 10'000;
inline constexpr std::uint64_t kHardCensusCap = 1'000'000;

enum class FiniteRingKind { ZmodN, MatZmodP };
enum class Involution { Identity, Transpose };

class FiniteRingElement;

/// A small finite *-ring, fully enumerable: Z_n with the identity involution
/// (valid since Z_n is commutative), or M_k(Z_p) with plain transpose.
/// Elements are addressed by a canonical index: the residue for Z_n, the
/// little-endian base-p digit string of the row-major entries for M_k(Z_p).
class FiniteStarRing {
public:
    static FiniteStarRing zmod(std::uint32_t n) {
        if (n == 0) throw std::invalid_argument("Z_0 is not a ring with unit");
        FiniteStarRing r;
        r.kind_ = FiniteRingKind::ZmodN;
        r.n_ = n;
        r.order_ = n;
        return r;
    }

    static FiniteStarRing mat_zmod(std::uint32_t k, std::uint32_t p) {
        if (k == 0 || k > 3) throw std::invalid_argument("matrix ring dimension must be 1..3");
        if (p < 2) throw std::invalid_argument("matrix ring modulus must be >= 2");
        FiniteStarRing r;
        r.kind_ = FiniteRingKind::MatZmodP;
        r.k_ = k;
        r.p_ = p;
        std::uint64_t order = 1;
        for (std::uint32_t d = 0; d < k * k; ++d) {
            if (order > kHardCensusCap) throw std::invalid_argument("matrix ring order too large");
            order *= p;
        }
        if (order > kHardCensusCap) throw std::invalid_argument("matrix ring order too large");
        r.order_ = order;
        return r;
    }

    FiniteRingKind kind() const { return kind_; }
    Involution involution() const {
        return kind_ == FiniteRingKind::ZmodN ? Involution::Identity : Involution::Transpose;
    }
    std::uint32_t modulus() const { return kind_ == FiniteRingKind::ZmodN ? n_ : p_; }
    std::uint32_t dim() const { return k_; }
    std::uint64_t order() const { return order_; }

    std::string descriptor() const {
        if (kind_ == FiniteRingKind::ZmodN) return "Z:" + std::to_string(n_);
        return "M" + std::to_string(k_) + ":Z" + std::to_string(p_);
    }

    friend bool operator==(const FiniteStarRing&, const FiniteStarRing&) = default;

    // Index-level arithmetic; the hot path for censuses.
    std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const {
        if (kind_ == FiniteRingKind::ZmodN) return (a + b) % n_;
        Digits da = decode(a), db = decode(b);
        for (std::uint32_t i = 0; i < k_ * k_; ++i) da[i] = (da[i] + db[i]) % p_;
        return encode(da);
    }
    std::uint64_t neg_index(std::uint64_t a) const {
        if (kind_ == FiniteRingKind::ZmodN) return a == 0 ? 0 : n_ - a;
        Digits da = decode(a);
        for (std::uint32_t i = 0; i < k_ * k_; ++i) da[i] = da[i] == 0 ? 0 : p_ - da[i];
        return encode(da);
    }
    std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const {
        if (kind_ == FiniteRingKind::ZmodN)
            return static_cast<std::uint64_t>(a * b % n_);
        Digits da = decode(a), db = decode(b), dc{};
        for (std::uint32_t i = 0; i < k_; ++i)
            for (std::uint32_t j = 0; j < k_; ++j) {
                std::uint64_t acc = 0;
                for (std::uint32_t t = 0; t < k_; ++t)
                    acc += static_cast<std::uint64_t>(da[i * k_ + t]) * db[t * k_ + j];
                dc[i * k_ + j] = static_cast<std::uint32_t>(acc % p_);
            }
        return encode(dc);
    }
    std::uint64_t star_index(std::uint64_t a) const {
        if (kind_ == FiniteRingKind::ZmodN) return a;
        Digits da = decode(a), dt{};
        for (std::uint32_t i = 0; i < k_; ++i)
            for (std::uint32_t j = 0; j < k_; ++j) dt[j * k_ + i] = da[i * k_ + j];
        return encode(dt);
    }
    std::uint64_t one_index() const {
        if (kind_ == FiniteRingKind::ZmodN) return n_ == 1 ? 0 : 1;
        Digits d{};
        for (std::uint32_t i = 0; i < k_; ++i) d[i * k_ + i] = 1;
        return encode(d);
    }

    using Digits = std::array<std::uint32_t, 9>;
    Digits decode(std::uint64_t index) const {
        Digits d{};
        for (std::uint32_t pos = 0; pos < k_ * k_; ++pos) {
            d[pos] = static_cast<std::uint32_t>(index % p_);
            index /= p_;
        }
        return d;
    }
    std::uint64_t encode(const Digits& d) const {
        std::uint64_t index = 0;
        for (std::uint32_t pos = k_ * k_; pos-- > 0;) index = index * p_ + d[pos];
        return index;
    }

    FiniteRingElement element(std::uint64_t index) const;
    FiniteRingElement zero() const;
    FiniteRingElement one() const;

private:
    FiniteStarRing() = default;
    FiniteRingKind kind_ = FiniteRingKind::ZmodN;
    std::uint32_t n_ = 1;   // ZmodN modulus
    std::uint32_t k_ = 1;   // MatZmodP dimension
    std::uint32_t p_ = 2;   // MatZmodP modulus
    std::uint64_t order_ = 1;
};

class FiniteRingElement {
public:
    FiniteRingElement(FiniteStarRing ring, std::uint64_t index)
        : ring_(std::move(ring)), index_(index) {
        if (index_ >= ring_.order())
            throw std::out_of_range("element index outside ring");
    }

    const FiniteStarRing& ring() const { return ring_; }
    std::uint64_t index() const { return index_; }

    friend FiniteRingElement operator+(const FiniteRingElement& a, const FiniteRingElement& b) {
        a.require_same_ring(b);
        return {a.ring_, a.ring_.add_index(a.index_, b.index_)};
    }
    friend FiniteRingElement operator-(const FiniteRingElement& a, const FiniteRingElement& b) {
        a.require_same_ring(b);
        return {a.ring_, a.ring_.add_index(a.index_, a.ring_.neg_index(b.index_))};
    }
    FiniteRingElement operator-() const { return {ring_, ring_.neg_index(index_)}; }
    friend FiniteRingElement operator*(const FiniteRingElement& a, const FiniteRingElement& b) {
        a.require_same_ring(b);
        return {a.ring_, a.ring_.mul_index(a.index_, b.index_)};
    }
    friend bool operator==(const FiniteRingElement& a, const FiniteRingElement& b) {
        return a.ring_ == b.ring_ && a.index_ == b.index_;
    }

private:
    void require_same_ring(const FiniteRingElement& b) const {
        if (!(ring_ == b.ring_))
            throw RingContextMismatch("elements of different finite rings");
    }
    FiniteStarRing ring_;
    std::uint64_t index_;
};

inline FiniteRingElement FiniteStarRing::element(std::uint64_t index) const {
    return FiniteRingElement(*this, index);
}
inline FiniteRingElement FiniteStarRing::zero() const { return element(0); }
inline FiniteRingElement FiniteStarRing::one() const { return element(one_index()); }

inline FiniteRingElement star(const FiniteRingElement& x) {
    return x.ring().element(x.ring().star_index(x.index()));
}
inline FiniteRingElement zero_like(const FiniteRingElement& x) { return x.ring().zero(); }
inline FiniteRingElement one_like(const FiniteRingElement& x) { return x.ring().one(); }
inline bool is_zero(const FiniteRingElement& x) { return x.index() == 0; }
inline bool same_context(const FiniteRingElement& a, const FiniteRingElement& b) {
    return a.ring() == b.ring();
}
inline std::uint64_t ring_order(const FiniteRingElement& x) { return x.ring().order(); }
inline FiniteRingElement element_at(const FiniteRingElement& x, std::uint64_t i) {
    return x.ring().element(i);
}
inline std::uint64_t element_index(const FiniteRingElement& x) { return x.index(); }

/// All x in the ring satisfying each selected master equation with a.
struct InverseSet {
    std::uint64_t element;
    std::vector<int> equation_ids;
    std::vector<std::uint64_t> members;   // ascending canonical indices
};

inline InverseSet enumerate_inverse_set(const FiniteRingElement& a,
                                        const std::vector<int>& equation_ids,
                                        std::uint64_t bound = kDefaultCensusBound) {
    const FiniteStarRing& ring = a.ring();
    if (ring.order() > bound) throw CensusBoundExceeded(ring.order(), bound);
    InverseSet out{a.index(), equation_ids, {}};
    for (std::uint64_t i = 0; i < ring.order(); ++i) {
        FiniteRingElement x = ring.element(i);
        bool ok = true;
        for (int id : equation_ids)
            if (!master_equation_holds(a, x, id)) { ok = false; break; }
        if (ok) out.members.push_back(i);
    }
    return out;
}

/// Per-ring classification of every element into the five invertibility
/// classes, with the separating examples the class lattice admits.
struct CensusReport {
    std::string ring;
    std::uint64_t order = 0;
    std::vector<std::uint64_t> regular, group, mp, core, dual_core;
    std::vector<std::uint64_t> core_not_mp, dual_core_not_mp;
    std::vector<std::uint64_t> group_not_mp, mp_not_group, regular_not_group;
    /// R# ∩ R† == R⊕ ∩ R_⊕ and R⊕ ∪ R_⊕ ⊆ R#, checked element-wise.
    bool inclusions_hold = false;
};

namespace detail {

enum : std::uint8_t {
    kRegularBit = 1,
    kGroupBit = 2,
    kMpBit = 4,
    kCoreBit = 8,
    kDualCoreBit = 16,
};

/// One pass over all candidate x per element a; folds the nine master
/// equations into the five class bits.
inline std::uint8_t classify_element(const FiniteStarRing& ring, std::uint64_t a) {
    const std::uint64_t n = ring.order();
    const std::uint64_t aa = ring.mul_index(a, a);
    std::uint8_t bits = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
        const std::uint64_t ax = ring.mul_index(a, x);
        const std::uint64_t xa = ring.mul_index(x, a);
        const bool e1 = ring.mul_index(ax, a) == a;
        if (!e1) continue;
        bits |= kRegularBit;
        const bool e2 = ring.mul_index(xa, x) == x;
        if (!e2) continue;
        const std::uint64_t xx = ring.mul_index(x, x);
        const bool e3 = ring.star_index(ax) == ax;
        const bool e4 = ring.star_index(xa) == xa;
        if (ax == xa) bits |= kGroupBit;
        if (e3 && e4) bits |= kMpBit;
        if (e3 && ring.mul_index(x, aa) == a && ring.mul_index(a, xx) == x) bits |= kCoreBit;
        if (e4 && ring.mul_index(aa, x) == a && ring.mul_index(xx, a) == x) bits |= kDualCoreBit;
        if (bits == (kRegularBit | kGroupBit | kMpBit | kCoreBit | kDualCoreBit)) break;
    }
    return bits;
}

} // namespace detail

inline CensusReport census(const FiniteStarRing& ring,
                           std::uint64_t bound = kDefaultCensusBound,
                           unsigned workers = 1) {
    const std::uint64_t n = ring.order();
    if (n > bound) throw CensusBoundExceeded(n, bound);
    if (workers == 0) workers = 1;

    std::vector<std::uint8_t> bits(n, 0);
    if (workers == 1 || n < 64) {
        for (std::uint64_t a = 0; a < n; ++a) bits[a] = detail::classify_element(ring, a);
    } else {
        // Partition by index range; the merge is position-wise, so the report
        // is identical for any worker count.
        const std::uint64_t chunk = (n + workers - 1) / workers;
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = static_cast<std::uint64_t>(w) * chunk;
            const std::uint64_t hi = lo + chunk < n ? lo + chunk : n;
            if (lo >= hi) break;
            jobs.push_back(std::async(std::launch::async, [&ring, &bits, lo, hi] {
                for (std::uint64_t a = lo; a < hi; ++a)
                    bits[a] = detail::classify_element(ring, a);
            }));
        }
        for (auto& j : jobs) j.get();
    }

    CensusReport rep;
    rep.ring = ring.descriptor();
    rep.order = n;
    rep.inclusions_hold = true;
    for (std::uint64_t a = 0; a < n; ++a) {
        const std::uint8_t b = bits[a];
        const bool reg = b & detail::kRegularBit, grp = b & detail::kGroupBit,
                   mp = b & detail::kMpBit, core = b & detail::kCoreBit,
                   dual = b & detail::kDualCoreBit;
        if (reg) rep.regular.push_back(a);
        if (grp) rep.group.push_back(a);
        if (mp) rep.mp.push_back(a);
        if (core) rep.core.push_back(a);
        if (dual) rep.dual_core.push_back(a);
        if (core && !mp) rep.core_not_mp.push_back(a);
        if (dual && !mp) rep.dual_core_not_mp.push_back(a);
        if (grp && !mp) rep.group_not_mp.push_back(a);
        if (mp && !grp) rep.mp_not_group.push_back(a);
        if (reg && !grp) rep.regular_not_group.push_back(a);
        if ((grp && mp) != (core && dual)) rep.inclusions_hold = false;
        if ((core || dual) && !grp) rep.inclusions_hold = false;
    }
    return rep;
}

} // namespace geninv
