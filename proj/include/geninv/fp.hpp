#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace geninv {

/// Prime field F_p with the identity as `conj`, so Matrix<Fp<P>> carries the
/// plain-transpose involution. Used as the constructive counterpart of the
/// exhaustive finite-ring search over M_k(Z_p).
template <std::uint32_t P>
struct Fp {
    static_assert(P >= 2, "modulus must be a prime >= 2");

    std::uint32_t v = 0;

    Fp() = default;
    Fp(int x) {
        long long r = x % static_cast<long long>(P);
        if (r < 0) r += P;
        v = static_cast<std::uint32_t>(r);
    }

    friend Fp operator+(Fp a, Fp b) { return from_raw((a.v + b.v) % P); }
    friend Fp operator-(Fp a, Fp b) { return from_raw((a.v + P - b.v) % P); }
    friend Fp operator*(Fp a, Fp b) {
        return from_raw(static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a.v) * b.v) % P));
    }
    friend Fp operator/(Fp a, Fp b) {
        if (b.v == 0) throw std::domain_error("division by zero in F_p");
        return a * b.inverse();
    }
    Fp operator-() const { return from_raw(v == 0 ? 0 : P - v); }

    Fp inverse() const {
        // Fermat: v^(P-2) mod P, valid because P is prime.
        std::uint64_t base = v, acc = 1, e = P - 2;
        while (e) {
            if (e & 1) acc = acc * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return from_raw(static_cast<std::uint32_t>(acc));
    }

    friend bool operator==(Fp, Fp) = default;
    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v; }

    static Fp from_raw(std::uint32_t raw) {
        Fp out;
        out.v = raw;
        return out;
    }
};

template <std::uint32_t P>
Fp<P> conj(Fp<P> x) { return x; }

template <std::uint32_t P>
bool is_zero(Fp<P> x) { return x.v == 0; }

} // namespace geninv
