#pragma once

#include "geninv/rational.hpp"

#include <ostream>
#include <sstream>

namespace geninv {

/// Element of Q(i): rational real and imaginary parts, both kept canonical.
/// Closed under the field operations and under conjugation, which is the
/// entrywise half of the conjugate-transpose involution on matrices.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int v) : re(v) {}                      // NOLINT: intentional implicit
    GaussianRational(Rational real) : re(std::move(real)) {}
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;   // zero only for b = 0
        if (n == 0)
            throw std::domain_error("division by zero GaussianRational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        if (z.im == 0) return os << z.re;
        if (z.re == 0) return os << z.im << "i";
        os << z.re;
        if (z.im > 0) os << "+";
        return os << z.im << "i";
    }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

inline bool is_zero(const GaussianRational& z) { return z.re == 0 && z.im == 0; }

inline std::string to_string(const GaussianRational& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

} // namespace geninv
