#pragma once

#include "geninv/errors.hpp"

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace geninv {

/// Field with an involutive automorphism `conj` (identity is allowed).
/// Models: GaussianRational (complex conjugation), Fp<P> (identity).
template <typename F>
concept scalar_field = std::equality_comparable<F> && std::copyable<F> &&
    std::constructible_from<F, int> && requires(const F& x, const F& y) {
        { x + y } -> std::convertible_to<F>;
        { x - y } -> std::convertible_to<F>;
        { x * y } -> std::convertible_to<F>;
        { x / y } -> std::convertible_to<F>;
        { -x } -> std::convertible_to<F>;
        { conj(x) } -> std::convertible_to<F>;
        { is_zero(x) } -> std::convertible_to<bool>;
    };

/// Dense matrix over an exact scalar field. Everything here is exact: no
/// tolerances, no pivot-magnitude heuristics. Pivot choice is "first nonzero
/// in column order", which makes every factorization deterministic.
template <scalar_field F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, F(0)) {}
    Matrix(std::initializer_list<std::initializer_list<F>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw DimensionMismatch("ragged initializer for Matrix");
            for (const auto& v : row) entries_.push_back(v);
        }
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            out.entries_[k] = a.entries_[k] + b.entries_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            out.entries_[k] = a.entries_[k] - b.entries_[k];
        return out;
    }
    Matrix operator-() const {
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t t = 0; t < a.cols_; ++t) {
                const F& av = a(i, t);
                if (is_zero(av)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) = out(i, j) + av * b(t, j);
            }
        return out;
    }
    friend Matrix operator*(const F& s, const Matrix& m) {
        Matrix out(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.entries_.size(); ++k) out.entries_[k] = s * m.entries_[k];
        return out;
    }

    Matrix conjugate_transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = conj((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? " [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << "]";
        }
        return os << "]";
    }

    Matrix columns(const std::vector<std::size_t>& idx) const {
        Matrix out(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                out(i, j) = (*this)(i, idx[j]);
        return out;
    }
    Matrix top_rows(std::size_t k) const {
        Matrix out(k, cols_);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = (*this)(i, j);
        return out;
    }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw DimensionMismatch("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> entries_;
};

template <scalar_field F>
bool is_zero(const Matrix<F>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) return false;
    return true;
}

// *-ring element surface: a square matrix with conjugate-transpose involution.
template <scalar_field F>
Matrix<F> star(const Matrix<F>& m) { return m.conjugate_transpose(); }

template <scalar_field F>
Matrix<F> zero_like(const Matrix<F>& m) { return Matrix<F>::zero(m.rows(), m.cols()); }

template <scalar_field F>
Matrix<F> one_like(const Matrix<F>& m) {
    if (!m.is_square())
        throw RingContextMismatch("unit requested for a rectangular matrix");
    return Matrix<F>::identity(m.rows());
}

template <scalar_field F>
bool same_context(const Matrix<F>& a, const Matrix<F>& b) {
    return a.is_square() && b.is_square() && a.rows() == b.rows();
}

template <scalar_field F>
struct RrefResult {
    Matrix<F> reduced;                 ///< reduced row-echelon form of the input
    std::vector<std::size_t> pivots;   ///< pivot column indices, ascending
    Matrix<F> transform;               ///< invertible, transform * input == reduced
};

/// Gauss-Jordan elimination with an accumulated row transform. Exact.
template <scalar_field F>
RrefResult<F> rref(const Matrix<F>& a) {
    RrefResult<F> res{a, {}, Matrix<F>::identity(a.rows())};
    Matrix<F>& m = res.reduced;
    Matrix<F>& t = res.transform;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && is_zero(m(piv, col))) ++piv;
        if (piv == rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(lead, j), m(piv, j));
        if (piv != lead)
            for (std::size_t j = 0; j < rows; ++j) std::swap(t(lead, j), t(piv, j));
        F inv = F(1) / m(lead, col);
        for (std::size_t j = 0; j < cols; ++j) m(lead, j) = inv * m(lead, j);
        for (std::size_t j = 0; j < rows; ++j) t(lead, j) = inv * t(lead, j);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || is_zero(m(r, col))) continue;
            F factor = m(r, col);
            for (std::size_t j = 0; j < cols; ++j) m(r, j) = m(r, j) - factor * m(lead, j);
            for (std::size_t j = 0; j < rows; ++j) t(r, j) = t(r, j) - factor * t(lead, j);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    return res;
}

template <scalar_field F>
std::size_t rank(const Matrix<F>& a) { return rref(a).pivots.size(); }

template <scalar_field F>
struct RankFactorization {
    Matrix<F> f;        ///< pivot columns of the input, full column rank
    Matrix<F> g;        ///< nonzero rows of the rref, full row rank
    std::size_t rank;   ///< common rank, f*g reproduces the input exactly
};

template <scalar_field F>
RankFactorization<F> rank_factorize(const Matrix<F>& a) {
    RrefResult<F> r = rref(a);
    if (r.pivots.empty())
        throw ZeroMatrixError("rank factorization of the zero matrix");
    return {a.columns(r.pivots), r.reduced.top_rows(r.pivots.size()), r.pivots.size()};
}

/// Exact inverse of a square matrix; nullopt when singular.
template <scalar_field F>
std::optional<Matrix<F>> try_inverse(const Matrix<F>& a) {
    if (!a.is_square())
        throw DimensionMismatch("inverse of a rectangular matrix");
    RrefResult<F> r = rref(a);
    if (r.pivots.size() != a.rows()) return std::nullopt;
    return r.transform;   // transform * a == I when a has full rank
}

template <scalar_field F>
Matrix<F> ring_pow(const Matrix<F>& a, unsigned n) {
    if (!a.is_square())
        throw DimensionMismatch("power of a rectangular matrix");
    Matrix<F> acc = Matrix<F>::identity(a.rows());
    for (unsigned k = 0; k < n; ++k) acc = acc * a;
    return acc;
}

/// rank(a) == rank(a^2); over a field this decides existence of the group,
/// core and dual core inverses (equivalently: g*f from any rank factorization
/// is invertible).
template <scalar_field F>
bool index_at_most_one(const Matrix<F>& a) {
    if (!a.is_square())
        throw DimensionMismatch("index of a rectangular matrix");
    if (is_zero(a)) return true;
    return rank(a) == rank(a * a);
}

namespace detail {

/// Moore-Penrose route a+ = g* (g g*)^-1 (f* f)^-1 f*. Over Q(i) the Gram
/// matrices are positive definite, so this always succeeds; over F_p either
/// Gram matrix may be singular, in which case there is no MP inverse at all.
template <scalar_field F>
std::optional<Matrix<F>> mp_via_factorization(const Matrix<F>& a) {
    if (is_zero(a)) return Matrix<F>::zero(a.cols(), a.rows());
    RankFactorization<F> fac = rank_factorize(a);
    Matrix<F> gs = fac.g.conjugate_transpose();
    Matrix<F> fs = fac.f.conjugate_transpose();
    auto gg = try_inverse(fac.g * gs);
    auto ff = try_inverse(fs * fac.f);
    if (!gg || !ff) return std::nullopt;
    return gs * (*gg) * (*ff) * fs;
}

/// Pivot-based inner inverse g_r * f_l: g_r reinserts the pivot identity of g,
/// f_l is the leading block of the row transform that reduces f. Works over
/// any field, and generally differs from the MP inverse, which is what the
/// invariance tests want.
template <scalar_field F>
Matrix<F> pivot_inner_inverse(const Matrix<F>& a) {
    RrefResult<F> red = rref(a);
    const std::size_t rho = red.pivots.size();
    Matrix<F> f = a.columns(red.pivots);
    Matrix<F> g = red.reduced.top_rows(rho);
    Matrix<F> g_right(a.cols(), rho);
    for (std::size_t j = 0; j < rho; ++j) g_right(red.pivots[j], j) = F(1);
    RrefResult<F> fred = rref(f);   // full column rank: reduces to [I; 0]
    Matrix<F> f_left = fred.transform.top_rows(rho);
    return g_right * f_left;
}

} // namespace detail

/// Canonical inner inverse a^(1): the Moore-Penrose inverse where it exists
/// (always, over Q(i)), otherwise the pivot-based one. Deterministic.
template <scalar_field F>
Matrix<F> inner_inverse(const Matrix<F>& a) {
    if (is_zero(a)) return Matrix<F>::zero(a.cols(), a.rows());
    if (auto mp = detail::mp_via_factorization(a)) return *mp;
    return detail::pivot_inner_inverse(a);
}

/// A deliberately different member of a{1}, for invariance checks.
template <scalar_field F>
Matrix<F> alternate_inner_inverse(const Matrix<F>& a) {
    if (is_zero(a)) return Matrix<F>::zero(a.cols(), a.rows());
    return detail::pivot_inner_inverse(a);
}

} // namespace geninv
