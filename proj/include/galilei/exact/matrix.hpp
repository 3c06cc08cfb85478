#pragma once

#include <galilei/exact/polynomial.hpp>
#include <galilei/exact/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace galilei::exact {

/// Row-major dense matrix of exact entries.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    template <typename F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

namespace detail {

inline bool is_zero(const Integer& z) { return z == 0; }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

inline Integer exact_quotient(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("inexact integer division in elimination");
    return q;
}
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) { return exact_divide(a, b); }

inline Integer one_like(const Integer&) { return 1; }
inline Polynomial one_like(const Polynomial& p) { return Polynomial::constant(1, p.variable()); }
inline Integer zero_like(const Integer&) { return 0; }
inline Polynomial zero_like(const Polynomial& p) { return Polynomial(p.variable()); }

}  // namespace detail

// Fraction-free (Bareiss) forward elimination over an integral domain with
// exact division. Pivot columns without a usable entry are skipped, which
// turns the loop into a rank computation for rectangular input; every
// division by the previous pivot stays exact because the surviving entries
// are minors of the original matrix.
template <typename T>
struct BareissResult {
    size_t rank = 0;
    // Product of the row-swap signs; only meaningful for square full-rank input.
    int sign = 1;
    // Last pivot; equals sign * det for square full-rank input.
    T last_pivot;
};

template <typename T>
BareissResult<T> bareiss_eliminate(Matrix<T> m) {
    BareissResult<T> res;
    if (m.rows() == 0 || m.cols() == 0) return res;
    T prev = detail::one_like(m(0, 0));
    res.last_pivot = prev;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && detail::is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            m.swap_rows(p, r);
            res.sign = -res.sign;
        }
        const T pivot = m(r, c);
        for (size_t i = r + 1; i < m.rows(); ++i) {
            const T factor = m(i, c);
            for (size_t j = c + 1; j < m.cols(); ++j) {
                T v = pivot * m(i, j);
                if (!detail::is_zero(factor)) v -= factor * m(r, j);
                m(i, j) = detail::exact_quotient(v, prev);
            }
            m(i, c) = detail::zero_like(pivot);
        }
        prev = pivot;
        res.last_pivot = pivot;
        ++r;
    }
    res.rank = r;
    return res;
}

template <typename T>
size_t bareiss_rank(const Matrix<T>& m) {
    return bareiss_eliminate(m).rank;
}

template <typename T>
T bareiss_determinant(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return detail::one_like(T{});
    auto res = bareiss_eliminate(m);
    if (res.rank < m.rows()) return detail::zero_like(m(0, 0));
    T det = res.last_pivot;
    if (res.sign < 0) det = -det;
    return det;
}

// Scales each row by the lcm of its denominators so Bareiss can run over Z.
inline Matrix<Integer> clear_row_denominators(const Matrix<Rational>& m) {
    Matrix<Integer> out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (size_t c = 0; c < m.cols(); ++c) {
            Rational scaled = m(r, c) * Rational(l);
            out(r, c) = scaled.get_num();
        }
    }
    return out;
}

inline size_t rational_rank(const Matrix<Rational>& m) { return bareiss_rank(clear_row_denominators(m)); }

inline Matrix<Rational> evaluate(const Matrix<Polynomial>& m, const Rational& at) {
    return m.map([&](const Polynomial& p) { return p.evaluate(at); });
}

}  // namespace galilei::exact
