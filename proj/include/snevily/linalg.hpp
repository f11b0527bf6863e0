#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "snevily/field.hpp"

namespace snevily {

/// Dense row-major matrix over a field context.
template <typename F>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<typename F::Elem> entries;

    typename F::Elem& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const typename F::Elem& at(std::size_t r, std::size_t c) const {
        return entries[r * cols + c];
    }
};

template <FieldContext F>
Matrix<F> make_matrix(const F& f, std::size_t rows, std::size_t cols) {
    return Matrix<F>{rows, cols,
                     std::vector<typename F::Elem>(rows * cols, f.zero())};
}

template <FieldContext F>
Matrix<F> transpose(const Matrix<F>& a) {
    Matrix<F> t;
    t.rows = a.cols;
    t.cols = a.rows;
    t.entries.reserve(a.entries.size());
    for (std::size_t c = 0; c < a.cols; ++c)
        for (std::size_t r = 0; r < a.rows; ++r)
            t.entries.push_back(a.at(r, c));
    return t;
}

template <FieldContext F>
Matrix<F> matmul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
    Matrix<F> out = make_matrix(f, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t t = 0; t < a.cols; ++t) {
            if (f.is_zero(a.at(i, t))) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(a.at(i, t), b.at(t, j)));
        }
    return out;
}

namespace detail {

template <FieldContext F>
void swap_rows(Matrix<F>& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    std::swap_ranges(a.entries.begin() + r1 * a.cols,
                     a.entries.begin() + (r1 + 1) * a.cols,
                     a.entries.begin() + r2 * a.cols);
}

/// Division-free echelon rank (row_i <- pivot*row_i - factor*row_pivot).
/// Entry growth is exponential in the pivot count; callers keep the pivot
/// dimension small (matroid probes have at most target_rank pivots).
template <FieldContext F>
std::size_t rank_division_free(const F& f, Matrix<F> a) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols && r < a.rows; ++col) {
        std::size_t pivot = r;
        while (pivot < a.rows && f.is_zero(a.at(pivot, col))) ++pivot;
        if (pivot == a.rows) continue;
        swap_rows(a, r, pivot);
        for (std::size_t i = r + 1; i < a.rows; ++i) {
            if (f.is_zero(a.at(i, col))) continue;
            const typename F::Elem factor = a.at(i, col);
            for (std::size_t j = col; j < a.cols; ++j)
                a.at(i, j) = f.sub(f.mul(a.at(r, col), a.at(i, j)),
                                   f.mul(factor, a.at(r, j)));
        }
        ++r;
    }
    return r;
}

}  // namespace detail

/// Exact determinant by Gaussian elimination with the leftmost-topmost
/// nonzero pivot; row swaps tracked for the sign.
template <FieldContext F>
typename F::Elem determinant(const F& f, Matrix<F> a) {
    if (a.rows != a.cols) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows;
    bool negate = false;
    typename F::Elem det = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && f.is_zero(a.at(pivot, col))) ++pivot;
        if (pivot == n) return f.zero();
        if (pivot != col) {
            detail::swap_rows(a, col, pivot);
            negate = !negate;
        }
        const typename F::Elem pivot_inv = f.inv(a.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (f.is_zero(a.at(i, col))) continue;
            const typename F::Elem factor = f.mul(a.at(i, col), pivot_inv);
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(col, j)));
        }
        det = f.mul(det, a.at(col, col));
    }
    return negate ? f.neg(det) : det;
}

/// Row-echelon pivot count.
template <FieldContext F>
std::size_t rank(const F& f, Matrix<F> a) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols && r < a.rows; ++col) {
        std::size_t pivot = r;
        while (pivot < a.rows && f.is_zero(a.at(pivot, col))) ++pivot;
        if (pivot == a.rows) continue;
        detail::swap_rows(a, r, pivot);
        const typename F::Elem pivot_inv = f.inv(a.at(r, col));
        for (std::size_t i = r + 1; i < a.rows; ++i) {
            if (f.is_zero(a.at(i, col))) continue;
            const typename F::Elem factor = f.mul(a.at(i, col), pivot_inv);
            for (std::size_t j = col; j < a.cols; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        ++r;
    }
    return r;
}

}  // namespace snevily
