#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schemebounds/rational.hpp"

namespace schemebounds {

class shape_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by inverse() on a rank-deficient matrix; carries the rank found.
class singular_matrix_error : public std::runtime_error {
public:
    singular_matrix_error(std::size_t rank, std::size_t size)
        : std::runtime_error("singular matrix: rank " + std::to_string(rank) + " of " +
                             std::to_string(size)),
          rank_(rank) {}
    std::size_t rank() const { return rank_; }

private:
    std::size_t rank_;
};

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T init = T())
        : rows_(rows), cols_(cols), data_(rows * cols, std::move(init)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) {
        throw shape_error("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
    }
    Matrix<T> out(a.rows(), b.cols(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == T(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const T& s) {
    Matrix<T> out = a;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) *= s;
    }
    return out;
}

/*
 * Exact Gauss-Jordan inversion on [A | I]. Pivot selection is the first
 * row with a nonzero entry in the current column; there is no magnitude
 * heuristic since the arithmetic is exact. When a column yields no pivot
 * elimination continues on the remaining columns so the thrown error
 * reports the true rank.
 */
template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
    if (a.rows() != a.cols()) {
        throw shape_error("inverse of non-square matrix " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()));
    }
    const std::size_t n = a.rows();
    Matrix<T> w(n, 2 * n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
        w(i, n + i) = T(1);
    }

    std::size_t rank = 0;
    bool singular = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && w(pivot, col) == T(0)) ++pivot;
        if (pivot == n) {
            singular = true;
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w(pivot, j), w(rank, j));
        }
        const T inv_p = T(1) / w(rank, col);
        for (std::size_t j = 0; j < 2 * n; ++j) w(rank, j) *= inv_p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || w(i, col) == T(0)) continue;
            const T factor = w(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j) w(i, j) -= factor * w(rank, j);
        }
        ++rank;
    }
    if (singular) throw singular_matrix_error(rank, n);

    Matrix<T> out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = w(i, n + j);
    }
    return out;
}

using RationalMatrix = Matrix<Rational>;

}  // namespace schemebounds
