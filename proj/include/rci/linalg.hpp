#pragma once

#include "rci/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rci {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Matrix transpose() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Determinant by fraction-free (Bareiss) elimination. Square input only.
Rational determinant(Matrix m);

/// Basis of { x : m x = 0 }, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);

/// Indices of the first maximal linearly independent set of rows, scanning top to bottom.
std::vector<std::size_t> independent_rows(const Matrix& m);

/// Row-reduced basis of the span of `vectors`, as an rref matrix with zero rows removed.
/// Two spans are equal iff their canonical bases compare equal.
Matrix canonical_span(const std::vector<Vector>& vectors, std::size_t dim);

/// Solves x^T basis = target for x, where the rows of `basis` are independent.
/// Returns false when target is outside the row span.
bool solve_row_combination(const Matrix& basis, const Vector& target, Vector& x);

Rational dot(const Vector& a, const Vector& b);

}  // namespace rci
