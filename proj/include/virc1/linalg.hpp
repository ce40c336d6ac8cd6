#pragma once

#include "virc1/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace virc1 {

// Dense matrix over the exact rationals.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Rational& s) const;
    Matrix transposed() const;

    bool operator==(const Matrix& rhs) const;
    bool is_zero() const;

    // Exact Gaussian elimination with first-nonzero pivoting.
    Rational determinant() const;
    std::size_t rank() const;
    // Basis of the right null space, one vector per free column, free
    // columns taken in increasing order.
    std::vector<std::vector<Rational>> nullspace() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Column-major sparse matrix over the rationals; stored entries are nonzero
// and each column is sorted by row index.
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols);
    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void add(std::size_t i, std::size_t j, const Rational& value);
    Rational entry(std::size_t i, std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Rational>& dense_col);
    const std::vector<std::pair<std::size_t, Rational>>& column(std::size_t j) const {
        return cols_data_[j];
    }

    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix operator+(const SparseMatrix& rhs) const;
    SparseMatrix operator-(const SparseMatrix& rhs) const;
    SparseMatrix scaled(const Rational& s) const;

    bool operator==(const SparseMatrix& rhs) const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    Matrix dense() const;

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols_data_;
};

} // namespace virc1
