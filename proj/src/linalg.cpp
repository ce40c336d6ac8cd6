#include "virc1/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace virc1 {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j) == 0) continue;
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix shape mismatch in sum");
    }
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix shape mismatch in difference");
    }
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r == 0; });
}

Rational Matrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    Matrix m = *this;
    Rational det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rational f = m.at(i, col) / m.at(col, col);
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        }
        Rational inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return rref(m).size();
}

std::vector<std::vector<Rational>> Matrix::nullspace() const {
    Matrix m = *this;
    const std::vector<std::size_t> pivot_cols = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -m.at(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cols_data_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_data_[i].emplace_back(i, Rational(1));
    return m;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rational& value) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("sparse entry out of range");
    if (value == 0) return;
    auto& col = cols_data_[j];
    auto pos = std::lower_bound(col.begin(), col.end(), i,
                                [](const auto& e, std::size_t r) { return e.first < r; });
    if (pos != col.end() && pos->first == i) {
        pos->second += value;
        if (pos->second == 0) col.erase(pos);
    } else {
        col.insert(pos, {i, value});
    }
}

Rational SparseMatrix::entry(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("sparse entry out of range");
    const auto& col = cols_data_[j];
    auto pos = std::lower_bound(col.begin(), col.end(), i,
                                [](const auto& e, std::size_t r) { return e.first < r; });
    if (pos != col.end() && pos->first == i) return pos->second;
    return Rational(0);
}

void SparseMatrix::set_column(std::size_t j, const std::vector<Rational>& dense_col) {
    if (dense_col.size() != rows_) throw std::invalid_argument("column length mismatch");
    auto& col = cols_data_[j];
    col.clear();
    for (std::size_t i = 0; i < dense_col.size(); ++i) {
        if (dense_col[i] != 0) col.emplace_back(i, dense_col[i]);
    }
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    SparseMatrix out(rows_, rhs.cols_);
    std::vector<Rational> acc(rows_, Rational(0));
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
        std::vector<std::size_t> touched;
        for (const auto& [k, bv] : rhs.cols_data_[j]) {
            for (const auto& [i, av] : cols_data_[k]) {
                if (acc[i] == 0) touched.push_back(i);
                acc[i] += av * bv;
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& col = out.cols_data_[j];
        for (std::size_t i : touched) {
            if (acc[i] != 0) col.emplace_back(i, acc[i]);
            acc[i] = 0;
        }
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix shape mismatch in sum");
    }
    SparseMatrix out = *this;
    for (std::size_t j = 0; j < cols_; ++j) {
        for (const auto& [i, v] : rhs.cols_data_[j]) out.add(i, j, v);
    }
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix shape mismatch in difference");
    }
    SparseMatrix out = *this;
    for (std::size_t j = 0; j < cols_; ++j) {
        for (const auto& [i, v] : rhs.cols_data_[j]) {
            Rational neg = -v;
            out.add(i, j, neg);
        }
    }
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
    SparseMatrix out(rows_, cols_);
    if (s == 0) return out;
    for (std::size_t j = 0; j < cols_; ++j) {
        for (const auto& [i, v] : cols_data_[j]) out.cols_data_[j].emplace_back(i, v * s);
    }
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && cols_data_ == rhs.cols_data_;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(cols_data_.begin(), cols_data_.end(),
                       [](const auto& col) { return col.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : cols_data_) n += col.size();
    return n;
}

Matrix SparseMatrix::dense() const {
    Matrix out(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        for (const auto& [i, v] : cols_data_[j]) out.at(i, j) = v;
    }
    return out;
}

} // namespace virc1
