#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcluster/rational.hpp"

namespace qcluster {

template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, T fill = T(0)) : rows_(r), cols_(c), a_(r * c, fill) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    const std::vector<T>& data() const { return a_; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<std::int64_t>;
using RatMatrix = Matrix<Rat>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntMatrix operator-(const IntMatrix& a);

RatMatrix to_rat(const IntMatrix& m);
// Throws MathError if an entry is not integral.
IntMatrix to_int(const RatMatrix& m);

std::vector<std::int64_t> mat_vec(const IntMatrix& m, const std::vector<std::int64_t>& v);

bool is_skew(const IntMatrix& m);

// Row echelon data of a rational matrix: rank and pivot columns.
struct Echelon {
    RatMatrix reduced;  // reduced row echelon form
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};
Echelon rref(RatMatrix m);

std::size_t rank(const IntMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

// Picks |cols| linearly independent rows of a full-column-rank matrix (first found, top-down).
std::optional<std::vector<std::size_t>> independent_rows(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace qcluster
