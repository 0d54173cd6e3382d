#pragma once

// Exact integer/rational scalars and the small dense matrix type used for
// all stoichiometric and graph linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace crn {

using Integer = mpz_class;
using Rational = mpq_class;

template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, double> &&
                       (std::is_same_v<From, Integer> || std::is_same_v<From, Rational>)) {
    return x.get_d();
  } else {
    return To(x);
  }
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < m.rows_; ++r) {
      if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  template <class V>
  [[nodiscard]] std::vector<V> apply(std::span<const V> x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<V> out(rows_, V(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const T& a = (*this)(r, c);
        if (a != 0) out[r] += scalar_cast<V>(a) * x[c];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Parses `7`, `-3/4`, `0.125`, `2.5e-3`. The result is exact; decimal
/// literals are read as the rational they denote.
Rational parse_rational(std::string_view text);

/// Canonical `a` or `a/b` form with b > 0 and gcd(a,b) = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

double to_double(const Rational& q);
/// Natural logarithm of a positive rational without overflowing doubles.
double log_of(const Rational& q);

RationalMatrix to_rational(const IntMatrix& m);

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form over the rationals.
RowEchelon reduced_row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Basis of the right nullspace, one vector per free column of the reduced
/// echelon form (free variable set to one).
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Nullspace basis with denominators cleared, content removed and the first
/// nonzero entry of each vector positive.
std::vector<std::vector<Integer>> integer_nullspace(const IntMatrix& m);

/// Scales a rational vector to a primitive integer vector (same direction).
std::vector<Integer> primitive_integer_vector(std::span<const Rational> v);

Integer determinant(IntMatrix m);
Rational determinant(const RationalMatrix& m);

/// True when v lies in the column span of m.
bool in_column_span(const RationalMatrix& m, std::span<const Rational> v);

}  // namespace crn
