#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hzt/numeric.hpp"

namespace hzt {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols);
  static IntMatrix scalar(std::size_t n, const Int& c);
  static IntMatrix from_columns(std::size_t dim,
                                const std::vector<std::vector<Int>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Int& c) const;
  IntMatrix pow(unsigned long e) const;
  bool operator==(const IntMatrix& rhs) const = default;

  std::vector<Int> column(std::size_t j) const;
  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;  // this * v
  void set_column(std::size_t j, const std::vector<Int>& v);

  /// Horizontal concatenation [this | rhs]; row counts must match.
  IntMatrix hstack(const IntMatrix& rhs) const;
  /// Vertical concatenation; column counts must match.
  IntMatrix vstack(const IntMatrix& rhs) const;
  IntMatrix submatrix(std::size_t i0, std::size_t j0, std::size_t nrows,
                      std::size_t ncols) const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  Int det() const;  // Bareiss fraction-free; requires square

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

/// Kronecker product A ⊗ B (acts on e_i ⊗ e_j ordered as i*cols(B)+j).
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

}  // namespace hzt
