#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hzt/int_matrix.hpp"
#include "hzt/numeric.hpp"

namespace hzt {

/// Dense matrix of exact rationals (reduced fractions), row-major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_int(const IntMatrix& m);
  static RatMatrix from_columns(std::size_t dim,
                                const std::vector<std::vector<Rat>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rat& c) const;
  RatMatrix transpose() const;
  RatMatrix pow(long e) const;  // negative exponents use the inverse
  bool operator==(const RatMatrix& rhs) const = default;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  std::vector<Rat> column(std::size_t j) const;

  std::size_t rank() const;
  Rat det() const;
  std::optional<RatMatrix> inverse() const;
  /// Solves this * x = b; nullopt if inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
  /// Basis of the right kernel (as columns).
  RatMatrix kernel() const;

  /// Common-denominator decomposition: returns (N, d) with this == N/d, d > 0.
  std::pair<IntMatrix, Int> clear_denominators() const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

/// Column span basis (echelon) of the given columns; used for Krylov spans.
std::vector<std::vector<Rat>> column_space_basis(
    const std::vector<std::vector<Rat>>& vecs);

}  // namespace hzt
