#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hzt/int_matrix.hpp"
#include "hzt/numeric.hpp"

namespace hzt {

/// Dense integer polynomial, coefficients low-to-high; zero = empty vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return IntPoly({1}); }
  static IntPoly x() { return IntPoly({0, 1}); }
  /// x - a
  static IntPoly linear(const Int& a);
  static IntPoly monomial(const Int& coeff, std::size_t deg);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Int& leading() const;
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly operator-() const;
  IntPoly scaled(const Int& c) const;
  IntPoly pow(unsigned long e) const;
  bool operator==(const IntPoly& rhs) const = default;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  IntPoly derivative() const;
  /// Substitute x -> x + a.
  IntPoly shift_argument(const Int& a) const;
  /// gcd of all coefficients (nonnegative; 0 for the zero polynomial).
  Int content() const;
  IntPoly primitive_part() const;

  /// Quotient and remainder by a monic divisor (exact in Z[x]).
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

  /// Evaluate at an integer matrix.
  IntMatrix eval(const IntMatrix& a) const;

  /// Companion matrix of a monic polynomial.
  IntMatrix companion() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Int> c_;
};

/// x^deg(f) * f(1/x), sign-normalized to positive leading coefficient.
/// Roots of the result are the reciprocals of the roots of f. Requires
/// f(0) != 0.
IntPoly reciprocal(const IntPoly& f);

/// Strip the largest power of (x - 1): f = (x-1)^m * g with g(1) != 0.
/// Returns (m, g). f must be nonzero.
std::pair<unsigned long, IntPoly> strip_root_one(const IntPoly& f);

}  // namespace hzt
