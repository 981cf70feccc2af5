#pragma once

#include <map>
#include <optional>
#include <string>

#include "hzt/int_poly.hpp"
#include "hzt/rat_matrix.hpp"

namespace hzt {

/// Polynomial over Q stored as (integer polynomial, positive denominator)
/// in lowest terms: gcd(content(num), den) = 1.
class RatPoly {
 public:
  RatPoly() : den_(1) {}
  explicit RatPoly(IntPoly num, Int den = Int(1));
  static RatPoly zero() { return RatPoly(); }
  static RatPoly one() { return RatPoly(IntPoly::one()); }
  static RatPoly from_int(const IntPoly& p) { return RatPoly(p); }

  const IntPoly& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  long degree() const { return num_.degree(); }
  Rat leading() const;
  Rat coeff(std::size_t i) const { return rat_of(num_.coeff(i), den_); }

  RatPoly operator+(const RatPoly& rhs) const;
  RatPoly operator-(const RatPoly& rhs) const;
  RatPoly operator*(const RatPoly& rhs) const;
  RatPoly operator-() const;
  RatPoly scaled(const Rat& c) const;
  RatPoly pow(unsigned long e) const;
  bool operator==(const RatPoly& rhs) const = default;

  Rat eval(const Rat& x) const;
  RatPoly derivative() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  RatPoly monic() const;

  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
  bool divides(const RatPoly& other) const;

  /// The integer polynomial if all coefficients are integers.
  std::optional<IntPoly> as_integer() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  IntPoly num_;
  Int den_;
};

/// Monic gcd in Q[x]; gcd(0,0) = 0.
RatPoly poly_gcd_rational(const RatPoly& f, const RatPoly& g);
RatPoly poly_lcm_rational(const RatPoly& f, const RatPoly& g);

/// rev(f) normalized monic over Q; requires f(0) != 0.
RatPoly reciprocal_monic(const RatPoly& f);

/// Squarefree decomposition f = prod s_k^k with the s_k monic, squarefree
/// and pairwise coprime (Yun's algorithm over Q). Requires f monic.
std::map<unsigned long, RatPoly> squarefree_decomposition_q(const RatPoly& f);

/// Same, for monic integer input; the parts are integral by Gauss's lemma.
std::map<unsigned long, IntPoly> squarefree_decomposition(const IntPoly& f);

}  // namespace hzt
