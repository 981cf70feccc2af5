#include "hzt/int_poly.hpp"

#include <sstream>

namespace hzt {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::linear(const Int& a) { return IntPoly({-a, Int(1)}); }

IntPoly IntPoly::monomial(const Int& coeff, std::size_t deg) {
  std::vector<Int> c(deg + 1, Int(0));
  c[deg] = coeff;
  return IntPoly(std::move(c));
}

const Int& IntPoly::leading() const {
  if (is_zero()) throw error("leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<Int> c(std::max(c_.size(), rhs.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c[i] += rhs.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  std::vector<Int> c(std::max(c_.size(), rhs.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c[i] -= rhs.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<Int> c(c_.size() + rhs.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      c[i + j] += c_[i] * rhs.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> c = c_;
  for (auto& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Int& s) const {
  if (s == 0) return IntPoly();
  std::vector<Int> c = c_;
  for (auto& v : c) v *= s;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(unsigned long e) const {
  IntPoly r = one();
  IntPoly b = *this;
  while (e > 0) {
    if (e & 1UL) r = r * b;
    e >>= 1UL;
    if (e > 0) b = b * b;
  }
  return r;
}

Int IntPoly::eval(const Int& x) const {
  Int r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(i) * c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::shift_argument(const Int& a) const {
  IntPoly r;
  IntPoly xa({a, Int(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * xa + IntPoly({*it, Int(0)});
  return r;
}

Int IntPoly::content() const {
  Int g(0);
  for (const auto& v : c_) g = int_gcd(g, v);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  Int g = content();
  if (g == 0 || g == 1) return *this;
  std::vector<Int> c = c_;
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& d) const {
  if (!d.is_monic()) throw error("divmod_monic requires monic divisor");
  std::vector<Int> rem = c_;
  long dd = d.degree();
  if (static_cast<long>(rem.size()) - 1 < dd)
    return {IntPoly(), *this};
  std::vector<Int> quo(rem.size() - dd, Int(0));
  for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
    Int q = rem[i];
    if (q == 0) continue;
    quo[i - dd] = q;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeff(j);
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntMatrix IntPoly::eval(const IntMatrix& a) const {
  if (!a.is_square()) throw error("polynomial of non-square matrix");
  IntMatrix r = IntMatrix::zero(a.rows(), a.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * a;
    for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, i) += *it;
  }
  return r;
}

IntMatrix IntPoly::companion() const {
  if (!is_monic()) throw error("companion matrix requires monic polynomial");
  std::size_t n = static_cast<std::size_t>(degree());
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.at(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -coeff(i);
  return m;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    Int c = coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Int a = abs(c);
    if (i == 0 || a != 1) os << a;
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

IntPoly reciprocal(const IntPoly& f) {
  if (f.is_zero() || f.coeff(0) == 0)
    throw error("reciprocal requires f(0) != 0");
  std::vector<Int> c(f.coeffs().rbegin(), f.coeffs().rend());
  IntPoly r{std::move(c)};
  if (r.leading() < 0) r = -r;
  return r;
}

std::pair<unsigned long, IntPoly> strip_root_one(const IntPoly& f) {
  if (f.is_zero()) throw error("strip_root_one of zero polynomial");
  IntPoly g = f;
  IntPoly xm1 = IntPoly::linear(Int(1));
  unsigned long m = 0;
  while (g.eval(Int(1)) == 0) {
    auto [q, r] = g.divmod_monic(xm1);
    if (!r.is_zero()) throw error("exact division by x-1 failed");
    g = q;
    ++m;
  }
  return {m, g};
}

}  // namespace hzt
