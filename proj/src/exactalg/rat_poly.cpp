#include "hzt/rat_poly.hpp"

#include <sstream>

namespace hzt {

RatPoly::RatPoly(IntPoly num, Int den) : num_(std::move(num)), den_(den) {
  if (den_ == 0) throw error("zero denominator");
  normalize();
}

void RatPoly::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = int_gcd(num_.content(), den_);
  if (g > 1) {
    std::vector<Int> c = num_.coeffs();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    num_ = IntPoly(std::move(c));
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rat RatPoly::leading() const { return rat_of(num_.leading(), den_); }

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
  Int l = int_lcm(den_, rhs.den_);
  return RatPoly(num_.scaled(l / den_) + rhs.num_.scaled(l / rhs.den_), l);
}

RatPoly RatPoly::operator-(const RatPoly& rhs) const {
  Int l = int_lcm(den_, rhs.den_);
  return RatPoly(num_.scaled(l / den_) - rhs.num_.scaled(l / rhs.den_), l);
}

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
  return RatPoly(num_ * rhs.num_, den_ * rhs.den_);
}

RatPoly RatPoly::operator-() const { return RatPoly(-num_, den_); }

RatPoly RatPoly::scaled(const Rat& c) const {
  return RatPoly(num_.scaled(Int(c.get_num())), den_ * Int(c.get_den()));
}

RatPoly RatPoly::pow(unsigned long e) const {
  RatPoly r = one();
  RatPoly b = *this;
  while (e > 0) {
    if (e & 1UL) r = r * b;
    e >>= 1UL;
    if (e > 0) b = b * b;
  }
  return r;
}

Rat RatPoly::eval(const Rat& x) const {
  return num_.eval(x) / Rat(den_);
}

RatPoly RatPoly::derivative() const { return RatPoly(num_.derivative(), den_); }

RatPoly RatPoly::monic() const {
  if (is_zero()) throw error("monic normalization of zero polynomial");
  return scaled(Rat(1) / leading());
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw error("polynomial division by zero");
  long dd = divisor.degree();
  std::vector<Rat> rem(static_cast<std::size_t>(degree() + 1));
  for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = coeff(i);
  std::vector<Rat> quot(
      static_cast<std::size_t>(std::max<long>(0, degree() - dd + 1)), Rat(0));
  Rat lead_inv = Rat(1) / divisor.leading();
  for (long i = degree(); i >= dd; --i) {
    Rat c = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -=
          c * divisor.coeff(static_cast<std::size_t>(j));
  }
  auto pack = [](const std::vector<Rat>& v) {
    Int den(1);
    for (const auto& q : v) den = int_lcm(den, Int(q.get_den()));
    std::vector<Int> nums(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rat s = v[i] * Rat(den);
      nums[i] = Int(s.get_num());
    }
    return RatPoly(IntPoly(std::move(nums)), den);
  };
  if (dd > 0) rem.resize(static_cast<std::size_t>(dd));
  else rem.clear();
  return {pack(quot), pack(rem)};
}

bool RatPoly::divides(const RatPoly& other) const {
  if (is_zero()) return other.is_zero();
  return other.divmod(*this).second.is_zero();
}

std::optional<IntPoly> RatPoly::as_integer() const {
  if (den_ == 1) return num_;
  return std::nullopt;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (den_ == 1) return num_.to_string(var);
  std::ostringstream os;
  os << "(" << num_.to_string(var) << ")/" << den_;
  return os.str();
}

RatPoly poly_gcd_rational(const RatPoly& f, const RatPoly& g) {
  RatPoly a = f, b = g;
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.monic();
}

RatPoly poly_lcm_rational(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) return RatPoly::zero();
  RatPoly gcd = poly_gcd_rational(f, g);
  return (f * g).divmod(gcd).first.monic();
}

RatPoly reciprocal_monic(const RatPoly& f) {
  if (f.is_zero() || f.coeff(0) == 0)
    throw error("reciprocal requires f(0) != 0");
  std::vector<Int> c(f.num().coeffs().rbegin(), f.num().coeffs().rend());
  return RatPoly(IntPoly(std::move(c)), f.den()).monic();
}

std::map<unsigned long, RatPoly> squarefree_decomposition_q(const RatPoly& f) {
  if (!f.is_monic()) throw error("squarefree decomposition requires monic");
  std::map<unsigned long, RatPoly> parts;
  if (f.degree() == 0) return parts;
  // Yun's algorithm.
  RatPoly fp = f.derivative();
  RatPoly a = poly_gcd_rational(f, fp);
  RatPoly b = f.divmod(a).first;          // product of squarefree parts
  RatPoly c = fp.divmod(a).first;         // f'/a
  RatPoly d = c - b.derivative();
  unsigned long k = 1;
  while (b.degree() > 0) {
    RatPoly s = poly_gcd_rational(b, d);
    if (s.degree() > 0) parts[k] = s;
    b = b.divmod(s).first;
    c = d.divmod(s).first;
    d = c - b.derivative();
    ++k;
  }
  return parts;
}

std::map<unsigned long, IntPoly> squarefree_decomposition(const IntPoly& f) {
  if (!f.is_monic()) throw error("squarefree decomposition requires monic");
  auto q = squarefree_decomposition_q(RatPoly::from_int(f));
  std::map<unsigned long, IntPoly> parts;
  for (const auto& [k, p] : q) {
    auto ip = p.as_integer();
    if (!ip) throw error("squarefree part of integral input not integral");
    parts[k] = *ip;
  }
  return parts;
}

}  // namespace hzt
