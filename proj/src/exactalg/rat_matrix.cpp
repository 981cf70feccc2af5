#include "hzt/rat_matrix.hpp"

#include <sstream>

namespace hzt {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
  return r;
}

RatMatrix RatMatrix::from_columns(std::size_t dim,
                                  const std::vector<std::vector<Rat>>& cols) {
  RatMatrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw error("column dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw error("matrix product shape mismatch");
  RatMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw error("matrix sum shape mismatch");
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + rhs.e_[i];
  return s;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw error("matrix difference shape mismatch");
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - rhs.e_[i];
  return s;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = c * e_[i];
  return s;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::pow(long e) const {
  if (!is_square()) throw error("pow of non-square matrix");
  RatMatrix base = *this;
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw error("negative power of singular matrix");
    base = *inv;
    e = -e;
  }
  RatMatrix r = identity(rows_);
  while (e > 0) {
    if (e & 1L) r = r * base;
    e >>= 1L;
    if (e > 0) base = base * base;
  }
  return r;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw error("apply dimension mismatch");
  std::vector<Rat> w(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) w[i] += at(i, j) * v[j];
  return w;
}

std::vector<Rat> RatMatrix::column(std::size_t j) const {
  std::vector<Rat> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

namespace {

// Gauss-Jordan; returns pivot columns. Reduces a in place.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(p, j), a.at(r, j));
    Rat inv = Rat(1) / a.at(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t RatMatrix::rank() const {
  RatMatrix a = *this;
  return rref(a).size();
}

Rat RatMatrix::det() const {
  if (!is_square()) throw error("determinant of non-square matrix");
  RatMatrix a = *this;
  Rat d(1);
  for (std::size_t k = 0; k < rows_; ++k) {
    std::size_t p = k;
    while (p < rows_ && a.at(p, k) == 0) ++p;
    if (p == rows_) return Rat(0);
    if (p != k) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a.at(p, j), a.at(k, j));
      d = -d;
    }
    d *= a.at(k, k);
    Rat inv = Rat(1) / a.at(k, k);
    for (std::size_t i = k + 1; i < rows_; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) * inv;
      for (std::size_t j = k; j < cols_; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return d;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (!is_square()) throw error("inverse of non-square matrix");
  RatMatrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() != rows_) return std::nullopt;
  RatMatrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::optional<std::vector<Rat>> RatMatrix::solve(
    const std::vector<Rat>& b) const {
  if (b.size() != rows_) throw error("solve dimension mismatch");
  RatMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto piv = rref(aug);
  for (std::size_t k = 0; k < piv.size(); ++k)
    if (piv[k] == cols_) return std::nullopt;  // inconsistent
  std::vector<Rat> x(cols_, Rat(0));
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.at(k, cols_);
  return x;
}

RatMatrix RatMatrix::kernel() const {
  RatMatrix a = *this;
  auto piv = rref(a);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix k(cols_, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k.at(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      k.at(piv[r], f) = -a.at(r, free_cols[f]);
  }
  return k;
}

std::pair<IntMatrix, Int> RatMatrix::clear_denominators() const {
  Int d(1);
  for (const auto& q : e_) d = int_lcm(d, Int(q.get_den()));
  IntMatrix n(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Rat v = at(i, j) * Rat(d);
      n.at(i, j) = Int(v.get_num());
    }
  return {n, d};
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return k;
}

std::vector<std::vector<Rat>> column_space_basis(
    const std::vector<std::vector<Rat>>& vecs) {
  if (vecs.empty()) return {};
  std::size_t dim = vecs[0].size();
  RatMatrix m(dim, vecs.size());
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = vecs[j][i];
  RatMatrix r = m;
  auto piv = rref(r);
  std::vector<std::vector<Rat>> basis;
  for (auto c : piv) basis.push_back(m.column(c));
  return basis;
}

}  // namespace hzt
