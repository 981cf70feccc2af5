#include "hzt/int_matrix.hpp"

#include <sstream>

namespace hzt {

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rat(Int(s));
  }
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  return rat_of(num, den);
}

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(0) {
  for (const auto& r : rows) cols_ = r.size();
  e_.assign(rows_ * cols_, Int(0));
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw error("ragged matrix initializer");
    std::size_t j = 0;
    for (long v : r) at(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) {
  return IntMatrix(rows, cols);
}

IntMatrix IntMatrix::scalar(std::size_t n, const Int& c) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t dim,
                                  const std::vector<std::vector<Int>>& cols) {
  IntMatrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw error("column dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw error("matrix product shape mismatch");
  IntMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw error("matrix sum shape mismatch");
  IntMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + rhs.e_[i];
  return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw error("matrix difference shape mismatch");
  IntMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - rhs.e_[i];
  return s;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = -e_[i];
  return s;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
  IntMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = c * e_[i];
  return s;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
  if (!is_square()) throw error("pow of non-square matrix");
  IntMatrix r = identity(rows_);
  IntMatrix b = *this;
  while (e > 0) {
    if (e & 1UL) r = r * b;
    e >>= 1UL;
    if (e > 0) b = b * b;
  }
  return r;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw error("apply dimension mismatch");
  std::vector<Int> w(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) w[i] += at(i, j) * v[j];
  return w;
}

void IntMatrix::set_column(std::size_t j, const std::vector<Int>& v) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::hstack(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ && !is_empty() && !rhs.is_empty())
    throw error("hstack row mismatch");
  std::size_t r = rows_ ? rows_ : rhs.rows_;
  IntMatrix m(r, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < rhs.rows_; ++i)
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      m.at(i, cols_ + j) = rhs.at(i, j);
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& rhs) const {
  if (cols_ != rhs.cols_ && !is_empty() && !rhs.is_empty())
    throw error("vstack column mismatch");
  std::size_t c = cols_ ? cols_ : rhs.cols_;
  IntMatrix m(rows_ + rhs.rows_, c);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < rhs.rows_; ++i)
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      m.at(rows_ + i, j) = rhs.at(i, j);
  return m;
}

IntMatrix IntMatrix::submatrix(std::size_t i0, std::size_t j0,
                               std::size_t nrows, std::size_t ncols) const {
  IntMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = at(i0 + i, j0 + j);
  return m;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

Int IntMatrix::det() const {
  if (!is_square()) throw error("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = v;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
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

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return k;
}

}  // namespace hzt
