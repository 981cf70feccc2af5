#include "hzt/lattice.hpp"

#include <algorithm>

namespace hzt {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += c * row[b]
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}

// col[a] += c * col[b]
void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

void negate_col(IntMatrix& m, std::size_t a) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) = -m.at(i, a);
}

}  // namespace

IntMatrix SnfResult::diagonal(std::size_t rows, std::size_t cols) const {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  std::size_t n = std::min(rows, cols);

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Minimal-absolute-value pivot in the trailing block, to limit
      // coefficient growth.
      std::size_t pi = k, pj = k;
      bool found = false;
      Int best;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j) {
          if (a.at(i, j) == 0) continue;
          Int ab = abs(a.at(i, j));
          if (!found || ab < best) {
            best = ab;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) goto next_k;  // trailing block is zero
      if (pi != k) {
        swap_rows(a, k, pi);
        swap_rows(u, k, pi);
      }
      if (pj != k) {
        swap_cols(a, k, pj);
        swap_cols(v, k, pj);
      }
      // Reduce column k and row k against the pivot.
      bool dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a.at(i, k) == 0) continue;
        Int q = a.at(i, k) / a.at(k, k);  // truncated is fine, loop repeats
        add_row(a, i, k, -q);
        add_row(u, i, k, -q);
        if (a.at(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a.at(k, j) == 0) continue;
        Int q = a.at(k, j) / a.at(k, k);
        add_col(a, j, k, -q);
        add_col(v, j, k, -q);
        if (a.at(k, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide every entry of the remaining block.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < rows && divides_all; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a.at(i, j) % a.at(k, k) != 0) {
            add_row(a, k, i, Int(1));
            add_row(u, k, i, Int(1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (a.at(k, k) < 0) {
      negate_row(a, k);
      negate_row(u, k);
    }
  next_k:;
  }

  SnfResult res;
  res.d.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.d[i] = a.at(i, i);
  res.u = u;
  res.v = v;
  return res;
}

FgAbelian cokernel(const IntMatrix& m) {
  SnfResult s = smith_normal_form(m);
  FgAbelian g;
  std::size_t nonzero = 0;
  for (const auto& d : s.d) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) g.torsion.push_back(d);
  }
  std::sort(g.torsion.begin(), g.torsion.end());
  g.free_rank = static_cast<long>(m.rows()) - static_cast<long>(nonzero);
  return g;
}

IntMatrix hermite_rows(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclidean reduction within column c, rows r..end.
    for (;;) {
      std::size_t p = rows;
      Int best;
      for (std::size_t i = r; i < rows; ++i) {
        if (a.at(i, c) == 0) continue;
        Int ab = abs(a.at(i, c));
        if (p == rows || ab < best) {
          best = ab;
          p = i;
        }
      }
      if (p == rows) break;
      if (p != r) swap_rows(a, r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a.at(i, c) == 0) continue;
        Int q = a.at(i, c) / a.at(r, c);
        add_row(a, i, r, -q);
        if (a.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a.at(r, c) == 0) continue;
    if (a.at(r, c) < 0) negate_row(a, r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = int_fdiv(a.at(i, c), a.at(r, c));
      add_row(a, i, r, -q);
    }
    ++r;
  }
  return a.submatrix(0, 0, r, cols);
}

IntMatrix hermite_cols(const IntMatrix& m) {
  return hermite_rows(m.transpose()).transpose();
}

IntMatrix kernel_lattice(const IntMatrix& m) {
  if (m.cols() == 0) return IntMatrix(0, 0);
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  SnfResult s = smith_normal_form(m);
  std::vector<std::size_t> free_idx;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero = j >= s.d.size() || s.d[j] == 0;
    if (zero) free_idx.push_back(j);
  }
  IntMatrix basis = s.v.select_columns(free_idx);
  return hermite_cols(basis);
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m,
                                              const std::vector<Int>& b) {
  if (b.size() != m.rows()) throw error("solve_integer dimension mismatch");
  SnfResult s = smith_normal_form(m);
  std::vector<Int> c = s.u.apply(b);
  std::vector<Int> y(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int di = i < s.d.size() ? s.d[i] : Int(0);
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      if (i < m.cols()) y[i] = c[i] / di;
    }
  }
  return s.v.apply(y);
}

bool lattice_contains(const IntMatrix& m, const std::vector<Int>& v) {
  return solve_integer(m, v).has_value();
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  return hermite_cols(a) == hermite_cols(b);
}

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) {
  if (a.is_empty()) return hermite_cols(b);
  if (b.is_empty()) return hermite_cols(a);
  return hermite_cols(a.hstack(b));
}

IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& l) {
  // {x : m x in span(l)} = projection onto the x-part of ker([m | -l]).
  if (l.cols() == 0) return kernel_lattice(m);
  IntMatrix big = m.hstack(-l);
  IntMatrix k = kernel_lattice(big);
  IntMatrix proj = k.submatrix(0, 0, m.cols(), k.cols());
  return hermite_cols(proj);
}

}  // namespace hzt
