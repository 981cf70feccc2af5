#pragma once

#include <optional>
#include <vector>

#include "hzt/fg_abelian.hpp"
#include "hzt/int_matrix.hpp"

namespace hzt {

/// U * m * V = diag(d) with d_i | d_{i+1}, d_i >= 0 and |det U| = |det V| = 1.
struct SnfResult {
  std::vector<Int> d;
  IntMatrix u;
  IntMatrix v;

  IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Cokernel of m : Z^cols -> Z^rows, in canonical form.
FgAbelian cokernel(const IntMatrix& m);

/// Basis of {x : m x = 0} as columns, in column Hermite form.
IntMatrix kernel_lattice(const IntMatrix& m);

/// Canonical row Hermite form of the row lattice of m (zero rows dropped,
/// positive pivots, entries above each pivot reduced).
IntMatrix hermite_rows(const IntMatrix& m);

/// Canonical basis (as columns) of the column lattice of m.
IntMatrix hermite_cols(const IntMatrix& m);

/// One integer solution x of m x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m,
                                              const std::vector<Int>& b);

/// Does the column lattice of m contain v?
bool lattice_contains(const IntMatrix& m, const std::vector<Int>& v);

/// Equality of column lattices.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

/// Column lattice sum (basis of span(a) + span(b)).
IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b);

/// Basis of {x : m x in column span of l}; the preimage of a lattice.
IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& l);

}  // namespace hzt
