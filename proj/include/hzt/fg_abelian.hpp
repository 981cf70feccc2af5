#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hzt/numeric.hpp"

namespace hzt {

/// Finitely generated abelian group in canonical form: free rank plus
/// invariant factors d_1 | d_2 | ... with every d_i >= 2.
struct FgAbelian {
  long free_rank = 0;
  std::vector<Int> torsion;

  static FgAbelian trivial() { return {}; }
  static FgAbelian free_of_rank(long r) { return {r, {}}; }
  static FgAbelian cyclic(const Int& n);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  std::optional<Int> order() const;

  FgAbelian direct_sum(const FgAbelian& other) const;

  bool operator==(const FgAbelian& other) const = default;

  std::string to_string() const;
};

}  // namespace hzt
