#include "hzt/fg_abelian.hpp"

#include <algorithm>
#include <sstream>

namespace hzt {

FgAbelian FgAbelian::cyclic(const Int& n) {
  Int a = abs(n);
  if (a == 0) return free_of_rank(1);
  if (a == 1) return trivial();
  return {0, {a}};
}

std::optional<Int> FgAbelian::order() const {
  if (free_rank > 0) return std::nullopt;
  Int o(1);
  for (const auto& d : torsion) o *= d;
  return o;
}

FgAbelian FgAbelian::direct_sum(const FgAbelian& other) const {
  // Merge invariant factor lists back into a divisibility chain via the
  // primary decomposition of each factor.
  FgAbelian s;
  s.free_rank = free_rank + other.free_rank;
  std::vector<Int> all = torsion;
  all.insert(all.end(), other.torsion.begin(), other.torsion.end());
  if (all.empty()) return s;

  // Collect prime powers.
  std::vector<std::pair<Int, std::vector<unsigned long>>> primary;
  for (const auto& d0 : all) {
    Int d = d0;
    for (Int p(2); d > 1;) {
      if (d % p == 0) {
        unsigned long e = 0;
        while (d % p == 0) {
          d /= p;
          ++e;
        }
        auto it = std::find_if(primary.begin(), primary.end(),
                               [&](const auto& pr) { return pr.first == p; });
        if (it == primary.end())
          primary.push_back({p, {e}});
        else
          it->second.push_back(e);
      }
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      // Trial division is fine: torsion orders here stay modest.
      if (p * p > d && d > 1) {
        auto it = std::find_if(primary.begin(), primary.end(),
                               [&](const auto& pr) { return pr.first == d; });
        if (it == primary.end())
          primary.push_back({d, {1}});
        else
          it->second.push_back(1);
        d = 1;
      }
    }
  }
  std::size_t chain_len = 0;
  for (auto& pr : primary) {
    std::sort(pr.second.rbegin(), pr.second.rend());
    chain_len = std::max(chain_len, pr.second.size());
  }
  std::vector<Int> chain(chain_len, Int(1));
  for (auto& pr : primary)
    for (std::size_t i = 0; i < pr.second.size(); ++i)
      chain[i] *= int_pow(pr.first, pr.second[i]);
  std::sort(chain.begin(), chain.end());
  s.torsion = chain;
  return s;
}

std::string FgAbelian::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

}  // namespace hzt
