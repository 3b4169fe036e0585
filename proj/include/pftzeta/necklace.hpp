#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pftzeta {

/// Shortest u with w = u^k. `w` is any non-empty string.
std::string primitive_root(std::string_view w);

/// A representative z of a conjugacy class of nonzero binary words of length
/// T, together with its primitive-root statistics.
struct NecklaceRep {
  std::string bits;            // z, over {'0','1'}
  std::string primitive_root;  // z♯
  std::size_t L = 0;           // |z♯|
  std::size_t W = 0;           // ones in z♯
  std::size_t N = 0;           // |z| / |z♯|

  /// `bits` must be a non-empty binary word with at least one 1.
  explicit NecklaceRep(std::string bits);

  std::size_t period() const { return bits.size(); }
  bool restricted(std::size_t phase) const { return primitive_root[phase] == '1'; }
  bool operator==(const NecklaceRep& o) const { return bits == o.bits; }
};

/// Which rotation (among those starting with 1) represents each class.
enum class TieBreak { lex_smallest, lex_largest };

/// One representative per conjugacy class of {0,1}^T \ {0^T}, sorted by bits.
std::vector<NecklaceRep> enumerate_omega(std::size_t T, TieBreak rule = TieBreak::lex_smallest);

/// {(q - i) mod T : z_i = 1} with T = |z|; q must lie in [0, L).
std::set<std::size_t> j_set(const NecklaceRep& z, std::size_t q);

int mobius(std::size_t n);

/// Closed form: (-1)^(W-1) for s = 1, -1 - (-1)^(W-1) for s = 2, else 0.
/// Throws InvalidInput unless s divides N.
int beta(const NecklaceRep& z, std::size_t s);

/// Σ_{r|s} μ(r) (-1)^((s/r)W - 1), the defining sum `beta` simplifies.
int beta_mobius_sum(const NecklaceRep& z, std::size_t s);

std::vector<std::size_t> divisors(std::size_t n);

}  // namespace pftzeta
