#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "pftzeta/core_model.hpp"
#include "pftzeta/graph.hpp"
#include "pftzeta/types.hpp"

namespace pftzeta {

/// Upper bound on |Σ|^n for any enumeration done here.
inline constexpr unsigned long long kEnumerationGuard = 10'000'000ULL;

/// Throws GuardViolation when |Σ|^n exceeds kEnumerationGuard.
void check_enumeration_guard(std::size_t alphabet_size, std::size_t n);

/// Whether (w)^∞ lies in the shift: some offset r in [0,T) keeps every
/// length-ℓ window starting at a multiple of T (in the r-shifted sequence)
/// out of forbidden0. Windows wrap around the periodic sequence.
bool is_member_periodic(const StandardPft& x, const Word& w);

/// Same test against an arbitrary (non-normalized) spec: for some r, no word
/// of forbidden[j] appears at any position i ≡ j (mod T) of σ^r((w)^∞).
bool is_member_periodic(const PftSpec& spec, const Word& w);

/// |P_n| by enumerating Σ^n.
BigInt count_periodic_bruteforce(const StandardPft& x, std::size_t n);

/// For each state, the set of label words of length-n cycles through it.
std::vector<std::set<Word>> cycle_label_sets(const Wbg& g, std::size_t n);

/// |P_n| via Σ_w |∪_i C_n(w^(i))| in the MS presentation of X_{gcd(n,T)},
/// each union evaluated by inclusion–exclusion over phase subsets.
BigInt count_via_cycles(const StandardPft& x, std::size_t n);

struct CountReport {
  std::size_t n;
  BigInt brute_force;
  BigInt cycle_ie;
  BigInt traces;
  BigInt zeta_series;
  bool agree;
};

/// Runs all four counting paths for n = 1..max_n. Mismatches are reported,
/// not thrown; exceeding the enumeration guard throws up front.
std::vector<CountReport> verify_counts(const StandardPft& x, std::size_t max_n);

}  // namespace pftzeta
