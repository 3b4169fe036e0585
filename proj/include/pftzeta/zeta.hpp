#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pftzeta/core_model.hpp"
#include "pftzeta/int_poly.hpp"
#include "pftzeta/necklace.hpp"
#include "pftzeta/series.hpp"
#include "pftzeta/types.hpp"

namespace pftzeta {

struct NecklaceFactor {
  NecklaceRep z;
  IntPoly det_a;                      // det(I - t A_z)
  int exponent;                       // (-1)^{W_z}
  std::optional<IntPoly> correction;  // det(I - t^{2L_z} B_z^2), iff N_z even and W_z odd
};

struct ZetaResult {
  RationalFn factors;
  std::vector<NecklaceFactor> per_necklace;
};

/// ζ = Π_{z∈Ω_T} det(I - tA_z)^{(-1)^{W_z}} · Π_{N_z even, W_z odd} det(I - t^{2L_z} B_z^2).
/// Factors follow Ω_T order; a correction factor directly follows its A_z factor.
ZetaResult zeta_pft(const StandardPft& x, TieBreak rule = TieBreak::lex_smallest);

/// 1 / det(I - tA) of the MS presentation; period must be 1.
RationalFn zeta_sft(const StandardPft& x);

/// The A_z-only product, valid when the period is odd (throws otherwise).
RationalFn odd_T_zeta(const StandardPft& x);

/// Periodic-point counts through signed trace sums over Ω_{gcd(n,T)}.
/// Graphs are cached by primitive root and traces by power, so asking for
/// many n is cheap. Not safe for concurrent use of one instance.
class TraceCounter {
 public:
  explicit TraceCounter(StandardPft x);

  BigInt count(std::size_t n);
  std::vector<BigInt> counts(std::size_t max_n);

  /// tr(A_z^n) for G_z with the given primitive root.
  const BigInt& trace_of(const NecklaceRep& z, std::size_t n);

 private:
  struct Powers {
    IntMatrix a;
    IntMatrix current;  // a^{traces.size()}
    std::vector<BigInt> traces;
  };

  StandardPft x_;
  std::map<std::string, Powers> cache_;
  std::map<std::size_t, std::vector<NecklaceRep>> omega_;
};

BigInt count_periodic_via_traces(const StandardPft& x, std::size_t n);

nlohmann::json to_json(const ZetaResult& r);

}  // namespace pftzeta
