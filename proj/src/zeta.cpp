#include "pftzeta/zeta.hpp"

#include <numeric>

#include "pftzeta/exact_linalg.hpp"
#include "pftzeta/graph.hpp"

namespace pftzeta {

ZetaResult zeta_pft(const StandardPft& x, TieBreak rule) {
  ZetaResult out;
  for (const auto& z : enumerate_omega(x.period, rule)) {
    NecklaceFactor nf{z, det_identity_minus_tA(adjacency(build_gz(x, z))), z.W % 2 == 0 ? 1 : -1,
                      std::nullopt};
    out.factors.add(nf.det_a, nf.exponent);
    if (z.N % 2 == 0 && z.W % 2 == 1) {
      const IntMatrix b = condensed_matrix(x, z);
      nf.correction = substitute_power(det_identity_minus_tA((b * b).eval()), 2 * z.L);
      out.factors.add(*nf.correction, 1);
    }
    out.per_necklace.push_back(std::move(nf));
  }
  return out;
}

RationalFn zeta_sft(const StandardPft& x) {
  if (x.period != 1) throw InvalidInput("zeta_sft needs period 1, got " + std::to_string(x.period));
  RationalFn out;
  out.add(det_identity_minus_tA(adjacency(build_ms_presentation(x))), -1);
  return out;
}

RationalFn odd_T_zeta(const StandardPft& x) {
  if (x.period % 2 == 0)
    throw InvalidInput("the A_z-only product needs an odd period, got " + std::to_string(x.period));
  RationalFn out;
  for (const auto& z : enumerate_omega(x.period))
    out.add(det_identity_minus_tA(adjacency(build_gz(x, z))), z.W % 2 == 0 ? 1 : -1);
  return out;
}

TraceCounter::TraceCounter(StandardPft x) : x_(std::move(x)) {}

const BigInt& TraceCounter::trace_of(const NecklaceRep& z, std::size_t n) {
  auto [it, inserted] = cache_.try_emplace(z.primitive_root);
  Powers& p = it->second;
  if (inserted) {
    p.a = adjacency(build_gz(x_, z));
    p.current = IntMatrix::Identity(p.a.rows(), p.a.cols());
  }
  while (p.traces.size() < n) {
    p.current = (p.current * p.a).eval();
    p.traces.push_back(trace(p.current));
  }
  return p.traces[n - 1];
}

BigInt TraceCounter::count(std::size_t n) {
  if (n == 0) throw InvalidInput("period n must be positive");
  const std::size_t d = std::gcd(n, x_.period);
  auto [it, inserted] = omega_.try_emplace(d);
  if (inserted) it->second = enumerate_omega(d);
  BigInt sum = 0;
  for (const auto& z : it->second) {
    // |J(z,q)| = d W_z / L_z
    const std::size_t ones = d / z.L * z.W;
    const BigInt& tr = trace_of(z, n);
    if (ones % 2 == 1)
      sum += tr;
    else
      sum -= tr;
  }
  if (sum < 0) throw InconsistencyError("trace sum for n=" + std::to_string(n) + " is negative");
  return sum;
}

std::vector<BigInt> TraceCounter::counts(std::size_t max_n) {
  std::vector<BigInt> out;
  for (std::size_t n = 1; n <= max_n; ++n) out.push_back(count(n));
  return out;
}

BigInt count_periodic_via_traces(const StandardPft& x, std::size_t n) {
  return TraceCounter(x).count(n);
}

nlohmann::json to_json(const ZetaResult& r) {
  nlohmann::json out = to_json(r.factors);
  auto rows = nlohmann::json::array();
  for (const auto& nf : r.per_necklace) {
    rows.push_back({{"z", nf.z.bits},
                    {"L", nf.z.L},
                    {"W", nf.z.W},
                    {"N", nf.z.N},
                    {"det_A", to_json(nf.det_a)},
                    {"exp", nf.exponent},
                    {"correction", nf.correction ? to_json(*nf.correction) : nlohmann::json(nullptr)}});
  }
  out["per_necklace"] = std::move(rows);
  out["product"] = r.factors.to_string();
  return out;
}

}  // namespace pftzeta
