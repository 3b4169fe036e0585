#include "pftzeta/series.hpp"

#include <algorithm>

namespace pftzeta {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, BigRational(0)) {}

PowerSeries::PowerSeries(const IntPoly& p, std::size_t order) : PowerSeries(order) {
  for (std::size_t i = 0; i <= order && i < p.coeffs().size(); ++i) coeffs_[i] = BigRational(p.coeffs()[i]);
}

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  const std::size_t n = std::min(order(), o.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return out;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  const std::size_t n = std::min(order(), o.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return out;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw InvalidInput("series with zero constant term has no inverse");
  PowerSeries out(order());
  out.coeffs_[0] = 1 / coeffs_[0];
  for (std::size_t n = 1; n <= order(); ++n) {
    BigRational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
    out.coeffs_[n] = -acc / coeffs_[0];
  }
  return out;
}

PowerSeries PowerSeries::log() const {
  if (coeffs_[0] != 1) throw InvalidInput("formal log needs constant term 1");
  // log f = ∫ f'/f
  PowerSeries deriv(order());
  for (std::size_t i = 1; i <= order(); ++i) deriv.coeffs_[i - 1] = coeffs_[i] * BigRational(i);
  const PowerSeries q = deriv * reciprocal();
  PowerSeries out(order());
  for (std::size_t i = 1; i <= order(); ++i) out.coeffs_[i] = q.coeffs_[i - 1] / BigRational(i);
  return out;
}

PowerSeries PowerSeries::exp() const {
  if (coeffs_[0] != 0) throw InvalidInput("formal exp needs constant term 0");
  // g = exp f satisfies n g_n = Σ_{k=1}^{n} k f_k g_{n-k}
  PowerSeries out(order());
  out.coeffs_[0] = 1;
  for (std::size_t n = 1; n <= order(); ++n) {
    BigRational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += BigRational(k) * coeffs_[k] * out.coeffs_[n - k];
    out.coeffs_[n] = acc / BigRational(n);
  }
  return out;
}

PowerSeries PowerSeries::pow(int exponent) const {
  PowerSeries base = exponent < 0 ? reciprocal() : *this;
  PowerSeries out = one(order());
  for (int i = 0; i < std::abs(exponent); ++i) out = out * base;
  return out;
}

std::string PowerSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += coeffs_[i].str();
  }
  return "[" + out + "]";
}

RationalFn::RationalFn(std::vector<Factor> factors) {
  for (auto& f : factors) add(std::move(f.poly), f.exponent);
}

void RationalFn::add(IntPoly poly, int exponent) {
  if (exponent == 0) throw InvalidInput("factor exponents must be non-zero");
  if (poly.coeff(0) != 1) throw InvalidInput("factors must have constant term 1: " + poly.to_string());
  factors_.push_back({std::move(poly), exponent});
}

std::vector<RationalFn::Factor> RationalFn::sorted_factors() const {
  auto out = factors_;
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.poly < b.poly;
  });
  return out;
}

std::string RationalFn::to_string() const {
  std::string out;
  for (const auto& f : factors_) {
    if (f.poly == IntPoly::one()) continue;
    if (!out.empty()) out += " * ";
    out += "(" + f.poly.to_string() + ")";
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out.empty() ? "1" : out;
}

RationalFn reciprocal(const RationalFn& f) {
  RationalFn out;
  for (const auto& factor : f.factors()) out.add(factor.poly, -factor.exponent);
  return out;
}

PowerSeries series_expand(const RationalFn& f, std::size_t order) {
  PowerSeries out = PowerSeries::one(order);
  for (const auto& factor : f.factors()) out = out * PowerSeries(factor.poly, order).pow(factor.exponent);
  return out;
}

std::vector<BigInt> periodic_counts_from_zeta(const RationalFn& f, std::size_t max_n) {
  const PowerSeries lg = series_expand(f, max_n).log();
  std::vector<BigInt> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const BigRational v = lg[n] * BigRational(n);
    if (denominator(v) != 1 || v < 0)
      throw InconsistencyError("coefficient " + std::to_string(n) + " of n·log ζ is " + v.str() +
                               ", not a non-negative integer");
    out.push_back(numerator(v));
  }
  return out;
}

nlohmann::json to_json(const RationalFn& f) {
  auto arr = nlohmann::json::array();
  for (const auto& factor : f.factors())
    arr.push_back({{"poly", to_json(factor.poly)}, {"exp", factor.exponent}});
  return {{"factors", std::move(arr)}};
}

}  // namespace pftzeta
