#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pftzeta/int_poly.hpp"
#include "pftzeta/types.hpp"

namespace pftzeta {

/// Truncated formal power series with exact rational coefficients
/// c_0 .. c_order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  PowerSeries(const IntPoly& p, std::size_t order);

  static PowerSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const BigRational& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigRational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries operator+(const PowerSeries& o) const;
  bool operator==(const PowerSeries& o) const = default;

  /// Multiplicative inverse; needs a non-zero constant term.
  PowerSeries reciprocal() const;
  /// Formal logarithm; needs constant term 1.
  PowerSeries log() const;
  /// Formal exponential; needs constant term 0.
  PowerSeries exp() const;
  PowerSeries pow(int exponent) const;

  std::string to_string() const;

 private:
  std::vector<BigRational> coeffs_;
};

/// Π poly_i^exp_i, kept factored. Every factor has constant term 1.
class RationalFn {
 public:
  struct Factor {
    IntPoly poly;
    int exponent;
    bool operator==(const Factor&) const = default;
  };

  RationalFn() = default;
  explicit RationalFn(std::vector<Factor> factors);

  void add(IntPoly poly, int exponent);
  const std::vector<Factor>& factors() const { return factors_; }
  bool operator==(const RationalFn& o) const = default;

  /// Factors sorted by (exponent, coefficients), for multiset comparison.
  std::vector<Factor> sorted_factors() const;

  /// "(1 - t - t^2)^-1"; factors equal to 1 are omitted and an empty product
  /// prints as "1".
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

RationalFn reciprocal(const RationalFn& f);

PowerSeries series_expand(const RationalFn& f, std::size_t order);

/// n·[t^n] log f for n = 1..max_n. Each value must be a non-negative integer;
/// anything else throws InconsistencyError.
std::vector<BigInt> periodic_counts_from_zeta(const RationalFn& f, std::size_t max_n);

/// {"factors":[{"poly":[...],"exp":-1},...]}
nlohmann::json to_json(const RationalFn& f);

}  // namespace pftzeta
