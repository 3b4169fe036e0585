#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pftzeta/types.hpp"

namespace pftzeta {

/// Polynomial in t with arbitrary-precision integer coefficients, low degree
/// first. Trailing zeros are trimmed, so the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly one() { return IntPoly({1}); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const = default;
  /// Lexicographic on coefficient lists; only used to sort factor multisets.
  bool operator<(const IntPoly& o) const;

  /// "1 - t - t^2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// p(t^k).
IntPoly substitute_power(const IntPoly& p, std::size_t k);

/// Integers that fit in 64 bits serialize as JSON numbers, larger ones as
/// decimal strings.
nlohmann::json bigint_to_json(const BigInt& v);
nlohmann::json to_json(const IntPoly& p);

}  // namespace pftzeta
