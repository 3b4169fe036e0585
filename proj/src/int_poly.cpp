#include "pftzeta/int_poly.hpp"

#include <algorithm>
#include <limits>

namespace pftzeta {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(out));
}

bool IntPoly::operator<(const IntPoly& o) const {
  return std::lexicographical_compare(coeffs_.begin(), coeffs_.end(), o.coeffs_.begin(),
                                      o.coeffs_.end());
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly substitute_power(const IntPoly& p, std::size_t k) {
  if (k == 0) throw InvalidInput("substitution power must be positive");
  if (p.is_zero()) return p;
  std::vector<BigInt> out(static_cast<std::size_t>(p.degree()) * k + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i * k] = p.coeffs()[i];
  return IntPoly(std::move(out));
}

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

nlohmann::json to_json(const IntPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(bigint_to_json(c));
  return arr;
}

}  // namespace pftzeta
