#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pftzeta/int_poly.hpp"
#include "pftzeta/types.hpp"

namespace pftzeta {

template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Scalar sum(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

/// a^k by repeated squaring; a^0 is the identity.
template <typename Derived>
Matrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& a, std::size_t k) {
  using M = Matrix<typename Derived::Scalar>;
  M result = M::Identity(a.rows(), a.cols());
  M base = a;
  while (k > 0) {
    if (k & 1U) result = (result * base).eval();
    k >>= 1U;
    if (k > 0) base = (base * base).eval();
  }
  return result;
}

/// tr(a), tr(a^2), ..., tr(a^max_n), computed by successive multiplication.
template <typename Derived>
std::vector<typename Derived::Scalar> trace_powers(const Eigen::MatrixBase<Derived>& a,
                                                   std::size_t max_n) {
  using M = Matrix<typename Derived::Scalar>;
  std::vector<typename Derived::Scalar> out;
  out.reserve(max_n);
  M p = a;
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (n > 1) p = (p * a).eval();
    out.push_back(trace(p));
  }
  return out;
}

/// det(I - t·a) via Faddeev–LeVerrier over the integers. With characteristic
/// polynomial Σ c_i λ^i, the coefficient of t^j in det(I - t·a) is c_{n-j}.
/// Every division by k must be exact; a remainder throws InconsistencyError.
template <typename Derived>
IntPoly det_identity_minus_tA(const Eigen::MatrixBase<Derived>& a_in) {
  if (a_in.rows() != a_in.cols()) throw InvalidInput("det(I - tA) needs a square matrix");
  const IntMatrix a = a_in.template cast<BigInt>();
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m = IntMatrix::Zero(a.rows(), a.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    m = (a * m).eval();
    m.diagonal().array() += c[n - k + 1];
    const BigInt tr = trace((a * m).eval());
    if (tr % k != 0)
      throw InconsistencyError("Faddeev-LeVerrier step " + std::to_string(k) + " is not exact");
    c[n - k] = -tr / k;
  }
  std::vector<BigInt> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) out[j] = c[n - j];
  return IntPoly(std::move(out));
}

}  // namespace pftzeta
