#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace pftzeta {

// Expression templates are disabled on both number types; Eigen's own
// expression machinery does not compose with Boost's.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<BigInt>;

/// Malformed or out-of-contract input (bad JSON, unknown token, d not dividing T).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An oracle enumeration would exceed its size guard.
class GuardViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not, or a count came out negative or
/// fractional. Always a bug, never rounded away.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pftzeta
