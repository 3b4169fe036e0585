#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pftzeta/exact_linalg.hpp"
#include "pftzeta/series.hpp"

using namespace pftzeta;

namespace {

using SmallPoly = std::vector<long long>;  // test-only, low degree first

SmallPoly mul(const SmallPoly& a, const SmallPoly& b) {
  SmallPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Leibniz expansion of det(I - t^k A): independent of Faddeev–LeVerrier.
IntPoly leibniz_det(const Matrix<long long>& a, std::size_t k = 1) {
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SmallPoly total(n * k + 1, 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    SmallPoly term{inversions % 2 == 0 ? 1LL : -1LL};
    for (std::size_t i = 0; i < n; ++i) {
      SmallPoly entry(k + 1, 0);
      entry[0] = i == perm[i] ? 1 : 0;
      entry[k] = -a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i]));
      term = mul(term, entry);
    }
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += term[i];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<BigInt> c;
  for (long long v : total) c.emplace_back(v);
  return IntPoly(std::move(c));
}

std::vector<Matrix<long long>> fixture_matrices() {
  std::vector<Matrix<long long>> out;
  Matrix<long long> fib(2, 2);
  fib << 1, 1, 1, 0;
  out.push_back(fib);
  Matrix<long long> two(1, 1);
  two << 2;
  out.push_back(two);
  std::mt19937 rng(7);
  for (int n = 1; n <= 6; ++n)
    for (int rep = 0; rep < 3; ++rep) {
      Matrix<long long> m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = std::uniform_int_distribution<int>(0, 3)(rng);
      out.push_back(m);
    }
  return out;
}

}  // namespace

TEST_CASE("IntPoly canonical form and printing") {
  CHECK(IntPoly({1, -1, -1, 0, 0}).coeffs().size() == 3);
  CHECK(IntPoly({0, 0}).is_zero());
  CHECK(IntPoly({0}).degree() == -1);
  CHECK(IntPoly({1, -1, -1}).to_string() == "1 - t - t^2");
  CHECK(IntPoly({1, 0, -4}).to_string() == "1 - 4t^2");
  CHECK(IntPoly({1, 2}).to_string() == "1 + 2t");
  CHECK(IntPoly({0, -1}).to_string() == "-t");
  CHECK((IntPoly({1, -1}) * IntPoly({1, 1})) == IntPoly({1, 0, -1}));
  CHECK((IntPoly({1, 2}) - IntPoly({1, 2})).is_zero());
  CHECK(to_json(IntPoly({1, -1, -1})).dump() == "[1,-1,-1]");
}

TEST_CASE("big coefficients serialize as strings") {
  const BigInt big = BigInt(1) << 80;
  CHECK(bigint_to_json(big).is_string());
  CHECK(bigint_to_json(BigInt(-5)) == -5);
}

TEST_CASE("det_identity_minus_tA examples") {
  Matrix<long long> fib(2, 2);
  fib << 1, 1, 1, 0;
  CHECK(det_identity_minus_tA(fib) == IntPoly({1, -1, -1}));
  Matrix<long long> two(1, 1);
  two << 2;
  CHECK(det_identity_minus_tA(two) == IntPoly({1, -2}));
  CHECK(det_identity_minus_tA(IntMatrix(0, 0)) == IntPoly::one());
  CHECK_THROWS_AS(det_identity_minus_tA(IntMatrix(2, 3)), InvalidInput);
}

TEST_CASE("det_identity_minus_tA agrees with Leibniz expansion") {
  for (const auto& m : fixture_matrices()) {
    CAPTURE(m);
    const IntPoly p = det_identity_minus_tA(m);
    CHECK(p == leibniz_det(m));
    CHECK(p.coeff(0) == 1);
    CHECK(p.degree() <= m.rows());
  }
}

TEST_CASE("Newton identity: -n [t^n] log det(I - tA) = tr(A^n)") {
  for (const auto& m : fixture_matrices()) {
    const IntMatrix a = m.cast<BigInt>();
    const PowerSeries lg = PowerSeries(det_identity_minus_tA(a), 8).log();
    for (std::size_t n = 1; n <= 8; ++n)
      CHECK(-lg[n] * BigRational(n) == BigRational(trace(matrix_power(a, n))));
  }
}

TEST_CASE("substitute_power") {
  CHECK(substitute_power(IntPoly({1, -4}), 2) == IntPoly({1, 0, -4}));
  CHECK(substitute_power(IntPoly::one(), 5) == IntPoly::one());
  CHECK(substitute_power(IntPoly({1, -1, -1}), 3) == IntPoly({1, 0, 0, -1, 0, 0, -1}));
  for (const auto& m : fixture_matrices())
    if (m.rows() <= 4)
      for (std::size_t k = 1; k <= 3; ++k) CHECK(substitute_power(det_identity_minus_tA(m), k) == leibniz_det(m, k));
}

TEST_CASE("matrix_power and trace_powers") {
  Matrix<long long> fib(2, 2);
  fib << 1, 1, 1, 0;
  const IntMatrix a = fib.cast<BigInt>();
  CHECK(matrix_power(a, 0) == IntMatrix::Identity(2, 2));
  CHECK(matrix_power(a, 10)(0, 0) == 89);
  const auto tr = trace_powers(a, 5);
  CHECK(tr == std::vector<BigInt>{1, 3, 4, 7, 11});
}

TEST_CASE("series_expand examples") {
  auto coeffs = [](const PowerSeries& s) {
    std::vector<BigRational> out(s.coeffs().begin(), s.coeffs().end());
    return out;
  };
  CHECK(coeffs(series_expand(RationalFn({{IntPoly({1, -2}), -1}}), 3)) == std::vector<BigRational>{1, 2, 4, 8});
  CHECK(coeffs(series_expand(RationalFn({{IntPoly({1, -1, -1}), -1}}), 4)) ==
        std::vector<BigRational>{1, 1, 2, 3, 5});
  CHECK(coeffs(series_expand(RationalFn({{IntPoly({1, -2}), 1}}), 2)) == std::vector<BigRational>{1, -2, 0});
  CHECK(coeffs(series_expand(RationalFn(), 2)) == std::vector<BigRational>{1, 0, 0});
}

TEST_CASE("series times series of reciprocal is 1") {
  const RationalFn f({{IntPoly({1, -3, 1}), -2}, {IntPoly({1, 0, -4}), 1}, {IntPoly({1, 1, 1, 1}), 3}});
  CHECK(series_expand(f, 10) * series_expand(reciprocal(f), 10) == PowerSeries::one(10));
}

TEST_CASE("exp inverts log") {
  const PowerSeries s = series_expand(RationalFn({{IntPoly({1, -1, -1}), -1}, {IntPoly({1, 2}), 2}}), 9);
  CHECK(s.log().exp() == s);
}

TEST_CASE("periodic_counts_from_zeta") {
  CHECK(periodic_counts_from_zeta(RationalFn({{IntPoly({1, -2}), -1}}), 3) == std::vector<BigInt>{2, 4, 8});
  CHECK(periodic_counts_from_zeta(RationalFn({{IntPoly({1, -1, -1}), -1}}), 5) ==
        std::vector<BigInt>{1, 3, 4, 7, 11});
  CHECK(periodic_counts_from_zeta(RationalFn(), 3) == std::vector<BigInt>{0, 0, 0});
  // (1 - 2t)^{+1} would mean negative counts
  CHECK_THROWS_AS(periodic_counts_from_zeta(RationalFn({{IntPoly({1, -2}), 1}}), 3), InconsistencyError);
}

TEST_CASE("RationalFn invariants and printing") {
  RationalFn f;
  CHECK_THROWS_AS(f.add(IntPoly({2, 1}), -1), InvalidInput);
  CHECK_THROWS_AS(f.add(IntPoly({1, 1}), 0), InvalidInput);
  f.add(IntPoly({1, -1, -1}), -1);
  CHECK(f.to_string() == "(1 - t - t^2)^-1");
  f.add(IntPoly::one(), -1);
  CHECK(f.to_string() == "(1 - t - t^2)^-1");
  f.add(IntPoly({1, 0, -4}), 1);
  CHECK(f.to_string() == "(1 - t - t^2)^-1 * (1 - 4t^2)");
  CHECK(RationalFn().to_string() == "1");
  CHECK(to_json(RationalFn({{IntPoly({1, -2}), -1}})).dump() == R"({"factors":[{"exp":-1,"poly":[1,-2]}]})");
}
