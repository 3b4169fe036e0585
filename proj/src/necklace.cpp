#include "pftzeta/necklace.hpp"

#include <algorithm>
#include <map>

#include "pftzeta/types.hpp"

namespace pftzeta {
namespace {

int sign_pow(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::string primitive_root(std::string_view w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool periodic = true;
    for (std::size_t i = len; i < n && periodic; ++i) periodic = w[i] == w[i - len];
    if (periodic) return std::string(w.substr(0, len));
  }
  return std::string(w);
}

NecklaceRep::NecklaceRep(std::string b) : bits(std::move(b)) {
  if (bits.empty() || bits.find_first_not_of("01") != std::string::npos ||
      bits.find('1') == std::string::npos)
    throw InvalidInput("necklace representative must be a nonzero binary word: '" + bits + "'");
  primitive_root = pftzeta::primitive_root(bits);
  L = primitive_root.size();
  W = static_cast<std::size_t>(std::count(primitive_root.begin(), primitive_root.end(), '1'));
  N = bits.size() / L;
}

std::vector<NecklaceRep> enumerate_omega(std::size_t T, TieBreak rule) {
  if (T == 0) throw InvalidInput("period must be positive");
  if (T > 24) throw GuardViolation("necklace enumeration limited to T <= 24");
  // class key = smallest rotation; value = chosen representative
  std::map<std::string, std::string> classes;
  for (unsigned long long v = 1; v < (1ULL << T); ++v) {
    std::string w(T, '0');
    for (std::size_t i = 0; i < T; ++i)
      if (v >> (T - 1 - i) & 1ULL) w[i] = '1';
    std::string key = w;
    std::string rep;
    for (std::size_t r = 0; r < T; ++r) {
      std::string rot = w.substr(r) + w.substr(0, r);
      key = std::min(key, rot);
      if (rot[0] != '1') continue;
      if (rep.empty() || (rule == TieBreak::lex_smallest ? rot < rep : rot > rep)) rep = rot;
    }
    classes.emplace(std::move(key), std::move(rep));
  }
  std::vector<std::string> reps;
  for (auto& [_, rep] : classes) reps.push_back(std::move(rep));
  std::sort(reps.begin(), reps.end());
  std::vector<NecklaceRep> out;
  for (auto& r : reps) out.emplace_back(std::move(r));
  return out;
}

std::set<std::size_t> j_set(const NecklaceRep& z, std::size_t q) {
  if (q >= z.L) throw InvalidInput("q must be smaller than L_z");
  const std::size_t T = z.period();
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < T; ++i)
    if (z.bits[i] == '1') out.insert((q + T - i) % T);
  return out;
}

int mobius(std::size_t n) {
  if (n == 0) throw InvalidInput("mobius is defined for n >= 1");
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

int beta(const NecklaceRep& z, std::size_t s) {
  if (s == 0 || z.N % s != 0) throw InvalidInput("s must divide N_z");
  const int base = sign_pow(z.W - 1);
  if (s == 1) return base;
  if (s == 2) return -1 - base;
  return 0;
}

int beta_mobius_sum(const NecklaceRep& z, std::size_t s) {
  if (s == 0 || z.N % s != 0) throw InvalidInput("s must divide N_z");
  int sum = 0;
  for (std::size_t r : divisors(s)) sum += mobius(r) * sign_pow((s / r) * z.W - 1);
  return sum;
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace pftzeta
