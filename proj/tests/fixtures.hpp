#pragma once

#include <random>
#include <string>
#include <vector>

#include "pftzeta/core_model.hpp"

namespace pftzeta::testing {

inline Alphabet binary() { return Alphabet({"0", "1"}); }

inline StandardPft standard(const Alphabet& a, std::size_t period, std::size_t len,
                            const std::vector<std::string>& words) {
  std::set<Word> f;
  for (const auto& w : words) f.insert(a.parse(w));
  return StandardPft(a, period, len, std::move(f));
}

inline StandardPft full_shift(std::size_t period, const Alphabet& a = binary()) {
  return standard(a, period, 1, {});
}
inline StandardPft golden_mean() { return standard(binary(), 1, 2, {"11"}); }
inline StandardPft forbid11(std::size_t period) { return standard(binary(), period, 2, {"11"}); }
inline StandardPft t4_two_words() { return standard(binary(), 4, 2, {"00", "11"}); }
inline StandardPft empty_shift() { return standard(binary(), 1, 1, {"0", "1"}); }

struct Named {
  std::string name;
  StandardPft pft;
};

/// Fixtures (a)-(f) of the acceptance list.
inline std::vector<Named> acceptance_fixtures() {
  return {{"full shift T=1", full_shift(1)},
          {"full shift T=2", full_shift(2)},
          {"full shift T=3", full_shift(3)},
          {"golden mean", golden_mean()},
          {"T=2 forbid 11", forbid11(2)},
          {"T=3 forbid 11", forbid11(3)},
          {"T=4 forbid 00,11", t4_two_words()},
          {"empty shift", empty_shift()}};
}

/// Small random user-level specs: binary or ternary alphabet, period 1..4,
/// forbidden words of length 1..3 spread over the phases.
inline PftSpec random_spec(std::mt19937& rng) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  const std::size_t T = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < k; ++i) tokens.push_back(std::string(1, static_cast<char>('a' + i)));
  Alphabet a(tokens);
  std::vector<std::vector<Word>> lists(T);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    Word w;
    for (std::size_t i = 0; i < len; ++i)
      w.letters.push_back(std::uniform_int_distribution<Symbol>(0, static_cast<Symbol>(k - 1))(rng));
    lists[std::uniform_int_distribution<std::size_t>(0, T - 1)(rng)].push_back(w);
  }
  return PftSpec(a, T, std::move(lists));
}

/// Random standard-form PFT over {0,1}, ℓ in {1,2,3}, period 1..4.
inline StandardPft random_standard(std::mt19937& rng) {
  const Alphabet a = binary();
  const std::size_t T = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::set<Word> f;
  for (const auto& w : a.all_words(len))
    if (std::bernoulli_distribution(0.3)(rng)) f.insert(w);
  return StandardPft(a, T, len, std::move(f));
}

}  // namespace pftzeta::testing
