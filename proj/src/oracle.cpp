#include "pftzeta/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "pftzeta/series.hpp"
#include "pftzeta/zeta.hpp"

namespace pftzeta {

void check_enumeration_guard(std::size_t alphabet_size, std::size_t n) {
  unsigned long long total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= alphabet_size;
    if (total > kEnumerationGuard)
      throw GuardViolation("|Σ|^n exceeds the enumeration guard of 10^7 (|Σ|=" +
                           std::to_string(alphabet_size) + ", n=" + std::to_string(n) + ")");
  }
}

namespace {

// Letter at position i (any integer) of (w)^∞.
Symbol at(const Word& w, long long i) {
  const auto n = static_cast<long long>(w.size());
  return w[static_cast<std::size_t>(((i % n) + n) % n)];
}

bool occurs_at(const Word& w, long long pos, const Word& f) {
  for (std::size_t k = 0; k < f.size(); ++k)
    if (at(w, pos + static_cast<long long>(k)) != f[k]) return false;
  return true;
}

}  // namespace

bool is_member_periodic(const StandardPft& x, const Word& w) {
  if (w.empty()) throw InvalidInput("periodic word must be non-empty");
  const std::size_t T = x.period;
  const std::size_t window = std::lcm(w.size(), T);
  Word sub{std::vector<Symbol>(x.word_length)};
  for (std::size_t r = 0; r < T; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < window && ok; i += T) {
      for (std::size_t k = 0; k < x.word_length; ++k)
        sub.letters[k] = at(w, static_cast<long long>(i + r + k));
      ok = !x.is_forbidden(sub);
    }
    if (ok) return true;
  }
  return false;
}

bool is_member_periodic(const PftSpec& spec, const Word& w) {
  if (w.empty()) throw InvalidInput("periodic word must be non-empty");
  const std::size_t T = spec.period;
  const std::size_t window = std::lcm(w.size(), T);
  for (std::size_t r = 0; r < T; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < window && ok; ++i)
      for (const auto& f : spec.forbidden[i % T])
        if (occurs_at(w, static_cast<long long>(i + r), f)) {
          ok = false;
          break;
        }
    if (ok) return true;
  }
  return false;
}

BigInt count_periodic_bruteforce(const StandardPft& x, std::size_t n) {
  if (n == 0) throw InvalidInput("period n must be positive");
  check_enumeration_guard(x.alphabet.size(), n);
  unsigned long long count = 0;
  for (const auto& w : x.alphabet.all_words(n))
    if (is_member_periodic(x, w)) ++count;
  return BigInt(count);
}

std::vector<std::set<Word>> cycle_label_sets(const Wbg& g, std::size_t n) {
  std::vector<std::set<Word>> out(g.num_states());
  Word label{std::vector<Symbol>(n)};
  // explicit stack of (state, depth, next out-edge slot)
  struct Frame {
    std::size_t state;
    std::size_t next;
  };
  for (std::size_t start = 0; start < g.num_states(); ++start) {
    std::vector<Frame> stack{{start, 0}};
    while (!stack.empty()) {
      Frame& top = stack.back();
      const std::size_t depth = stack.size() - 1;
      if (depth == n) {
        if (top.state == start) out[start].insert(label);
        stack.pop_back();
        continue;
      }
      const auto& outs = g.out_edges(top.state);
      if (top.next == outs.size()) {
        stack.pop_back();
        continue;
      }
      const auto& e = g.edges()[outs[top.next++]];
      label.letters[depth] = e.label;
      stack.push_back({e.target, 0});
    }
  }
  return out;
}

BigInt count_via_cycles(const StandardPft& x, std::size_t n) {
  if (n == 0) throw InvalidInput("period n must be positive");
  check_enumeration_guard(x.alphabet.size(), n);
  const std::size_t d = std::gcd(n, x.period);
  const Wbg g = build_ms_presentation(derived_pft(x, d));
  const auto sets = cycle_label_sets(g, n);

  BigInt total = 0;
  for (const auto& w : x.alphabet.all_words(x.word_length)) {
    std::vector<const std::set<Word>*> copies(d, nullptr);
    for (std::size_t i = 0; i < d; ++i)
      if (auto s = g.find_state(w, i)) copies[i] = &sets[*s];

    for (unsigned long long mask = 1; mask < (1ULL << d); ++mask) {
      std::vector<const std::set<Word>*> members;
      for (std::size_t i = 0; i < d; ++i)
        if (mask >> i & 1ULL) members.push_back(copies[i]);
      long long inter = 0;
      if (std::find(members.begin(), members.end(), nullptr) == members.end()) {
        for (const auto& word : *members.front()) {
          bool everywhere = true;
          for (std::size_t k = 1; k < members.size() && everywhere; ++k)
            everywhere = members[k]->contains(word);
          if (everywhere) ++inter;
        }
      }
      if (members.size() % 2 == 1)
        total += inter;
      else
        total -= inter;
    }
  }
  return total;
}

std::vector<CountReport> verify_counts(const StandardPft& x, std::size_t max_n) {
  check_enumeration_guard(x.alphabet.size(), max_n);
  const auto zeta_counts = periodic_counts_from_zeta(zeta_pft(x).factors, max_n);
  TraceCounter traces(x);
  std::vector<CountReport> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    CountReport r{n, count_periodic_bruteforce(x, n), count_via_cycles(x, n), traces.count(n),
                  zeta_counts[n - 1], false};
    r.agree = r.brute_force == r.cycle_ie && r.cycle_ie == r.traces && r.traces == r.zeta_series;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pftzeta
