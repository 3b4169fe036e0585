#include "pftzeta/core_model.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "pftzeta/types.hpp"

namespace pftzeta {

bool Word::starts_with(const Word& prefix) const {
  return prefix.size() <= size() &&
         std::equal(prefix.letters.begin(), prefix.letters.end(), letters.begin());
}

bool Word::ends_with(const Word& suffix) const {
  return suffix.size() <= size() &&
         std::equal(suffix.letters.rbegin(), suffix.letters.rend(), letters.rbegin());
}

Word Word::suffix(std::size_t count) const {
  return Word({letters.end() - static_cast<std::ptrdiff_t>(count), letters.end()});
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw InvalidInput("alphabet must contain at least one symbol");
  std::unordered_set<std::string> seen;
  for (const auto& t : tokens_) {
    if (t.empty()) throw InvalidInput("alphabet tokens must be non-empty");
    if (std::any_of(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }))
      throw InvalidInput("alphabet token '" + t + "' contains whitespace");
    if (!seen.insert(t).second) throw InvalidInput("duplicate alphabet token '" + t + "'");
    if (t.size() != 1) single_char_ = false;
  }
}

Symbol Alphabet::index_of(std::string_view token) const {
  auto it = std::find(tokens_.begin(), tokens_.end(), token);
  if (it == tokens_.end()) throw InvalidInput("unknown token '" + std::string(token) + "'");
  return static_cast<Symbol>(it - tokens_.begin());
}

Word Alphabet::parse(std::string_view text) const {
  if (!single_char_)
    throw InvalidInput("words must be token arrays when the alphabet has multi-character tokens");
  Word w;
  for (char c : text) w.letters.push_back(index_of(std::string_view(&c, 1)));
  return w;
}

Word Alphabet::from_tokens(std::span<const std::string> tokens) const {
  Word w;
  for (const auto& t : tokens) w.letters.push_back(index_of(t));
  return w;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single_char_) out += ' ';
    out += tokens_.at(w[i]);
  }
  return out;
}

std::vector<std::string> Alphabet::to_tokens(const Word& w) const {
  std::vector<std::string> out;
  for (Symbol s : w.letters) out.push_back(tokens_.at(s));
  return out;
}

std::vector<Word> Alphabet::all_words(std::size_t length) const {
  std::vector<Word> out;
  Word w(std::vector<Symbol>(length, 0));
  const auto k = static_cast<Symbol>(size());
  while (true) {
    out.push_back(w);
    // odometer increment, last letter fastest
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++w.letters[pos] < k) break;
      w.letters[pos] = 0;
      if (pos == 0) return out;
    }
    if (length == 0) return out;
  }
}

PftSpec::PftSpec(Alphabet a, std::size_t t, std::vector<std::vector<Word>> f)
    : alphabet(std::move(a)), period(t), forbidden(std::move(f)) {
  if (period == 0) throw InvalidInput("period must be positive");
  if (forbidden.size() != period)
    throw InvalidInput("expected " + std::to_string(period) + " forbidden lists, got " +
                       std::to_string(forbidden.size()));
  for (const auto& list : forbidden)
    for (const auto& w : list) {
      if (w.empty()) throw InvalidInput("forbidden words must be non-empty");
      for (Symbol s : w.letters)
        if (s >= alphabet.size()) throw InvalidInput("symbol index out of range");
    }
}

StandardPft::StandardPft(Alphabet a, std::size_t t, std::size_t len, std::set<Word> f0)
    : alphabet(std::move(a)), period(t), word_length(len), forbidden0(std::move(f0)) {
  if (period == 0) throw InvalidInput("period must be positive");
  if (word_length == 0) throw InvalidInput("word length must be at least 1");
  for (const auto& w : forbidden0) {
    if (w.size() != word_length) throw InvalidInput("standard-form words must all have length ℓ");
    for (Symbol s : w.letters)
      if (s >= alphabet.size()) throw InvalidInput("symbol index out of range");
  }
}

bool StandardPft::is_empty_shift() const {
  // |Σ|^ℓ forbidden words means phase 0 has no states at all.
  std::size_t total = 1;
  for (std::size_t i = 0; i < word_length; ++i) {
    total *= alphabet.size();
    if (total > forbidden0.size()) return false;
  }
  return total == forbidden0.size();
}

PftSpec StandardPft::as_spec() const {
  std::vector<std::vector<Word>> lists(period);
  lists[0].assign(forbidden0.begin(), forbidden0.end());
  return PftSpec(alphabet, period, std::move(lists));
}

std::set<Word> expand_shifted_word(const Word& f, std::size_t j, const Alphabet& alphabet) {
  if (j == 0) throw InvalidInput("shift must be at least 1");
  std::set<Word> out;
  for (Word prefix : alphabet.all_words(j)) {
    prefix.letters.insert(prefix.letters.end(), f.letters.begin(), f.letters.end());
    out.insert(std::move(prefix));
  }
  return out;
}

StandardPft normalize(const PftSpec& spec) {
  std::set<Word> phase0(spec.forbidden[0].begin(), spec.forbidden[0].end());
  for (std::size_t j = 1; j < spec.period; ++j)
    for (const auto& f : spec.forbidden[j]) phase0.merge(expand_shifted_word(f, j, spec.alphabet));

  std::size_t len = 1;
  for (const auto& w : phase0) len = std::max(len, w.size());

  std::set<Word> forbidden0;
  for (const auto& w : phase0) {
    for (Word tail : spec.alphabet.all_words(len - w.size())) {
      tail.letters.insert(tail.letters.begin(), w.letters.begin(), w.letters.end());
      forbidden0.insert(std::move(tail));
    }
  }
  return StandardPft(spec.alphabet, spec.period, len, std::move(forbidden0));
}

StandardPft derived_pft(const StandardPft& x, std::size_t d) {
  if (d == 0 || x.period % d != 0)
    throw InvalidInput("derived period " + std::to_string(d) + " does not divide " +
                       std::to_string(x.period));
  return StandardPft(x.alphabet, d, x.word_length, x.forbidden0);
}

}  // namespace pftzeta
