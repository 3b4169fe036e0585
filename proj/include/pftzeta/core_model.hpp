#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pftzeta {

using Symbol = std::uint32_t;

/// A finite word over an alphabet, stored as symbol indices.
struct Word {
  std::vector<Symbol> letters;

  Word() = default;
  explicit Word(std::vector<Symbol> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Symbol operator[](std::size_t i) const { return letters[i]; }

  bool starts_with(const Word& prefix) const;
  bool ends_with(const Word& suffix) const;
  Word suffix(std::size_t count) const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;
};

/// Ordered set of distinct tokens. The order fixes every lexicographic
/// comparison downstream (symbol i sorts before symbol i+1).
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> tokens);

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& token(Symbol s) const { return tokens_.at(s); }

  /// True when every token is exactly one character, in which case words
  /// serialize as plain concatenated strings.
  bool single_char() const { return single_char_; }

  /// Index of `token`, or throws InvalidInput.
  Symbol index_of(std::string_view token) const;

  /// Parses a concatenated string; only valid for single-character alphabets.
  Word parse(std::string_view text) const;
  Word from_tokens(std::span<const std::string> tokens) const;

  /// Concatenated text for single-character alphabets, space-separated tokens
  /// otherwise.
  std::string format(const Word& w) const;
  std::vector<std::string> to_tokens(const Word& w) const;

  /// All |Σ|^length words, in lexicographic order.
  std::vector<Word> all_words(std::size_t length) const;

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  bool single_char_ = true;
};

/// A PFT as written by a user: one forbidden list per phase, words of any
/// length.
struct PftSpec {
  Alphabet alphabet;
  std::size_t period;
  std::vector<std::vector<Word>> forbidden;

  PftSpec(Alphabet a, std::size_t t, std::vector<std::vector<Word>> f);
};

/// Standard form: all forbidden words have length word_length and are only
/// forbidden at phase 0.
struct StandardPft {
  Alphabet alphabet;
  std::size_t period;
  std::size_t word_length;
  std::set<Word> forbidden0;

  StandardPft(Alphabet a, std::size_t t, std::size_t len, std::set<Word> f0);

  bool is_forbidden(const Word& w) const { return forbidden0.contains(w); }
  bool is_empty_shift() const;
  /// Re-wraps as a PftSpec with (forbidden0, ∅, …, ∅).
  PftSpec as_spec() const;
};

/// All words of length j + |f| that end with f.
std::set<Word> expand_shifted_word(const Word& f, std::size_t j, const Alphabet& alphabet);

StandardPft normalize(const PftSpec& spec);

/// The same forbidden set with period d; d must divide the period.
StandardPft derived_pft(const StandardPft& x, std::size_t d);

}  // namespace pftzeta
