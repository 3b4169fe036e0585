#include "pftzeta/spec_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "pftzeta/types.hpp"

namespace pftzeta {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InvalidInput(field + ": " + what);
}

Word parse_word(const Alphabet& alphabet, const json& node, const std::string& field) {
  try {
    if (node.is_string()) {
      Word w = alphabet.parse(node.get<std::string>());
      if (w.empty()) fail(field, "forbidden words must be non-empty");
      return w;
    }
    if (node.is_array()) {
      std::vector<std::string> tokens;
      for (const auto& t : node) {
        if (!t.is_string()) fail(field, "tokens must be strings");
        tokens.push_back(t.get<std::string>());
      }
      if (tokens.empty()) fail(field, "forbidden words must be non-empty");
      return alphabet.from_tokens(tokens);
    }
  } catch (const InvalidInput& e) {
    if (std::string_view(e.what()).starts_with(field)) throw;
    fail(field, e.what());
  }
  fail(field, "expected a string or an array of tokens");
}

}  // namespace

PftSpec parse_spec(const json& doc) {
  if (!doc.is_object()) fail("$", "expected a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "alphabet" && key != "period" && key != "forbidden" && key != "word_length")
      fail(key, "unknown field");

  if (!doc.contains("alphabet") || !doc["alphabet"].is_array())
    fail("alphabet", "expected an array of token strings");
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < doc["alphabet"].size(); ++i) {
    const auto& t = doc["alphabet"][i];
    if (!t.is_string()) fail("alphabet[" + std::to_string(i) + "]", "expected a string");
    tokens.push_back(t.get<std::string>());
  }
  std::optional<Alphabet> alphabet;
  try {
    alphabet.emplace(std::move(tokens));
  } catch (const InvalidInput& e) {
    fail("alphabet", e.what());
  }

  if (!doc.contains("period") || !doc["period"].is_number_integer() || doc["period"].get<long long>() < 1)
    fail("period", "expected a positive integer");
  const auto period = doc["period"].get<std::size_t>();

  if (!doc.contains("forbidden") || !doc["forbidden"].is_array())
    fail("forbidden", "expected an array of word lists");
  const auto& lists = doc["forbidden"];
  if (lists.size() != period)
    fail("forbidden", "expected " + std::to_string(period) + " lists (one per phase), got " +
                          std::to_string(lists.size()));
  std::vector<std::vector<Word>> forbidden(period);
  for (std::size_t j = 0; j < period; ++j) {
    const std::string field = "forbidden[" + std::to_string(j) + "]";
    if (!lists[j].is_array()) fail(field, "expected an array of words");
    for (std::size_t k = 0; k < lists[j].size(); ++k)
      forbidden[j].push_back(parse_word(*alphabet, lists[j][k], field + "[" + std::to_string(k) + "]"));
  }
  return PftSpec(std::move(*alphabet), period, std::move(forbidden));
}

PftSpec parse_spec_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput("byte " + std::to_string(e.byte) + ": malformed JSON (" + e.what() + ")");
  }
  return parse_spec(doc);
}

PftSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec_text(buf.str());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

json word_to_json(const Alphabet& alphabet, const Word& w) {
  if (alphabet.single_char()) return alphabet.format(w);
  return alphabet.to_tokens(w);
}

json to_json(const StandardPft& x) {
  json lists = json::array();
  json phase0 = json::array();
  for (const auto& w : x.forbidden0) phase0.push_back(word_to_json(x.alphabet, w));
  lists.push_back(std::move(phase0));
  for (std::size_t j = 1; j < x.period; ++j) lists.push_back(json::array());
  json doc;
  doc["alphabet"] = x.alphabet.tokens();
  doc["period"] = x.period;
  doc["word_length"] = x.word_length;
  doc["forbidden"] = std::move(lists);
  return doc;
}

}  // namespace pftzeta
