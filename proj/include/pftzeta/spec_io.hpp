#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pftzeta/core_model.hpp"

namespace pftzeta {

/// Parses a PFT spec document:
///   { "alphabet": ["0","1"], "period": 2, "forbidden": [["11"],[]] }
/// Words are concatenated strings for single-character alphabets, token
/// arrays otherwise (token arrays are accepted for any alphabet). Errors are
/// InvalidInput with the offending field path in the message.
PftSpec parse_spec(const nlohmann::json& doc);
PftSpec parse_spec_text(std::string_view text);
PftSpec load_spec_file(const std::string& path);

nlohmann::json word_to_json(const Alphabet& alphabet, const Word& w);

/// Serializes a standard-form PFT in the same schema as the input, so the
/// output can be fed back to any command. `word_length` is informational.
nlohmann::json to_json(const StandardPft& x);

}  // namespace pftzeta
