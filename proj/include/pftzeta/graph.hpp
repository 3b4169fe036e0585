#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pftzeta/core_model.hpp"
#include "pftzeta/necklace.hpp"
#include "pftzeta/types.hpp"

namespace pftzeta {

/// A word-based graph. States are length-ℓ words grouped into phases; an
/// edge u -> v exists iff v is in the next phase (cyclically) and
/// u_2..u_ℓ = v_1..v_{ℓ-1}; its label is v_ℓ.
///
/// States are indexed phase-major, lexicographic by word within a phase.
/// Adjacency matrices use the same order.
class Wbg {
 public:
  struct State {
    Word word;
    std::size_t phase;
  };
  struct Edge {
    std::size_t source;
    std::size_t target;
    Symbol label;
  };

  /// Builds the WBG whose phase i holds Σ^ℓ \ F when restricted[i] is set and
  /// Σ^ℓ otherwise.
  Wbg(const StandardPft& x, const std::vector<bool>& restricted);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t word_length() const { return word_length_; }
  std::size_t num_phases() const { return phase_offsets_.size() - 1; }
  std::size_t num_states() const { return states_.size(); }
  std::size_t phase_size(std::size_t phase) const;
  const std::vector<State>& states() const { return states_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Outgoing edges of a state, as indices into edges(), sorted by label.
  const std::vector<std::size_t>& out_edges(std::size_t state) const { return out_[state]; }

  std::optional<std::size_t> find_state(const Word& w, std::size_t phase) const;
  /// Target of the edge labeled `a` from `state`, if any.
  std::optional<std::size_t> step(std::size_t state, Symbol a) const;

  std::string state_id(std::size_t state) const;

 private:
  Alphabet alphabet_;
  std::size_t word_length_;
  std::vector<std::size_t> phase_offsets_;
  std::vector<State> states_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Moision–Siegel presentation: phase 0 restricted, phases 1..T-1 full.
Wbg build_ms_presentation(const StandardPft& x);

/// G_z: L_z phases, phase i restricted iff z♯_i = 1.
Wbg build_gz(const StandardPft& x, const NecklaceRep& z);

/// 0/1 adjacency matrix in canonical state order.
IntMatrix adjacency(const Wbg& g);

/// B_z: the phase-0 block of A_z^{L_z}, counting paths of length L_z between
/// phase-0 states.
IntMatrix condensed_matrix(const StandardPft& x, const NecklaceRep& z);

/// One cluster per phase (`phase_i`), nodes `<word>@<phase>`, edges labeled
/// by symbol token.
std::string to_dot(const Wbg& g);
nlohmann::json to_json(const Wbg& g);

}  // namespace pftzeta
