#include "pftzeta/graph.hpp"

#include <algorithm>
#include <sstream>

#include "pftzeta/exact_linalg.hpp"

namespace pftzeta {

Wbg::Wbg(const StandardPft& x, const std::vector<bool>& restricted)
    : alphabet_(x.alphabet), word_length_(x.word_length) {
  if (restricted.empty()) throw InvalidInput("a WBG needs at least one phase");
  const std::vector<Word> words = alphabet_.all_words(word_length_);
  phase_offsets_.push_back(0);
  for (std::size_t p = 0; p < restricted.size(); ++p) {
    for (const auto& w : words)
      if (!restricted[p] || !x.is_forbidden(w)) states_.push_back({w, p});
    phase_offsets_.push_back(states_.size());
  }

  out_.resize(states_.size());
  const std::size_t phases = restricted.size();
  for (std::size_t s = 0; s < states_.size(); ++s) {
    const auto& [u, p] = states_[s];
    Word v = u.suffix(word_length_ - 1);
    v.letters.push_back(0);
    for (Symbol a = 0; a < alphabet_.size(); ++a) {
      v.letters.back() = a;
      if (auto t = find_state(v, (p + 1) % phases)) {
        out_[s].push_back(edges_.size());
        edges_.push_back({s, *t, a});
      }
    }
  }
}

std::size_t Wbg::phase_size(std::size_t phase) const {
  return phase_offsets_.at(phase + 1) - phase_offsets_.at(phase);
}

std::optional<std::size_t> Wbg::find_state(const Word& w, std::size_t phase) const {
  const auto first = states_.begin() + static_cast<std::ptrdiff_t>(phase_offsets_.at(phase));
  const auto last = states_.begin() + static_cast<std::ptrdiff_t>(phase_offsets_.at(phase + 1));
  auto it = std::lower_bound(first, last, w, [](const State& s, const Word& key) { return s.word < key; });
  if (it == last || it->word != w) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::optional<std::size_t> Wbg::step(std::size_t state, Symbol a) const {
  for (std::size_t e : out_.at(state))
    if (edges_[e].label == a) return edges_[e].target;
  return std::nullopt;
}

std::string Wbg::state_id(std::size_t state) const {
  const auto& s = states_.at(state);
  return alphabet_.format(s.word) + "@" + std::to_string(s.phase);
}

Wbg build_ms_presentation(const StandardPft& x) {
  std::vector<bool> restricted(x.period, false);
  restricted[0] = true;
  return Wbg(x, restricted);
}

Wbg build_gz(const StandardPft& x, const NecklaceRep& z) {
  std::vector<bool> restricted(z.L);
  for (std::size_t i = 0; i < z.L; ++i) restricted[i] = z.restricted(i);
  return Wbg(x, restricted);
}

IntMatrix adjacency(const Wbg& g) {
  const auto n = static_cast<Eigen::Index>(g.num_states());
  IntMatrix a = IntMatrix::Zero(n, n);
  for (const auto& e : g.edges())
    a(static_cast<Eigen::Index>(e.source), static_cast<Eigen::Index>(e.target)) = 1;
  return a;
}

IntMatrix condensed_matrix(const StandardPft& x, const NecklaceRep& z) {
  const Wbg g = build_gz(x, z);
  const auto n0 = static_cast<Eigen::Index>(g.phase_size(0));
  if (n0 == 0) return IntMatrix(0, 0);
  return matrix_power(adjacency(g), z.L).topLeftCorner(n0, n0);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Wbg& g) {
  std::ostringstream os;
  os << "digraph wbg {\n  rankdir=LR;\n";
  for (std::size_t p = 0; p < g.num_phases(); ++p) {
    os << "  subgraph cluster_" << p << " {\n    label=\"phase_" << p << "\";\n";
    for (std::size_t s = 0; s < g.num_states(); ++s)
      if (g.states()[s].phase == p) os << "    " << quoted(g.state_id(s)) << ";\n";
    os << "  }\n";
  }
  for (const auto& e : g.edges())
    os << "  " << quoted(g.state_id(e.source)) << " -> " << quoted(g.state_id(e.target))
       << " [label=" << quoted(g.alphabet().token(e.label)) << "];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const Wbg& g) {
  nlohmann::json phases = nlohmann::json::array();
  for (std::size_t p = 0; p < g.num_phases(); ++p) phases.push_back(nlohmann::json::array());
  for (std::size_t s = 0; s < g.num_states(); ++s)
    phases[g.states()[s].phase].push_back(g.alphabet().format(g.states()[s].word));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"from", g.state_id(e.source)},
                     {"to", g.state_id(e.target)},
                     {"label", g.alphabet().token(e.label)}});
  return {{"num_phases", g.num_phases()},
          {"word_length", g.word_length()},
          {"phases", std::move(phases)},
          {"edges", std::move(edges)}};
}

}  // namespace pftzeta
