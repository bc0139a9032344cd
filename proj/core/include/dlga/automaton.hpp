#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dlga {

using Symbol = std::uint32_t;
using State = std::uint32_t;
using SymbolString = std::vector<Symbol>;

inline constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();
inline constexpr State kNoState = std::numeric_limits<State>::max();

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// Finite token set. A convolution alphabet pairs tokens of a base alphabet
// (plus a pad) and excludes the all-pad pair.
class Alphabet {
 public:
  static AlphabetPtr make(std::vector<std::string> names);
  static AlphabetPtr convolution(AlphabetPtr base);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  std::optional<Symbol> find(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool is_convolution() const noexcept { return base_ != nullptr; }
  const AlphabetPtr& base() const noexcept { return base_; }

  // Two-track view; the pad component is base()->size().
  Symbol pad() const noexcept { return static_cast<Symbol>(base_->size()); }
  Symbol pair(Symbol top, Symbol bottom) const;
  Symbol top(Symbol s) const noexcept { return s / static_cast<Symbol>(base_->size() + 1); }
  Symbol bottom(Symbol s) const noexcept { return s % static_cast<Symbol>(base_->size() + 1); }

  friend bool operator==(const Alphabet& a, const Alphabet& b);

 private:
  Alphabet() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> lookup_;
  AlphabetPtr base_;
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

struct Edge {
  Symbol symbol;
  State target;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Acceptor with a single start state. Edges per state are kept sorted by
// (symbol, target) without duplicates; kEpsilon marks epsilon moves.
class Automaton {
 public:
  Automaton() = default;
  explicit Automaton(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }

  State add_state(bool accepting = false);
  void add_edge(State from, Symbol symbol, State to);
  void set_start(State s) { start_ = s; }
  void set_accepting(State s, bool accepting) { accepting_.at(s) = accepting; }

  std::size_t num_states() const noexcept { return edges_.size(); }
  std::size_t num_edges() const noexcept;
  State start() const noexcept { return start_; }
  bool is_accepting(State s) const { return accepting_.at(s) != 0; }
  const std::vector<Edge>& edges(State s) const { return edges_.at(s); }

  // No epsilon edges and at most one successor per (state, symbol).
  bool deterministic() const noexcept { return deterministic_; }

  // Successor in a deterministic machine, or kNoState.
  State step(State s, Symbol symbol) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<char> accepting_;
  State start_ = 0;
  bool deterministic_ = true;
};

}  // namespace dlga
