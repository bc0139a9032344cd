#include "dlga/automaton.hpp"

#include <algorithm>

#include "dlga/errors.hpp"

namespace dlga {

AlphabetPtr Alphabet::make(std::vector<std::string> names) {
  auto a = std::shared_ptr<Alphabet>(new Alphabet());
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (!a->lookup_.emplace(names[k], static_cast<Symbol>(k)).second) {
      throw AlphabetMismatch("duplicate token '" + names[k] + "'");
    }
  }
  a->names_ = std::move(names);
  return a;
}

AlphabetPtr Alphabet::convolution(AlphabetPtr base) {
  auto a = std::shared_ptr<Alphabet>(new Alphabet());
  const std::size_t k = base->size();
  auto label = [&](std::size_t x) { return x == k ? std::string("~") : base->name(static_cast<Symbol>(x)); };
  for (std::size_t top = 0; top <= k; ++top) {
    for (std::size_t bottom = 0; bottom <= k; ++bottom) {
      // The all-pad slot keeps the dense indexing but never occurs.
      std::string name = label(top) + "|" + label(bottom);
      a->lookup_.emplace(name, static_cast<Symbol>(a->names_.size()));
      a->names_.push_back(std::move(name));
    }
  }
  a->names_.pop_back();
  a->lookup_.erase("~|~");
  a->base_ = std::move(base);
  return a;
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::pair(Symbol top, Symbol bottom) const {
  const auto k = static_cast<Symbol>(base_->size());
  if (top > k || bottom > k || (top == k && bottom == k)) throw AlphabetMismatch("invalid convolution pair");
  return top * (k + 1) + bottom;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.names_ != b.names_) return false;
  if ((a.base_ == nullptr) != (b.base_ == nullptr)) return false;
  return a.base_ == nullptr || *a.base_ == *b.base_;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

State Automaton::add_state(bool accepting) {
  edges_.emplace_back();
  accepting_.push_back(accepting ? 1 : 0);
  return static_cast<State>(edges_.size() - 1);
}

void Automaton::add_edge(State from, Symbol symbol, State to) {
  auto& list = edges_.at(from);
  if (to >= edges_.size()) throw std::out_of_range("edge target out of range");
  if (symbol != kEpsilon && alphabet_ && symbol >= alphabet_->size()) {
    throw AlphabetMismatch("edge symbol outside alphabet");
  }
  Edge e{symbol, to};
  auto it = std::lower_bound(list.begin(), list.end(), e);
  if (it != list.end() && *it == e) return;
  if (symbol == kEpsilon) deterministic_ = false;
  if (it != list.end() && it->symbol == symbol) deterministic_ = false;
  if (it != list.begin() && std::prev(it)->symbol == symbol) deterministic_ = false;
  list.insert(it, e);
}

std::size_t Automaton::num_edges() const noexcept {
  std::size_t n = 0;
  for (const auto& list : edges_) n += list.size();
  return n;
}

State Automaton::step(State s, Symbol symbol) const {
  const auto& list = edges_[s];
  auto it = std::lower_bound(list.begin(), list.end(), Edge{symbol, 0});
  if (it == list.end() || it->symbol != symbol) return kNoState;
  return it->target;
}

}  // namespace dlga
