#include <deque>
#include <unordered_map>

#include "dlga/fsa.hpp"

namespace dlga {

namespace {

struct SignatureHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Relabels states in breadth-first order following edges by symbol.
Automaton canonical_order(const Automaton& a) {
  std::vector<State> order(a.num_states(), kNoState);
  std::vector<State> seq;
  std::deque<State> queue{a.start()};
  order[a.start()] = 0;
  seq.push_back(a.start());
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (const auto& e : a.edges(s)) {
      if (order[e.target] == kNoState) {
        order[e.target] = static_cast<State>(seq.size());
        seq.push_back(e.target);
        queue.push_back(e.target);
      }
    }
  }
  Automaton out(a.alphabet());
  for (State s : seq) out.add_state(a.is_accepting(s));
  for (State s : seq) {
    for (const auto& e : a.edges(s)) out.add_edge(order[s], e.symbol, order[e.target]);
  }
  out.set_start(0);
  return out;
}

}  // namespace

Automaton minimize(const Automaton& input, std::size_t cap) {
  Automaton d = trim(input.deterministic() ? input : determinize(input, cap));
  if (is_empty(d)) return empty_language(input.alphabet());

  // Moore refinement on the trim partial DFA: a missing edge leads to the
  // implicit dead class, which no live state belongs to.
  const std::size_t n = d.num_states();
  std::vector<std::uint32_t> cls(n);
  std::size_t classes = 0;
  {
    bool any_acc = false, any_rej = false;
    for (State s = 0; s < n; ++s) {
      cls[s] = d.is_accepting(s) ? 1 : 0;
      (d.is_accepting(s) ? any_acc : any_rej) = true;
    }
    classes = static_cast<std::size_t>(any_acc) + static_cast<std::size_t>(any_rej);
  }
  std::vector<std::uint32_t> sig;
  for (;;) {
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, SignatureHash> ids;
    ids.reserve(n * 2);
    std::vector<std::uint32_t> next(n);
    for (State s = 0; s < n; ++s) {
      sig.clear();
      sig.push_back(cls[s]);
      for (const auto& e : d.edges(s)) {
        sig.push_back(e.symbol);
        sig.push_back(cls[e.target]);
      }
      auto [it, fresh] = ids.emplace(sig, static_cast<std::uint32_t>(ids.size()));
      next[s] = it->second;
    }
    cls = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }

  Automaton q(input.alphabet());
  for (std::size_t c = 0; c < classes; ++c) q.add_state(false);
  std::vector<char> done(classes, 0);
  for (State s = 0; s < n; ++s) {
    if (done[cls[s]]) continue;
    done[cls[s]] = 1;
    q.set_accepting(cls[s], d.is_accepting(s));
    for (const auto& e : d.edges(s)) q.add_edge(cls[s], e.symbol, cls[e.target]);
  }
  q.set_start(cls[d.start()]);
  return canonical_order(q);
}

}  // namespace dlga
