#include <map>

#include "dlga/errors.hpp"
#include "dlga/fsa.hpp"

namespace dlga {

namespace {

void require_convolution(const AlphabetPtr& a) {
  if (!a || !a->is_convolution()) throw AlphabetMismatch("expected a two-track convolution alphabet");
}

}  // namespace

SymbolString convolve(const AlphabetPtr& conv, const SymbolString& top, const SymbolString& bottom) {
  require_convolution(conv);
  const std::size_t n = std::max(top.size(), bottom.size());
  SymbolString out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(conv->pair(k < top.size() ? top[k] : conv->pad(), k < bottom.size() ? bottom[k] : conv->pad()));
  }
  return out;
}

bool pad_discipline(const AlphabetPtr& conv, const SymbolString& w) {
  bool top_done = false, bottom_done = false;
  for (Symbol s : w) {
    if (s >= conv->size()) return false;
    bool tp = conv->top(s) == conv->pad(), bp = conv->bottom(s) == conv->pad();
    if ((top_done && !tp) || (bottom_done && !bp)) return false;
    top_done = tp;
    bottom_done = bp;
  }
  return true;
}

std::pair<SymbolString, SymbolString> split(const AlphabetPtr& conv, const SymbolString& w) {
  require_convolution(conv);
  if (!pad_discipline(conv, w)) throw MalformedString("pads are not a contiguous tail of one track");
  SymbolString top, bottom;
  for (Symbol s : w) {
    if (conv->top(s) != conv->pad()) top.push_back(conv->top(s));
    if (conv->bottom(s) != conv->pad()) bottom.push_back(conv->bottom(s));
  }
  return {std::move(top), std::move(bottom)};
}

Automaton swap_tracks(const Automaton& a) {
  const auto& conv = a.alphabet();
  require_convolution(conv);
  Automaton out(conv);
  for (State s = 0; s < a.num_states(); ++s) out.add_state(a.is_accepting(s));
  for (State s = 0; s < a.num_states(); ++s) {
    for (const auto& e : a.edges(s)) {
      Symbol sym = e.symbol == kEpsilon ? kEpsilon : conv->pair(conv->bottom(e.symbol), conv->top(e.symbol));
      out.add_edge(s, sym, e.target);
    }
  }
  out.set_start(a.start());
  return out;
}

Automaton pad_checker(const AlphabetPtr& conv) {
  require_convolution(conv);
  Automaton out(conv);
  const State both = out.add_state(true), top_done = out.add_state(true), bottom_done = out.add_state(true);
  const Symbol k = conv->pad();
  for (Symbol t = 0; t <= k; ++t) {
    for (Symbol b = 0; b <= k; ++b) {
      if (t == k && b == k) continue;
      const Symbol sym = conv->pair(t, b);
      if (t == k) {
        out.add_edge(both, sym, top_done);
        out.add_edge(top_done, sym, top_done);
      } else if (b == k) {
        out.add_edge(both, sym, bottom_done);
        out.add_edge(bottom_done, sym, bottom_done);
      } else {
        out.add_edge(both, sym, both);
      }
    }
  }
  out.set_start(both);
  return out;
}

Automaton lift_track(const Automaton& a, const AlphabetPtr& conv, int track) {
  require_convolution(conv);
  if (!same_alphabet(a.alphabet(), conv->base())) throw AlphabetMismatch("lift_track: base alphabet differs");
  const Automaton d = a.deterministic() ? a : determinize(a);
  Automaton out(conv);
  for (State s = 0; s < d.num_states(); ++s) out.add_state(d.is_accepting(s));
  const State ended = out.add_state(true);
  const Symbol k = conv->pad();
  auto sym = [&](Symbol mine, Symbol other) { return track == 0 ? conv->pair(mine, other) : conv->pair(other, mine); };
  for (State s = 0; s < d.num_states(); ++s) {
    for (const auto& e : d.edges(s)) {
      for (Symbol o = 0; o <= k; ++o) out.add_edge(s, sym(e.symbol, o), e.target);
    }
    if (d.is_accepting(s)) {
      for (Symbol o = 0; o < k; ++o) out.add_edge(s, sym(k, o), ended);
    }
  }
  for (Symbol o = 0; o < k; ++o) out.add_edge(ended, sym(k, o), ended);
  out.set_start(d.start());
  return out;
}

Automaton shift_closure(const Automaton& a, const AlphabetPtr& conv) {
  require_convolution(conv);
  if (!same_alphabet(a.alphabet(), conv->base())) throw AlphabetMismatch("shift_closure: base alphabet differs");
  const Automaton d = a.deterministic() ? a : determinize(a);
  Automaton out(conv);
  const Symbol k = conv->pad();
  const State start = out.add_state(false);
  const State fin = out.add_state(true);
  out.set_start(start);
  if (d.num_states() == 0) return out;
  // (p, c): d is in p after the bottom track so far, c is the next top token.
  std::map<std::pair<State, Symbol>, State> ids;
  std::vector<std::pair<State, Symbol>> pending;
  auto intern = [&](State p, Symbol c) {
    auto [it, fresh] = ids.emplace(std::make_pair(p, c), 0);
    if (fresh) {
      it->second = out.add_state(false);
      pending.emplace_back(p, c);
    }
    return it->second;
  };
  auto expand = [&](State from, State p, std::optional<Symbol> expected) {
    for (Symbol x = 0; x < k; ++x) {
      if (expected && *expected != x) continue;
      for (const auto& e : d.edges(p)) out.add_edge(from, conv->pair(x, e.symbol), intern(e.target, e.symbol));
      if (d.is_accepting(p)) out.add_edge(from, conv->pair(x, k), fin);
    }
  };
  expand(start, d.start(), std::nullopt);
  while (!pending.empty()) {
    auto [p, c] = pending.back();
    pending.pop_back();
    expand(ids.at({p, c}), p, c);
  }
  return out;
}

Automaton delay_bottom(const Automaton& input) {
  const auto& conv = input.alphabet();
  require_convolution(conv);
  const Automaton d = minimize(intersect(input, pad_checker(conv)));
  const Symbol k = conv->pad();
  Automaton out(conv);
  const State start = out.add_state(false);
  out.set_start(start);
  // (p, buf): d is in p, buf is the top token still waiting for its partner.
  std::map<std::pair<State, Symbol>, State> ids;
  std::vector<std::pair<State, Symbol>> pending;
  auto accepting = [&](State p, Symbol buf) {
    if (buf == k) return d.is_accepting(p);
    State t = d.step(p, conv->pair(buf, k));
    return t != kNoState && d.is_accepting(t);
  };
  auto intern = [&](State p, Symbol buf) {
    auto [it, fresh] = ids.emplace(std::make_pair(p, buf), 0);
    if (fresh) {
      it->second = out.add_state(accepting(p, buf));
      pending.emplace_back(p, buf);
    }
    return it->second;
  };
  for (Symbol t = 0; t <= k; ++t) {
    for (Symbol x = 0; x < k; ++x) out.add_edge(start, conv->pair(t, x), intern(d.start(), t));
  }
  while (!pending.empty()) {
    auto [p, buf] = pending.back();
    pending.pop_back();
    const State from = ids.at({p, buf});
    for (Symbol z = 0; z <= k; ++z) {
      if (buf == k && z == k) continue;
      State next = d.step(p, conv->pair(buf, z));
      if (next == kNoState) continue;
      for (Symbol t = 0; t <= k; ++t) {
        if (t == k && z == k) continue;
        out.add_edge(from, conv->pair(t, z), intern(next, t));
      }
    }
  }
  return out;
}

Automaton offset_concat(const Automaton& a, const Automaton& b) {
  const auto& conv = a.alphabet();
  require_convolution(conv);
  // Equal-length part: no pads at all.
  Automaton no_pads(conv);
  State s = no_pads.add_state(true);
  for (Symbol t = 0; t < conv->pad(); ++t) {
    for (Symbol u = 0; u < conv->pad(); ++u) no_pads.add_edge(s, conv->pair(t, u), s);
  }
  no_pads.set_start(s);
  const Automaton head = minimize(intersect(a, no_pads));
  const Automaton lower = concat(head, delay_bottom(b));
  const Automaton upper = concat(head, swap_tracks(delay_bottom(swap_tracks(b))));
  return minimize(unite(determinize(lower), determinize(upper)));
}

}  // namespace dlga
