#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>

#include "dlga/errors.hpp"
#include "dlga/fsa.hpp"

namespace dlga {

namespace {

void require_same(const Automaton& a, const Automaton& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet())) throw AlphabetMismatch("automata use different alphabets");
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw StateBlowup("state count exceeded cap of " + std::to_string(cap));
}

void close_epsilon(const Automaton& a, std::vector<State>& set) {
  std::vector<State> stack(set.begin(), set.end());
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& e : a.edges(s)) {
      if (e.symbol != kEpsilon) continue;
      if (std::find(set.begin(), set.end(), e.target) == set.end()) {
        set.push_back(e.target);
        stack.push_back(e.target);
      }
    }
  }
  std::sort(set.begin(), set.end());
}

const Automaton& as_dfa(const Automaton& a, Automaton& storage, std::size_t cap) {
  if (a.deterministic()) return a;
  storage = determinize(a, cap);
  return storage;
}

}  // namespace

std::size_t default_state_cap() {
  if (const char* env = std::getenv("DLGA_STATE_CAP")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

Automaton determinize(const Automaton& a, std::size_t cap) {
  Automaton out(a.alphabet());
  if (a.num_states() == 0) {
    out.set_start(out.add_state(false));
    return out;
  }
  std::map<std::vector<State>, State> ids;
  std::deque<std::vector<State>> work;
  auto intern = [&](std::vector<State> set) -> State {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    bool acc = std::any_of(set.begin(), set.end(), [&](State s) { return a.is_accepting(s); });
    State id = out.add_state(acc);
    check_cap(out.num_states(), cap);
    ids.emplace(set, id);
    work.push_back(std::move(set));
    return id;
  };
  std::vector<State> init{a.start()};
  close_epsilon(a, init);
  out.set_start(intern(init));
  std::vector<Edge> moves;
  while (!work.empty()) {
    std::vector<State> set = std::move(work.front());
    work.pop_front();
    const State from = ids.at(set);
    moves.clear();
    for (State s : set) {
      for (const auto& e : a.edges(s)) {
        if (e.symbol != kEpsilon) moves.push_back(e);
      }
    }
    std::sort(moves.begin(), moves.end());
    for (std::size_t x = 0; x < moves.size();) {
      std::size_t y = x;
      std::vector<State> target;
      while (y < moves.size() && moves[y].symbol == moves[x].symbol) {
        if (target.empty() || target.back() != moves[y].target) target.push_back(moves[y].target);
        ++y;
      }
      close_epsilon(a, target);
      const Symbol sym = moves[x].symbol;
      State to = intern(std::move(target));
      out.add_edge(from, sym, to);
      x = y;
    }
  }
  return out;
}

Automaton trim(const Automaton& a) {
  const std::size_t n = a.num_states();
  std::vector<char> reach(n, 0), coreach(n, 0);
  std::vector<std::vector<State>> rev(n);
  std::vector<State> stack;
  if (n > 0) {
    reach[a.start()] = 1;
    stack.push_back(a.start());
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& e : a.edges(s)) {
      if (!reach[e.target]) {
        reach[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  for (State s = 0; s < n; ++s) {
    for (const auto& e : a.edges(s)) rev[e.target].push_back(s);
    if (a.is_accepting(s) && reach[s]) {
      coreach[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : rev[s]) {
      if (!coreach[p]) {
        coreach[p] = 1;
        stack.push_back(p);
      }
    }
  }
  Automaton out(a.alphabet());
  std::vector<State> remap(n, kNoState);
  if (n == 0 || !coreach[a.start()]) {
    out.set_start(out.add_state(false));
    return out;
  }
  for (State s = 0; s < n; ++s) {
    if (reach[s] && coreach[s]) remap[s] = out.add_state(a.is_accepting(s));
  }
  out.set_start(remap[a.start()]);
  for (State s = 0; s < n; ++s) {
    if (remap[s] == kNoState) continue;
    for (const auto& e : a.edges(s)) {
      if (remap[e.target] != kNoState) out.add_edge(remap[s], e.symbol, remap[e.target]);
    }
  }
  return out;
}

Automaton intersect(const Automaton& a, const Automaton& b, std::size_t cap) {
  require_same(a, b);
  Automaton sa, sb;
  const Automaton& da = as_dfa(a, sa, cap);
  const Automaton& db = as_dfa(b, sb, cap);
  Automaton out(a.alphabet());
  if (da.num_states() == 0 || db.num_states() == 0) {
    out.set_start(out.add_state(false));
    return out;
  }
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pending;
  auto key = [](State x, State y) { return (static_cast<std::uint64_t>(x) << 32) | y; };
  auto intern = [&](State x, State y) {
    auto [it, fresh] = ids.emplace(key(x, y), 0);
    if (fresh) {
      it->second = out.add_state(da.is_accepting(x) && db.is_accepting(y));
      check_cap(out.num_states(), cap);
      pending.emplace_back(x, y);
    }
    return it->second;
  };
  out.set_start(intern(da.start(), db.start()));
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    const State from = ids.at(key(x, y));
    const auto& ex = da.edges(x);
    const auto& ey = db.edges(y);
    std::size_t p = 0, r = 0;
    while (p < ex.size() && r < ey.size()) {
      if (ex[p].symbol < ey[r].symbol) {
        ++p;
      } else if (ey[r].symbol < ex[p].symbol) {
        ++r;
      } else {
        State to = intern(ex[p].target, ey[r].target);
        out.add_edge(from, ex[p].symbol, to);
        ++p;
        ++r;
      }
    }
  }
  return out;
}

Automaton unite(const Automaton& a, const Automaton& b, std::size_t cap) {
  require_same(a, b);
  Automaton sa, sb;
  const Automaton& da = as_dfa(a, sa, cap);
  const Automaton& db = as_dfa(b, sb, cap);
  Automaton out(a.alphabet());
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pending;
  auto acc = [&](State x, State y) {
    return (x != kNoState && da.is_accepting(x)) || (y != kNoState && db.is_accepting(y));
  };
  auto intern = [&](State x, State y) {
    auto [it, fresh] = ids.emplace(std::make_pair(x, y), 0);
    if (fresh) {
      it->second = out.add_state(acc(x, y));
      check_cap(out.num_states(), cap);
      pending.emplace_back(x, y);
    }
    return it->second;
  };
  State sx = da.num_states() ? da.start() : kNoState;
  State sy = db.num_states() ? db.start() : kNoState;
  out.set_start(intern(sx, sy));
  static const std::vector<Edge> none;
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    const State from = ids.at({x, y});
    const auto& ex = x == kNoState ? none : da.edges(x);
    const auto& ey = y == kNoState ? none : db.edges(y);
    std::size_t p = 0, r = 0;
    while (p < ex.size() || r < ey.size()) {
      Symbol sym;
      State tx = kNoState, ty = kNoState;
      if (r == ey.size() || (p < ex.size() && ex[p].symbol < ey[r].symbol)) {
        sym = ex[p].symbol;
        tx = ex[p++].target;
      } else if (p == ex.size() || ey[r].symbol < ex[p].symbol) {
        sym = ey[r].symbol;
        ty = ey[r++].target;
      } else {
        sym = ex[p].symbol;
        tx = ex[p++].target;
        ty = ey[r++].target;
      }
      State to = intern(tx, ty);
      out.add_edge(from, sym, to);
    }
  }
  return out;
}

Automaton concat(const Automaton& a, const Automaton& b) {
  require_same(a, b);
  Automaton out(a.alphabet());
  for (State s = 0; s < a.num_states(); ++s) out.add_state(false);
  const auto offset = static_cast<State>(a.num_states());
  for (State s = 0; s < b.num_states(); ++s) out.add_state(b.is_accepting(s));
  if (a.num_states() == 0 || b.num_states() == 0) {
    Automaton e(a.alphabet());
    e.set_start(e.add_state(false));
    return e;
  }
  for (State s = 0; s < a.num_states(); ++s) {
    for (const auto& e : a.edges(s)) out.add_edge(s, e.symbol, e.target);
    if (a.is_accepting(s)) out.add_edge(s, kEpsilon, offset + b.start());
  }
  for (State s = 0; s < b.num_states(); ++s) {
    for (const auto& e : b.edges(s)) out.add_edge(offset + s, e.symbol, offset + e.target);
  }
  out.set_start(a.start());
  return out;
}

Automaton complement(const Automaton& a, std::size_t cap) {
  Automaton storage;
  const Automaton& d = as_dfa(a, storage, cap);
  const auto sigma = static_cast<Symbol>(a.alphabet()->size());
  Automaton out(a.alphabet());
  for (State s = 0; s < d.num_states(); ++s) out.add_state(!d.is_accepting(s));
  const State sink = out.add_state(true);
  check_cap(out.num_states(), cap);
  for (State s = 0; s <= d.num_states(); ++s) {
    for (Symbol x = 0; x < sigma; ++x) {
      State t = s < d.num_states() ? d.step(s, x) : kNoState;
      out.add_edge(s, x, t == kNoState ? sink : t);
    }
  }
  out.set_start(d.num_states() ? d.start() : sink);
  return out;
}

bool is_empty(const Automaton& a) {
  if (a.num_states() == 0) return true;
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack{a.start()};
  seen[a.start()] = 1;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    if (a.is_accepting(s)) return false;
    for (const auto& e : a.edges(s)) {
      if (!seen[e.target]) {
        seen[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  return true;
}

bool accepts(const Automaton& a, const SymbolString& w) {
  if (a.num_states() == 0) return false;
  if (a.alphabet()->is_convolution() && !pad_discipline(a.alphabet(), w)) return false;
  if (a.deterministic()) {
    State s = a.start();
    for (Symbol x : w) {
      s = a.step(s, x);
      if (s == kNoState) return false;
    }
    return a.is_accepting(s);
  }
  std::vector<State> cur{a.start()};
  close_epsilon(a, cur);
  for (Symbol x : w) {
    std::vector<State> next;
    for (State s : cur) {
      for (const auto& e : a.edges(s)) {
        if (e.symbol == x && std::find(next.begin(), next.end(), e.target) == next.end()) next.push_back(e.target);
      }
    }
    close_epsilon(a, next);
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  return std::any_of(cur.begin(), cur.end(), [&](State s) { return a.is_accepting(s); });
}

bool equivalent(const Automaton& a, const Automaton& b) {
  require_same(a, b);
  Automaton ma = minimize(a), mb = minimize(b);
  if (ma.num_states() != mb.num_states() || ma.start() != mb.start()) return false;
  for (State s = 0; s < ma.num_states(); ++s) {
    if (ma.is_accepting(s) != mb.is_accepting(s) || ma.edges(s) != mb.edges(s)) return false;
  }
  return true;
}

std::vector<SymbolString> enumerate(const Automaton& a, std::size_t maxlen) {
  Automaton d = trim(a.deterministic() ? a : determinize(a));
  std::vector<SymbolString> out;
  const std::size_t n = d.num_states();
  if (n == 0 || is_empty(d)) return out;
  // Distance to the nearest accepting state.
  std::vector<std::size_t> dist(n, static_cast<std::size_t>(-1));
  std::vector<std::vector<State>> rev(n);
  std::deque<State> queue;
  for (State s = 0; s < n; ++s) {
    for (const auto& e : d.edges(s)) rev[e.target].push_back(s);
    if (d.is_accepting(s)) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (State p : rev[s]) {
      if (dist[p] == static_cast<std::size_t>(-1)) {
        dist[p] = dist[s] + 1;
        queue.push_back(p);
      }
    }
  }
  SymbolString cur;
  struct Frame {
    State s;
    std::size_t next_edge;
  };
  std::vector<Frame> stack{{d.start(), 0}};
  if (d.is_accepting(d.start())) out.push_back(cur);
  while (!stack.empty()) {
    auto& top = stack.back();
    const auto& edges = d.edges(top.s);
    if (top.next_edge == edges.size()) {
      stack.pop_back();
      if (!cur.empty()) cur.pop_back();
      continue;
    }
    const Edge e = edges[top.next_edge++];
    if (cur.size() + 1 + dist[e.target] > maxlen) continue;
    cur.push_back(e.symbol);
    if (d.is_accepting(e.target)) out.push_back(cur);
    stack.push_back({e.target, 0});
  }
  return out;
}

Automaton universal(const AlphabetPtr& alphabet) {
  Automaton out(alphabet);
  State s = out.add_state(true);
  for (Symbol x = 0; x < alphabet->size(); ++x) out.add_edge(s, x, s);
  out.set_start(s);
  return out;
}

Automaton literal(const AlphabetPtr& alphabet, const SymbolString& w) {
  Automaton out(alphabet);
  State s = out.add_state(w.empty());
  out.set_start(s);
  for (std::size_t k = 0; k < w.size(); ++k) {
    State t = out.add_state(k + 1 == w.size());
    out.add_edge(s, w[k], t);
    s = t;
  }
  return out;
}

Automaton empty_language(const AlphabetPtr& alphabet) {
  Automaton out(alphabet);
  out.set_start(out.add_state(false));
  return out;
}

}  // namespace dlga
