#include "dlga/multiplier.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "dlga/errors.hpp"
#include "dlga/segment_sync.hpp"

namespace dlga {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("machine constant check failed: " + what);
}

RationalForm generator_factor(const PolyRing& ring, const Generator& s) {
  RationalForm f = ring.pole_power(s.i, 1);
  if (s.kind == GenKind::Type2) f = ring.mul(f, ring.pole_power(s.j, -1));
  return f;
}

}  // namespace

MachineConstants derive_constants(const PolyRing& ring, const Generator& input) {
  const Generator s = input.base();
  const auto& zq = ring.zq();
  const int d = ring.rank();
  const RationalForm f = generator_factor(ring, s);
  MachineConstants c;
  c.s = s;
  c.tracks.resize(static_cast<std::size_t>(d));
  c.base.assign(static_cast<std::size_t>(d), 0);
  c.cycle.assign(static_cast<std::size_t>(d), 0);

  for (int n = 0; n < d; ++n) {
    if (n == s.i) continue;
    const LaurentWindow w = ring.series_expand(f, n, 4);
    expect(w.min_degree >= 0, "generator factor is regular away from block i");
    auto& t = c.tracks[static_cast<std::size_t>(n)];
    t.used = true;
    t.f0 = w.at(0);
    t.f1 = w.at(1);
    expect(zq.is_unit(t.f1), "f1 is a unit");
    t.rho = zq.mul(w.at(2), zq.inverse(t.f1));
    expect(zq.is_unit(t.rho), "geometric ratio is a unit");
    expect(w.at(3) == zq.mul(t.rho, w.at(2)) && w.at(4) == zq.mul(t.rho, w.at(3)), "geometric tail");
    expect(t.f0 == 0 || zq.is_unit(t.f0), "f0 is zero or a unit");
    t.lead = t.f0 == 0;

    const RationalForm unit_piece = n + 1 < d ? ring.pole_power(n, 1) : ring.t_power(1);
    c.base[static_cast<std::size_t>(n)] = ring.series_expand(unit_piece, s.i, 1).at(0);
    expect(zq.is_unit(c.base[static_cast<std::size_t>(n)]), "partial-sum base is a unit");
    c.cycle[static_cast<std::size_t>(n)] = mult_order(c.base[static_cast<std::size_t>(n)], ring.params());
  }

  const LaurentWindow w = ring.series_expand(f, s.i, 3);
  expect(w.min_degree >= -1, "simple pole at block i");
  c.carry = w.at(-1);
  c.keep = w.at(0);
  expect(zq.is_unit(c.carry), "carry is a unit");
  expect(w.at(1) == 0 && w.at(2) == 0, "no higher terms at block i");

  c.prefix_delta.assign(static_cast<std::size_t>(d - 1), 0);
  c.prefix_delta[static_cast<std::size_t>(s.i)] = 1;
  if (s.kind == GenKind::Type2) c.prefix_delta[static_cast<std::size_t>(s.j)] = -1;
  return c;
}

std::vector<std::string> constant_slots(const MachineConstants& c) {
  std::vector<std::string> out;
  for (std::size_t n = 0; n < c.tracks.size(); ++n) {
    if (!c.tracks[n].used) continue;
    const std::string k = std::to_string(n + 1);
    out.push_back("f0[" + k + "]");
    out.push_back("f1[" + k + "]");
    out.push_back("rho[" + k + "]");
    out.push_back("base[" + k + "]");
  }
  out.push_back("carry");
  out.push_back("keep");
  return out;
}

MachineConstants mutate_constant(const MachineConstants& input, std::size_t slot, const PolyRing& ring) {
  const auto& zq = ring.zq();
  auto corrupt = [&](Residue v) {
    if (v == 0) return Residue{1 % zq.modulus()};
    Residue n = zq.neg(v);
    return n != v ? n : zq.add(v, 1);
  };
  MachineConstants c = input;
  std::size_t k = 0;
  for (std::size_t n = 0; n < c.tracks.size(); ++n) {
    auto& t = c.tracks[n];
    if (!t.used) continue;
    Residue* fields[] = {&t.f0, &t.f1, &t.rho, &c.base[n]};
    for (Residue* f : fields) {
      if (k++ == slot) {
        *f = corrupt(*f);
        if (f == &c.base[n]) c.cycle[n] = zq.is_unit(*f) ? mult_order(*f, ring.params()) : 1;
        return c;
      }
    }
  }
  if (k++ == slot) {
    c.carry = corrupt(c.carry);
    return c;
  }
  if (k++ == slot) {
    c.keep = corrupt(c.keep);
    return c;
  }
  throw std::out_of_range("mutate_constant: no such slot");
}

std::vector<Residue> direct_block(const TrackConstants& t, const ModRing& zq, const std::vector<Residue>& b) {
  const std::size_t len = b.size();
  std::vector<Residue> c(len, 0);
  for (std::size_t r = 0; r < len; ++r) {
    Residue fx = t.f0;
    for (std::size_t x = 0; r + x < len; ++x) {
      c[r] = zq.add(c[r], zq.mul(fx, b[r + x]));
      fx = x == 0 ? t.f1 : zq.mul(fx, t.rho);
    }
  }
  return c;
}

std::vector<Residue> recurrence_block(const TrackConstants& t, const ModRing& zq, const std::vector<Residue>& b,
                                      Residue c1) {
  std::vector<Residue> c;
  if (b.empty()) return c;
  c.push_back(c1);
  const Residue rinv = zq.inverse(t.rho);
  const Residue next_coeff = zq.sub(t.f1, zq.mul(t.rho, t.f0));
  for (std::size_t r = 0; r + 1 < b.size(); ++r) {
    Residue v = zq.sub(zq.sub(c[r], zq.mul(t.f0, b[r])), zq.mul(next_coeff, b[r + 1]));
    c.push_back(zq.mul(rinv, v));
  }
  return c;
}

bool recurrence_terminal_ok(const TrackConstants& t, const ModRing& zq, const std::vector<Residue>& b,
                            const std::vector<Residue>& c) {
  if (b.empty()) return c.empty();
  const std::size_t len = b.size();
  if (c.size() != len) return false;
  if (c[len - 1] != zq.mul(t.f0, b[len - 1])) return false;
  if (t.lead && len >= 2) return c[len - 2] == zq.mul(t.f1, b[len - 1]);
  return true;
}

Residue first_coefficient(const MachineConstants& c, const ModRing& zq, const GroupElement& g) {
  const auto i = static_cast<std::size_t>(c.s.i);
  const auto& parts = g.rprime.parts;
  Residue sum = 0;
  for (std::size_t n = 0; n < parts.size(); ++n) {
    if (n == i) continue;
    const bool poly = n + 1 == parts.size();
    Residue pw = poly ? 1 : c.base[n];
    for (Residue beta : parts[n]) {
      sum = zq.add(sum, zq.mul(beta, pw));
      pw = zq.mul(pw, c.base[n]);
    }
  }
  Residue first = parts[i].empty() ? 0 : parts[i][0];
  return zq.add(zq.add(c.s.b, zq.mul(c.keep, first)), zq.mul(c.carry, sum));
}

// ---------------------------------------------------------------------------

MultiplierBuilder::MultiplierBuilder(const Codec& codec, BuildOptions options) : codec_(codec), options_(options) {}

std::size_t MultiplierBuilder::lag_for(const Generator& s) const {
  if (options_.max_lag) return options_.max_lag;
  return s.kind == GenKind::Type1 ? 2 : 3;
}

Automaton MultiplierBuilder::prefix_block_machine(int delta) const {
  const auto& na = codec_.alphabet();
  const auto& conv = na.conv();
  const Symbol pad = conv->pad();
  Automaton a(conv);
  if (delta == 0) {
    const State s = a.add_state(true), xs = a.add_state(true), ys = a.add_state(true);
    a.add_edge(s, conv->pair(na.x(), na.x()), xs);
    a.add_edge(xs, conv->pair(na.x(), na.x()), xs);
    a.add_edge(s, conv->pair(na.y(), na.y()), ys);
    a.add_edge(ys, conv->pair(na.y(), na.y()), ys);
    a.set_start(s);
    return a;
  }
  if (delta < 0) return swap_tracks(prefix_block_machine(-delta));
  if (delta != 1) throw std::invalid_argument("prefix_block_machine: delta must be -1, 0 or 1");
  // x^n -> x^{n+1} and y^n -> y^{n-1}.
  const State s = a.add_state(false), xs = a.add_state(false), ys = a.add_state(false), fin = a.add_state(true);
  a.add_edge(s, conv->pair(na.x(), na.x()), xs);
  a.add_edge(xs, conv->pair(na.x(), na.x()), xs);
  a.add_edge(s, conv->pair(pad, na.x()), fin);
  a.add_edge(xs, conv->pair(pad, na.x()), fin);
  a.add_edge(s, conv->pair(na.y(), na.y()), ys);
  a.add_edge(ys, conv->pair(na.y(), na.y()), ys);
  a.add_edge(s, conv->pair(na.y(), pad), fin);
  a.add_edge(ys, conv->pair(na.y(), pad), fin);
  a.set_start(s);
  return a;
}

namespace {

SegmentSpec letters_segment(const NfAlphabet& na, SegmentEnd end) {
  SegmentSpec spec{end, std::vector<char>(na.tokens()->size(), 0)};
  spec.content[na.x()] = spec.content[na.y()] = 1;
  return spec;
}

SegmentSpec digits_segment(const NfAlphabet& na, SegmentEnd end) {
  SegmentSpec spec{end, std::vector<char>(na.tokens()->size(), 0)};
  for (Symbol s = 0; s < na.hash(); ++s) spec.content[s] = 1;
  return spec;
}

}  // namespace

Automaton MultiplierBuilder::prefix_pair_machine(const Generator& s) const {
  const auto& na = codec_.alphabet();
  const int blocks = codec_.group().rank() - 1;
  SyncScheme scheme;
  scheme.separator = na.hash();
  std::vector<Automaton> machines;
  const int sign = s.inverse ? -1 : 1;
  for (int k = 0; k < blocks; ++k) {
    scheme.segments.push_back(letters_segment(na, k + 1 < blocks ? SegmentEnd::Hash : SegmentEnd::EndOfString));
    int delta = k == s.i ? 1 : (s.kind == GenKind::Type2 && k == s.j ? -1 : 0);
    machines.push_back(prefix_block_machine(sign * delta));
  }
  return minimize(synchronize_segments(na.conv(), scheme, machines, lag_for(s), options_.cap), options_.cap);
}

Automaton MultiplierBuilder::coeff_track_machine(int n, const MachineConstants& c) const {
  const auto& t = c.tracks.at(static_cast<std::size_t>(n));
  if (!t.used) throw std::invalid_argument("coeff_track_machine: block i has its own machine");
  const auto& zq = codec_.group().params().ring();
  const auto& conv = codec_.alphabet().conv();
  const Symbol pad = conv->pad();
  const Residue q = zq.modulus();
  const Residue rinv = zq.inverse(t.rho);
  const Residue next_coeff = zq.sub(t.f1, zq.mul(t.rho, t.f0));

  Automaton a(conv);
  const State start = a.add_state(true);
  a.set_start(start);
  // T(c, b): last pair read was (b | c).
  std::vector<State> tstate(static_cast<std::size_t>(q) * q);
  for (Residue cv = 0; cv < q; ++cv) {
    for (Residue bv = 0; bv < q; ++bv) {
      const bool acc = !t.lead && cv == zq.mul(t.f0, bv);
      tstate[cv * q + bv] = a.add_state(acc);
    }
  }
  const State fin = a.add_state(true);
  for (Residue bv = 0; bv < q; ++bv) {
    for (Residue cv = 0; cv < q; ++cv) a.add_edge(start, conv->pair(bv, cv), tstate[cv * q + bv]);
    if (t.lead) a.add_edge(start, conv->pair(bv, pad), fin);
  }
  for (Residue cv = 0; cv < q; ++cv) {
    for (Residue bv = 0; bv < q; ++bv) {
      const State from = tstate[cv * q + bv];
      for (Residue nb = 0; nb < q; ++nb) {
        Residue nc = zq.mul(rinv, zq.sub(zq.sub(cv, zq.mul(t.f0, bv)), zq.mul(next_coeff, nb)));
        a.add_edge(from, conv->pair(nb, nc), tstate[nc * q + nb]);
        if (t.lead && cv == zq.mul(t.f1, nb)) a.add_edge(from, conv->pair(nb, pad), fin);
      }
    }
  }
  return a;
}

Automaton MultiplierBuilder::i_track_machine(const MachineConstants& c) const {
  const auto& zq = codec_.group().params().ring();
  const auto& conv = codec_.alphabet().conv();
  const Symbol pad = conv->pad();
  const Residue q = zq.modulus();
  Automaton a(conv);
  const State start = a.add_state(true);
  a.set_start(start);
  std::vector<State> prev(q);
  for (Residue b = 0; b < q; ++b) prev[b] = a.add_state(false);
  const State fin = a.add_state(true);
  for (Residue b = 0; b < q; ++b) {
    for (Residue xi = 0; xi < q; ++xi) a.add_edge(start, conv->pair(b, xi), prev[b]);
  }
  for (Residue xi = 0; xi < q; ++xi) a.add_edge(start, conv->pair(pad, xi), fin);
  for (Residue bp = 0; bp < q; ++bp) {
    for (Residue b = 0; b < q; ++b) {
      a.add_edge(prev[bp], conv->pair(b, zq.add(zq.mul(c.carry, bp), zq.mul(c.keep, b))), prev[b]);
    }
    a.add_edge(prev[bp], conv->pair(pad, zq.mul(c.carry, bp)), fin);
  }
  return a;
}

Automaton MultiplierBuilder::length_relation_machine(int n, const MachineConstants& c) const {
  const auto& conv = codec_.alphabet().conv();
  const Symbol pad = conv->pad();
  const Residue q = codec_.group().params().q();
  Automaton a(conv);
  if (n == c.s.i) {
    const State s = a.add_state(true), mid = a.add_state(false), fin = a.add_state(true);
    for (Residue u = 0; u < q; ++u) {
      for (Residue v = 0; v < q; ++v) {
        a.add_edge(s, conv->pair(u, v), mid);
        a.add_edge(mid, conv->pair(u, v), mid);
      }
      a.add_edge(s, conv->pair(pad, u), fin);
      a.add_edge(mid, conv->pair(pad, u), fin);
    }
    a.set_start(s);
    return a;
  }
  const bool lead = c.tracks.at(static_cast<std::size_t>(n)).lead;
  const State s = a.add_state(true);
  const State fin = lead ? a.add_state(true) : s;
  for (Residue u = 0; u < q; ++u) {
    for (Residue v = 0; v < q; ++v) a.add_edge(s, conv->pair(u, v), s);
    if (lead) a.add_edge(s, conv->pair(u, pad), fin);
  }
  a.set_start(s);
  return a;
}

Automaton MultiplierBuilder::first_coeff_machine(const MachineConstants& c) const {
  const auto& na = codec_.alphabet();
  const auto& conv = na.conv();
  const auto& zq = codec_.group().params().ring();
  const int d = codec_.group().rank();
  const int i = c.s.i;
  const int first_suffix = d - 2;
  const int hash_cap = 2 * d - 2;
  const Symbol pad = conv->pad();

  // Top: hashes seen, position in the current block modulo its cycle, sum.
  // Bottom: hashes seen (saturating once past block i), captured coefficient.
  using Key = std::tuple<int, unsigned, Residue, int, Residue, bool>;
  std::map<Key, State> ids;
  std::vector<Key> pending;
  Automaton a(conv);
  auto intern = [&](const Key& k) {
    auto [it, fresh] = ids.emplace(k, 0);
    if (fresh) {
      it->second = a.add_state(std::get<2>(k) == std::get<4>(k));
      if (a.num_states() > options_.cap) throw StateBlowup("first-coefficient machine exceeded state cap");
      pending.push_back(k);
    }
    return it->second;
  };
  auto top_step = [&](int& h, unsigned& pos, Residue& sigma, Symbol tok) {
    if (tok == na.hash()) {
      h = std::min(h + 1, hash_cap);
      pos = 0;
      return;
    }
    if (!na.is_digit(tok) || h < first_suffix) return;
    const int n = h - first_suffix;
    if (n >= d) return;
    if (n == i) {
      if (pos == 0) sigma = zq.add(sigma, zq.mul(c.keep, tok));
      pos = 1;
      return;
    }
    const auto nn = static_cast<std::size_t>(n);
    const bool poly = n + 1 == d;
    const auto e = static_cast<std::int64_t>(poly ? pos : pos + 1);
    sigma = zq.add(sigma, zq.mul(c.carry, zq.mul(tok, zq.pow(c.base[nn], e))));
    pos = (pos + 1) % std::max(1u, c.cycle[nn]);
  };
  const int bottom_done = first_suffix + i + 1;
  auto bottom_step = [&](int& h, Residue& psi, bool& seen, Symbol tok) {
    if (h >= bottom_done) return;
    if (tok == na.hash()) {
      ++h;
      return;
    }
    if (na.is_digit(tok) && h == first_suffix + i && !seen) {
      psi = tok;
      seen = true;
    }
  };

  a.set_start(intern(Key{0, 0u, c.s.b, 0, Residue{0}, false}));
  while (!pending.empty()) {
    const Key k = pending.back();
    pending.pop_back();
    const State from = ids.at(k);
    for (Symbol sym = 0; sym < conv->size(); ++sym) {
      auto [h, pos, sigma, hb, psi, seen] = k;
      if (conv->top(sym) != pad) top_step(h, pos, sigma, conv->top(sym));
      if (conv->bottom(sym) != pad) bottom_step(hb, psi, seen, conv->bottom(sym));
      a.add_edge(from, sym, intern(Key{h, pos, sigma, hb, psi, seen}));
    }
  }
  return a;
}

Automaton MultiplierBuilder::well_formed_pairs() const {
  const auto& conv = codec_.alphabet().conv();
  const Automaton nf = codec_.nf_automaton();
  return minimize(intersect(lift_track(nf, conv, 0), lift_track(nf, conv, 1)));
}

Automaton MultiplierBuilder::multiplier(const MachineConstants& c) const {
  const auto& na = codec_.alphabet();
  const int d = codec_.group().rank();
  const std::size_t cap = options_.cap;
  SyncScheme scheme;
  scheme.separator = na.hash();
  std::vector<Automaton> machines;
  for (int k = 0; k + 1 < d; ++k) {
    scheme.segments.push_back(letters_segment(na, k + 2 < d ? SegmentEnd::Hash : SegmentEnd::Soft));
    machines.push_back(prefix_block_machine(c.prefix_delta[static_cast<std::size_t>(k)]));
  }
  for (int n = 0; n < d; ++n) {
    scheme.segments.push_back(digits_segment(na, n + 1 < d ? SegmentEnd::Hash : SegmentEnd::EndOfString));
    Automaton block = n == c.s.i ? i_track_machine(c) : coeff_track_machine(n, c);
    machines.push_back(minimize(intersect(block, length_relation_machine(n, c), cap), cap));
  }
  Automaton seg = minimize(synchronize_segments(na.conv(), scheme, machines, lag_for(c.s), cap), cap);
  Automaton checked = minimize(intersect(seg, well_formed_pairs(), cap), cap);
  return minimize(intersect(checked, first_coeff_machine(c), cap), cap);
}

Automaton MultiplierBuilder::multiplier(const Generator& s) const {
  const MachineConstants c = derive_constants(codec_.group().ring(), s);
  Automaton m = multiplier(c);
  return s.inverse ? minimize(swap_tracks(m), options_.cap) : m;
}

// ---------------------------------------------------------------------------

SymbolString apply_multiplier(const Automaton& input, const SymbolString& u, std::size_t slack) {
  const Automaton m = input.deterministic() ? input : determinize(input);
  const auto& conv = m.alphabet();
  const Symbol pad = conv->pad();
  const Symbol base_size = pad;
  const std::size_t limit = u.size() + slack;

  // Accepting completions from (step, state, bottom ended), saturating at 2.
  std::unordered_map<std::uint64_t, int> memo;
  auto key = [](std::size_t k, State s, bool ended) {
    return (static_cast<std::uint64_t>(k) << 33) | (static_cast<std::uint64_t>(s) << 1) | (ended ? 1u : 0u);
  };
  auto top_at = [&](std::size_t k) { return k < u.size() ? u[k] : pad; };

  std::function<int(std::size_t, State, bool)> count = [&](std::size_t k, State s, bool ended) -> int {
    auto it = memo.find(key(k, s, ended));
    if (it != memo.end()) return it->second;
    int total = (k >= u.size() && m.is_accepting(s)) ? 1 : 0;
    if (k < limit) {
      const Symbol t = top_at(k);
      for (Symbol b = 0; b <= base_size && total < 2; ++b) {
        if (b == pad ? (t == pad) : ended) continue;
        const State next = m.step(s, conv->pair(t, b));
        if (next == kNoState) continue;
        total = std::min(2, total + count(k + 1, next, ended || b == pad));
      }
    }
    memo[key(k, s, ended)] = total;
    return total;
  };

  const int n = count(0, m.start(), false);
  if (n == 0) throw NoImage("no image string for the input");
  if (n > 1) throw AmbiguousImage("more than one image string for the input");

  SymbolString v;
  std::size_t k = 0;
  State s = m.start();
  bool ended = false;
  for (;;) {
    if (k >= u.size() && m.is_accepting(s)) break;
    const Symbol t = top_at(k);
    bool moved = false;
    for (Symbol b = 0; b <= base_size; ++b) {
      if (b == pad ? (t == pad) : ended) continue;
      const State next = m.step(s, conv->pair(t, b));
      if (next == kNoState) continue;
      if (count(k + 1, next, ended || b == pad) == 1) {
        if (b != pad) v.push_back(b);
        ended = ended || b == pad;
        s = next;
        ++k;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("apply_multiplier: lost the unique path");
  }
  return v;
}

}  // namespace dlga
