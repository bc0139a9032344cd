#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dlga/codec.hpp"
#include "dlga/fsa.hpp"
#include "dlga/literals.hpp"
#include "dlga/multiplier.hpp"
#include "dlga/verify.hpp"

namespace {

using namespace dlga;

GroupParams make(std::int64_t q, int d) {
  std::vector<std::int64_t> l;
  for (int k = 1; k < d; ++k) l.push_back(k);
  return GroupParams::validate(q, d, l);
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& example) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first = example();
  }
  Outcome outcome(const std::string& extra = "") const {
    std::ostringstream os;
    os << "checked=" << checked << " failures=" << failures;
    if (!extra.empty()) os << " " << extra;
    if (failures) os << " first=\"" << first << "\"";
    return {failures == 0, os.str()};
  }
};

Outcome absorb(const std::vector<CheckReport>& reports, const std::string& extra = "") {
  Tally t;
  for (const auto& r : reports) {
    t.checked += r.checked;
    t.failures += r.passed ? 0 : std::max<std::uint64_t>(r.failures, 1);
    if (!r.passed && t.first.empty()) t.first = format_report(r);
  }
  return t.outcome(extra);
}

Outcome decomposition_round_trip() {
  const PolyRing ring(make(5, 3));
  std::mt19937_64 rng(101);
  Tally t;
  for (int k = 0; k < 1000; ++k) {
    const RationalForm x = random_rational(ring, rng, 8, 4);
    const Decomposition d = ring.decompose(x);
    t.check(d.is_canonical() && ring.recompose(d) == x, [&] { return ring.to_string(x); });
  }
  return t.outcome();
}

Outcome worked_decomposition() {
  const PolyRing ring(make(5, 3));
  const RationalForm x = ring.mul(ring.pole_power(0, 1), ring.pole_power(1, 1));
  const Decomposition d = ring.decompose(x);
  // Clearing denominators: 1 = 1 * (t + 2) + 4 * (t + 1) over Z_5.
  const bool ok = d == Decomposition{{{1}, {4}, {}}} &&
                  ring.add(ring.pole_power(0, 1), ring.pole_power(1, 1, 4)) == x;
  return {ok, "decompose=" + ring.to_string(d)};
}

Outcome group_axioms() {
  Tally t;
  for (std::int64_t q : {3, 5}) {
    const Group g(make(q, 3));
    std::mt19937_64 rng(200 + static_cast<unsigned>(q));
    for (int k = 0; k < 1000; ++k) {
      const GroupElement a = random_element(g, rng), b = random_element(g, rng), c = random_element(g, rng);
      const bool ok = g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)) &&
                      g.multiply(a, g.identity()) == a && g.multiply(g.identity(), a) == a &&
                      g.is_identity(g.multiply(a, g.invert(a))) && g.is_identity(g.multiply(g.invert(a), a));
      t.check(ok, [&] { return g.to_string(a) + " ; " + g.to_string(b) + " ; " + g.to_string(c); });
    }
  }
  return t.outcome();
}

Outcome sandwich(const Group& g, const Ball& ball) {
  Tally t;
  for (std::size_t k = 0; k < ball.size(); ++k) {
    const std::int64_t dt = g.tree_distance(ball.elements[k]).dT, l = ball.length[k];
    t.check(dt <= 2 * l && l <= 2 * dt, [&] { return g.to_string(ball.elements[k]); });
  }
  return t.outcome("ball=" + std::to_string(ball.size()));
}

Outcome quasigeodesic(const Codec& codec, const Ball& ball) {
  const Group& g = codec.group();
  Tally t;
  for (const auto& e : ball.elements) {
    const auto len = static_cast<std::int64_t>(codec.encode(e).size());
    t.check(len <= 2 * g.tree_distance(e).dT + 2 * g.rank() - 2, [&] { return codec.to_string(codec.encode(e), true); });
  }
  return t.outcome("ball=" + std::to_string(ball.size()));
}

Outcome codec_bijection(const Codec& codec, const Ball& ball) {
  const Group& g = codec.group();
  Tally t;
  std::set<SymbolString> images;
  for (const auto& e : ball.elements) {
    const SymbolString w = codec.encode(e);
    t.check(codec.decode(w) == e && images.insert(w).second, [&] { return g.to_string(e); });
  }
  std::mt19937_64 rng(600);
  for (int k = 0; k < 1000; ++k) {
    const GroupElement e = random_element(g, rng, 4, 4);
    t.check(codec.decode(codec.encode(e)) == e, [&] { return g.to_string(e); });
  }
  std::size_t strings = 0;
  for (const auto& w : enumerate(codec.nf_automaton(), 8)) {
    ++strings;
    bool ok = false;
    try {
      ok = codec.encode(codec.decode(w)) == w;
    } catch (const MalformedString&) {
    }
    t.check(ok, [&] { return codec.to_string(w, true); });
  }
  return t.outcome("accepted_strings=" + std::to_string(strings));
}

Outcome soundness(Verifier& ver) {
  std::vector<CheckReport> rs;
  std::ostringstream states;
  for (const Generator& s : ver.group().base_generators()) {
    rs.push_back(ver.check_soundness(s, 9));
    states << (states.tellp() > 0 ? "," : "") << ver.machine(s).num_states();
  }
  return absorb(rs, "states=" + states.str());
}

Outcome completeness(Verifier& ver, const std::vector<Generator>& gens, int radius) {
  std::vector<CheckReport> rs;
  for (const Generator& s : gens) rs.push_back(ver.check_completeness(s, radius));
  return absorb(rs, "generators=" + std::to_string(gens.size()) + " radius=" + std::to_string(radius));
}

// The code of g s through a freshly swapped machine, paired with the code of g.
Outcome inverse_pairs(Verifier& ver) {
  const Codec& codec = ver.codec();
  const Group& g = codec.group();
  const Ball& ball = ver.ball(4);
  Tally t;
  for (const Generator& s : g.base_generators()) {
    const Automaton swapped = swap_tracks(ver.machine(s));
    for (const auto& e : ball.elements) {
      const SymbolString u = codec.encode(e), v = codec.encode(g.apply(e, s));
      t.check(accepts(swapped, convolve(codec.alphabet().conv(), v, u)),
              [&] { return to_string(s) + " at " + codec.to_string(u, true); });
    }
  }
  return t.outcome();
}

Outcome recurrences() {
  Tally t;
  for (std::int64_t q : {3, 5}) {
    const PolyRing ring(make(q, 3));
    const Group group(make(q, 3));
    const auto& zq = ring.zq();
    std::mt19937_64 rng(1000 + static_cast<unsigned>(q));
    for (const Generator& s : group.base_generators()) {
      const MachineConstants c = derive_constants(ring, s);
      for (int n = 0; n < ring.rank(); ++n) {
        if (n == s.i) continue;
        const TrackConstants& tc = c.tracks[static_cast<std::size_t>(n)];
        for (int k = 0; k < 1000; ++k) {
          std::vector<Residue> b(1 + rng() % 8);
          for (auto& x : b) x = static_cast<Residue>(rng() % static_cast<std::uint64_t>(q));
          // Direct sum from the truncated expansion of F b at block n.
          const std::vector<Residue> direct = direct_block(tc, zq, b);
          const std::vector<Residue> rec = recurrence_block(tc, zq, b, direct.empty() ? 0 : direct[0]);
          // Exact arithmetic on the block alone.
          GroupElement e = group.identity();
          e.rprime.parts[static_cast<std::size_t>(n)] = b;
          while (!e.rprime.parts[static_cast<std::size_t>(n)].empty() &&
                 e.rprime.parts[static_cast<std::size_t>(n)].back() == 0)
            e.rprime.parts[static_cast<std::size_t>(n)].pop_back();
          const GroupElement h = group.apply(e, s);
          std::vector<Residue> exact = h.rprime.parts[static_cast<std::size_t>(n)];
          std::vector<Residue> trimmed = direct;
          while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
          t.check(rec == direct && recurrence_terminal_ok(tc, zq, b, direct) && trimmed == exact,
                  [&] { return to_string(s) + " n=" + std::to_string(n + 1); });
        }
      }
    }
  }
  return t.outcome();
}

Outcome first_coefficient_formula() {
  const Group group(make(5, 3));
  const PolyRing& ring = group.ring();
  const auto gens = group.base_generators();
  std::vector<MachineConstants> consts;
  for (const Generator& s : gens) consts.push_back(derive_constants(ring, s));
  std::mt19937_64 rng(1100);
  Tally t;
  for (int k = 0; k < 500; ++k) {
    const std::size_t which = rng() % gens.size();
    const GroupElement g = random_element(group, rng, 3, 4);
    const Generator& s = gens[which];
    // Exact product, then its (t + l_i)^{-1} coefficient read two ways.
    const GroupElement h = group.multiply(g, group.element_of(s));
    const auto& part = h.rprime.parts[static_cast<std::size_t>(s.i)];
    const Residue actual = part.empty() ? 0 : part[0];
    const int order = static_cast<int>(part.size()) + 2;
    const Residue series = ring.series_expand(ring.recompose(h.rprime), s.i, order).at(-1);
    t.check(first_coefficient(consts[which], ring.zq(), g) == actual && series == actual,
            [&] { return to_string(s) + " on " + group.to_string(g); });
  }
  return t.outcome();
}

Outcome mutation(Verifier& ver) {
  std::vector<CheckReport> rs;
  std::size_t slots = 0;
  for (const Generator& s : ver.group().base_generators()) {
    rs.push_back(ver.check_mutation(s, 9));
    slots += rs.back().checked;
  }
  return absorb(rs, "slots=" + std::to_string(slots));
}

Outcome determinism() {
  Tally t;
  std::size_t largest = 0;
  for (std::int64_t q : {3, 5}) {
    const Codec a(Group(make(q, 3)));
    const Codec b(Group(make(q, 3)));
    const MultiplierBuilder ba(a), bb(b);
    t.check(export_text(a.nf_automaton()) == export_text(b.nf_automaton()), [] { return std::string("nf"); });
    for (const Generator& s : a.group().generators()) {
      const Automaton ma = ba.multiplier(s), mb = bb.multiplier(s);
      largest = std::max(largest, ma.num_states());
      t.check(export_text(ma) == export_text(mb) && export_dot(ma) == export_dot(mb) && ma.num_states() < 1000000,
              [&] { return "q=" + std::to_string(q) + " " + to_string(s); });
    }
  }
  return t.outcome("max_states=" + std::to_string(largest));
}

}  // namespace

int main() {
  const Codec c3(Group(make(3, 3)));
  Verifier v3(c3, {}, 1);
  const Codec c5d4(Group(make(5, 4)));
  Verifier v4(c5d4, {}, 1);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "decomposition round trip", decomposition_round_trip},
      {2, "worked partial fraction", worked_decomposition},
      {3, "group axioms", group_axioms},
      {4, "tree distance sandwich", [&] { return sandwich(c3.group(), v3.ball(5)); }},
      {5, "normal form length bound", [&] { return quasigeodesic(c3, v3.ball(5)); }},
      {6, "codec bijection", [&] { return codec_bijection(c3, v3.ball(5)); }},
      {7, "multiplier soundness", [&] { return soundness(v3); }},
      {8, "multiplier completeness", [&] { return completeness(v3, c3.group().base_generators(), 4); }},
      {9, "inverse generators", [&] { return inverse_pairs(v3); }},
      {10, "recurrence versus direct sum", recurrences},
      {11, "first coefficient formula", first_coefficient_formula},
      {12, "mutation sentinel", [&] { return mutation(v3); }},
      {13, "rank four smoke", [&] { return completeness(v4, c5d4.group().generators(), 2); }},
      {14, "determinism", determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s: %s (%.2fs) %s\n", c.id, o.passed ? "PASS" : "FAIL", c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.passed ? 0 : 1;
  }
  std::printf("acceptance: %d/%zu passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
