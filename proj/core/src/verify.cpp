#include "dlga/verify.hpp"

#include <sstream>

#include "dlga/errors.hpp"
#include "dlga/literals.hpp"

namespace dlga {

namespace {

constexpr std::size_t kMaxExamples = 5;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Residue> random_block(std::mt19937_64& rng, Residue q, int max_len, int min_len = 0) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  std::uniform_int_distribution<Residue> digit(0, q - 1), nonzero(1, q - 1);
  std::vector<Residue> b(static_cast<std::size_t>(len_dist(rng)));
  for (auto& x : b) x = digit(rng);
  if (!b.empty()) b.back() = nonzero(rng);
  return b;
}

CheckReport begin_report(std::string name, std::uint64_t seed) {
  CheckReport r;
  r.name = std::move(name);
  r.seed = seed;
  return r;
}

std::string join(const std::vector<Residue>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return "[" + out + "]";
}

}  // namespace

void CheckReport::fail(std::string example) {
  passed = false;
  ++failures;
  if (examples.size() < kMaxExamples) examples.push_back(std::move(example));
}

std::string format_report(const CheckReport& r) {
  std::ostringstream os;
  os << "check=" << r.name << " status=" << (r.passed ? "pass" : "FAIL") << " checked=" << r.checked
     << " failures=" << r.failures << " seed=" << r.seed;
  if (!r.detail.empty()) os << " detail=\"" << r.detail << '"';
  for (const auto& e : r.examples) os << " example=\"" << e << '"';
  return os.str();
}

GroupElement random_element(const Group& group, std::mt19937_64& rng, int max_exp, int max_len) {
  GroupElement g = group.identity();
  std::uniform_int_distribution<std::int64_t> exp(-max_exp, max_exp);
  for (auto& m : g.m) m = exp(rng);
  for (auto& part : g.rprime.parts) part = random_block(rng, group.params().q(), max_len);
  return g;
}

RationalForm random_rational(const PolyRing& ring, std::mt19937_64& rng, int max_degree, int max_exp) {
  std::uniform_int_distribution<int> deg(-1, max_degree), e(0, max_exp);
  std::uniform_int_distribution<Residue> digit(0, ring.params().q() - 1);
  RationalForm x = ring.zero();
  x.numerator.coeffs.resize(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& c : x.numerator.coeffs) c = digit(rng);
  for (auto& d : x.denom) d = e(rng);
  return ring.reduce(std::move(x));
}

Word random_word(const Group& group, std::mt19937_64& rng, int max_length) {
  const auto gens = group.generators();
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& s : w) s = gens[pick(rng)];
  return w;
}

Verifier::Verifier(const Codec& codec, BuildOptions options, std::uint64_t seed)
    : codec_(codec), builder_(codec, options), seed_(seed) {}

std::mt19937_64 Verifier::rng_for(const std::string& check) const { return std::mt19937_64(seed_ ^ fnv1a(check)); }

const Automaton& Verifier::machine(const Generator& s) {
  const std::string key = to_string(s);
  auto it = machines_.find(key);
  if (it != machines_.end()) return it->second;
  Automaton m = s.inverse ? minimize(swap_tracks(machine(s.base()))) : builder_.multiplier(s);
  return machines_.emplace(key, std::move(m)).first->second;
}

const Ball& Verifier::ball(int radius) {
  auto& slot = balls_[radius];
  if (!slot) slot = std::make_unique<Ball>(group().ball(radius));
  return *slot;
}

CheckReport Verifier::check_soundness(const Generator& s, std::size_t maxlen) {
  return check_soundness(s, machine(s), maxlen, "soundness[" + to_string(s) + "]");
}

CheckReport Verifier::check_soundness(const Generator& s, const Automaton& m, std::size_t maxlen,
                                      const std::string& name) {
  CheckReport r = begin_report(name, seed_);
  const auto& conv = codec_.alphabet().conv();
  for (const auto& w : enumerate(m, maxlen)) {
    ++r.checked;
    try {
      auto [u, v] = split(conv, w);
      const GroupElement g = codec_.decode(u), h = codec_.decode(v);
      if (!(group().apply(g, s) == h)) r.fail(codec_.to_string(u, true) + " -> " + codec_.to_string(v, true));
    } catch (const Error& e) {
      r.fail(render(conv, w) + ": " + e.what());
    }
  }
  r.detail = "maxlen=" + std::to_string(maxlen) + " states=" + std::to_string(m.num_states());
  return r;
}

CheckReport Verifier::check_completeness(const Generator& s, int radius) {
  CheckReport r = begin_report("completeness[" + to_string(s) + "]", seed_);
  const Automaton& m = machine(s);
  const auto& conv = codec_.alphabet().conv();
  for (const auto& g : ball(radius).elements) {
    ++r.checked;
    const SymbolString u = codec_.encode(g), v = codec_.encode(group().apply(g, s));
    if (!accepts(m, convolve(conv, u, v))) r.fail(codec_.to_string(u, true) + " -> " + codec_.to_string(v, true));
  }
  r.detail = "radius=" + std::to_string(radius);
  return r;
}

CheckReport Verifier::check_inverse(const Generator& s, int radius) {
  CheckReport r = begin_report("inverse[" + to_string(s) + "]", seed_);
  const Automaton swapped = swap_tracks(machine(s));
  const auto& conv = codec_.alphabet().conv();
  for (const auto& g : ball(radius).elements) {
    ++r.checked;
    const SymbolString u = codec_.encode(g), v = codec_.encode(group().apply(g, s));
    if (!accepts(swapped, convolve(conv, v, u))) r.fail(codec_.to_string(v, true) + " -> " + codec_.to_string(u, true));
  }
  r.detail = "radius=" + std::to_string(radius);
  return r;
}

CheckReport Verifier::check_geometry(int radius) {
  CheckReport r = begin_report("geometry", seed_);
  const Ball& b = ball(radius);
  std::int64_t worst_len = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    ++r.checked;
    const TreeMetric tm = group().tree_distance(b.elements[k]);
    const std::int64_t l = b.length[k];
    std::int64_t balance = 0;
    bool nonneg = true;
    for (std::size_t x = 0; x < tm.u.size(); ++x) {
      balance += tm.v[x] - tm.u[x];
      nonneg = nonneg && tm.u[x] >= 0 && tm.v[x] >= 0;
    }
    const std::int64_t len = static_cast<std::int64_t>(codec_.encode(b.elements[k]).size());
    worst_len = std::max(worst_len, len - 2 * tm.dT);
    if (balance != 0 || !nonneg || tm.dT > 2 * l || l > 2 * tm.dT) {
      r.fail(group().to_string(b.elements[k]) + " l=" + std::to_string(l) + " dT=" + std::to_string(tm.dT));
    }
  }
  r.detail = "radius=" + std::to_string(radius) + " elements=" + std::to_string(b.size());
  return r;
}

CheckReport Verifier::check_quasigeodesic(int radius) {
  CheckReport r = begin_report("quasigeodesic", seed_);
  const Ball& b = ball(radius);
  const std::int64_t d = group().rank();
  const std::int64_t big_d = 4 + (2 * d - 2);
  for (std::size_t k = 0; k < b.size(); ++k) {
    ++r.checked;
    const TreeMetric tm = group().tree_distance(b.elements[k]);
    const auto len = static_cast<std::int64_t>(codec_.encode(b.elements[k]).size());
    if (len > 2 * tm.dT + 2 * d - 2 || len > big_d * (b.length[k] + 1)) {
      r.fail(group().to_string(b.elements[k]) + " |nf|=" + std::to_string(len) + " dT=" + std::to_string(tm.dT));
    }
  }
  r.detail = "radius=" + std::to_string(radius);
  return r;
}

CheckReport Verifier::check_algebra(std::size_t samples) {
  CheckReport r = begin_report("algebra", seed_);
  auto rng = rng_for(r.name);
  const Group& G = group();
  const auto gens = G.generators();
  const GroupElement e = G.identity();
  for (std::size_t k = 0; k < samples; ++k) {
    const GroupElement a = random_element(G, rng), b = random_element(G, rng), c = random_element(G, rng);
    r.checked += 1;
    const std::string lit = G.to_string(a) + " ; " + G.to_string(b) + " ; " + G.to_string(c);
    if (!(G.multiply(G.multiply(a, b), c) == G.multiply(a, G.multiply(b, c)))) r.fail("assoc " + lit);
    if (!(G.multiply(a, e) == a) || !(G.multiply(e, a) == a)) r.fail("identity " + G.to_string(a));
    const GroupElement ai = G.invert(a);
    if (!G.is_identity(G.multiply(a, ai)) || !G.is_identity(G.multiply(ai, a))) r.fail("inverse " + G.to_string(a));
    if (!(G.invert(ai) == a)) r.fail("double inverse " + G.to_string(a));
    const Generator& s = gens[k % gens.size()];
    if (!(G.apply(a, s) == G.multiply(a, G.element_of(s)))) r.fail("apply " + G.to_string(a) + " " + to_string(s));
  }
  r.detail = "triples=" + std::to_string(samples);
  return r;
}

CheckReport Verifier::check_decomposition(std::size_t samples) {
  CheckReport r = begin_report("decomposition", seed_);
  auto rng = rng_for(r.name);
  const PolyRing& ring = group().ring();
  for (std::size_t k = 0; k < samples; ++k) {
    ++r.checked;
    const RationalForm x = random_rational(ring, rng, 8, 4);
    const Decomposition dec = ring.decompose(x);
    if (!dec.is_canonical() || !(ring.recompose(dec) == x)) r.fail(ring.to_string(x));
    const GroupElement g = random_element(group(), rng, 0, 4);
    if (!(ring.decompose(ring.recompose(g.rprime)) == g.rprime)) r.fail(ring.to_string(g.rprime));
  }
  r.detail = "samples=" + std::to_string(samples);
  return r;
}

CheckReport Verifier::check_codec(int radius, std::size_t samples, std::size_t maxlen) {
  CheckReport r = begin_report("codec", seed_);
  auto rng = rng_for(r.name);
  auto roundtrip = [&](const GroupElement& g) {
    ++r.checked;
    try {
      if (!(codec_.decode(codec_.encode(g)) == g)) r.fail(group().to_string(g));
    } catch (const Error& e) {
      r.fail(group().to_string(g) + ": " + e.what());
    }
  };
  for (const auto& g : ball(radius).elements) roundtrip(g);
  for (std::size_t k = 0; k < samples; ++k) roundtrip(random_element(group(), rng));
  const Automaton nf = codec_.nf_automaton();
  for (const auto& w : enumerate(nf, maxlen)) {
    ++r.checked;
    try {
      if (codec_.encode(codec_.decode(w)) != w) r.fail(codec_.to_string(w, true));
    } catch (const Error& e) {
      r.fail(codec_.to_string(w, true) + ": " + e.what());
    }
  }
  r.detail = "radius=" + std::to_string(radius) + " maxlen=" + std::to_string(maxlen);
  return r;
}

CheckReport Verifier::check_recurrences(std::size_t samples) {
  CheckReport r = begin_report("recurrences", seed_);
  auto rng = rng_for(r.name);
  const PolyRing& ring = group().ring();
  const auto& zq = ring.zq();
  const int d = group().rank();
  for (const auto& s : group().base_generators()) {
    const MachineConstants c = derive_constants(ring, s);
    RationalForm f = ring.pole_power(s.i, 1);
    if (s.kind == GenKind::Type2) f = ring.mul(f, ring.pole_power(s.j, -1));
    for (int n = 0; n < d; ++n) {
      if (n == s.i) continue;
      const auto& t = c.tracks[static_cast<std::size_t>(n)];
      for (std::size_t k = 0; k < samples; ++k) {
        ++r.checked;
        Decomposition dec = Decomposition::zero(d);
        dec.parts[static_cast<std::size_t>(n)] = random_block(rng, zq.modulus(), 6, 1);
        const auto& b = dec.parts[static_cast<std::size_t>(n)];
        std::vector<Residue> exact = ring.decompose(ring.mul(f, ring.recompose(dec))).parts[static_cast<std::size_t>(n)];
        std::vector<Residue> direct = direct_block(t, zq, b);
        std::vector<Residue> rec = recurrence_block(t, zq, b, direct[0]);
        std::vector<Residue> trimmed = direct;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        const bool len_ok = exact.size() + (t.lead ? 1 : 0) == b.size();
        if (trimmed != exact || rec != direct || !recurrence_terminal_ok(t, zq, b, rec) || !len_ok) {
          r.fail(to_string(s) + " block " + std::to_string(n + 1) + " b=" + join(b) + " exact=" + join(exact) +
                 " rec=" + join(rec));
        }
      }
    }
  }
  r.detail = "samples per case=" + std::to_string(samples);
  return r;
}

CheckReport Verifier::check_first_coefficient(std::size_t samples) {
  CheckReport r = begin_report("first_coefficient", seed_);
  auto rng = rng_for(r.name);
  const auto gens = group().base_generators();
  std::vector<MachineConstants> consts;
  for (const auto& s : gens) consts.push_back(derive_constants(group().ring(), s));
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    ++r.checked;
    const std::size_t x = pick(rng);
    const GroupElement g = random_element(group(), rng, 3, 4);
    const GroupElement h = group().apply(g, gens[x]);
    const auto& part = h.rprime.parts[static_cast<std::size_t>(gens[x].i)];
    const Residue actual = part.empty() ? 0 : part[0];
    const Residue predicted = first_coefficient(consts[x], group().params().ring(), g);
    if (actual != predicted) {
      r.fail(group().to_string(g) + " * " + to_string(gens[x]) + " predicted=" + std::to_string(predicted) +
             " actual=" + std::to_string(actual));
    }
  }
  r.detail = "samples=" + std::to_string(samples);
  return r;
}

CheckReport Verifier::check_mutation(const Generator& s, std::size_t maxlen) {
  CheckReport r = begin_report("mutation[" + to_string(s) + "]", seed_);
  const MachineConstants c = derive_constants(group().ring(), s);
  const auto slots = constant_slots(c);
  std::string caught;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    ++r.checked;
    const Automaton m = builder_.multiplier(mutate_constant(c, k, group().ring()));
    const CheckReport sound = check_soundness(s.base(), m, maxlen, "mutant");
    if (sound.failures == 0) {
      r.fail(slots[k] + " went undetected");
    } else {
      caught += (caught.empty() ? "" : ",") + slots[k] + ":" + std::to_string(sound.failures);
    }
  }
  r.detail = "maxlen=" + std::to_string(maxlen) + " caught=" + caught;
  return r;
}

std::vector<CheckReport> Verifier::run_all(const AllOptions& o) {
  std::vector<CheckReport> out;
  out.push_back(check_decomposition(o.samples));
  out.push_back(check_algebra(o.samples));
  out.push_back(check_geometry(o.radius));
  out.push_back(check_quasigeodesic(o.radius));
  out.push_back(check_codec(o.radius, o.samples, std::min<std::size_t>(o.maxlen, 8)));
  out.push_back(check_recurrences(o.samples));
  out.push_back(check_first_coefficient(o.samples));
  for (const auto& s : group().base_generators()) {
    out.push_back(check_soundness(s, o.maxlen));
    out.push_back(check_soundness(s.inverted(), o.maxlen));
    out.push_back(check_completeness(s, o.radius));
    out.push_back(check_completeness(s.inverted(), o.radius));
    out.push_back(check_inverse(s, o.radius));
    if (o.mutation) out.push_back(check_mutation(s, o.maxlen));
  }
  return out;
}

}  // namespace dlga
