#include "dlga/group.hpp"

#include <deque>
#include <sstream>

namespace dlga {

namespace {

void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t seed = g.m.size();
  for (auto x : g.m) hash_mix(seed, static_cast<std::size_t>(x));
  for (const auto& part : g.rprime.parts) {
    hash_mix(seed, part.size() + 0x51);
    for (auto c : part) hash_mix(seed, c);
  }
  return seed;
}

Group::Group(GroupParams params) : ring_(std::move(params)) {}

GroupElement Group::identity() const {
  return GroupElement{std::vector<std::int64_t>(static_cast<std::size_t>(ring_.poles()), 0),
                      Decomposition::zero(rank())};
}

bool Group::is_identity(const GroupElement& g) const { return g == identity(); }

std::vector<Generator> Group::base_generators() const {
  std::vector<Generator> out;
  const int p = ring_.poles();
  const auto q = params().q();
  for (int i = 0; i < p; ++i) {
    for (Residue b = 0; b < q; ++b) out.push_back(Generator{GenKind::Type1, i, -1, b, false});
  }
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      for (Residue b = 0; b < q; ++b) out.push_back(Generator{GenKind::Type2, i, j, b, false});
    }
  }
  return out;
}

std::vector<Generator> Group::generators() const {
  std::vector<Generator> out;
  for (const auto& s : base_generators()) {
    out.push_back(s);
    out.push_back(s.inverted());
  }
  return out;
}

RationalForm Group::a_power(const std::vector<std::int64_t>& m, int sign) const {
  std::vector<std::int64_t> e(m);
  for (auto& x : e) x *= sign;
  return ring_.monomial(e);
}

GroupElement Group::element_of(const Generator& s) const {
  GroupElement g = identity();
  g.m[static_cast<std::size_t>(s.i)] = 1;
  if (s.kind == GenKind::Type2) g.m[static_cast<std::size_t>(s.j)] = -1;
  if (s.b != 0) g.rprime.parts[static_cast<std::size_t>(s.i)] = {s.b};
  return s.inverse ? invert(g) : g;
}

GroupElement Group::multiply(const GroupElement& g, const GroupElement& h) const {
  GroupElement out;
  out.m.resize(g.m.size());
  for (std::size_t k = 0; k < g.m.size(); ++k) out.m[k] = g.m[k] + h.m[k];
  if (g.rprime.is_zero()) {
    out.rprime = h.rprime;
    return out;
  }
  RationalForm r = ring_.mul(a_power(h.m, -1), ring_.recompose(g.rprime));
  if (!h.rprime.is_zero()) r = ring_.add(r, ring_.recompose(h.rprime));
  out.rprime = ring_.decompose(r);
  return out;
}

GroupElement Group::invert(const GroupElement& g) const {
  GroupElement out;
  out.m = g.m;
  for (auto& x : out.m) x = -x;
  if (g.rprime.is_zero()) {
    out.rprime = Decomposition::zero(rank());
    return out;
  }
  out.rprime = ring_.decompose(ring_.neg(ring_.mul(a_power(g.m, 1), ring_.recompose(g.rprime))));
  return out;
}

GroupElement Group::apply(const GroupElement& g, const Generator& s) const {
  return multiply(g, element_of(s));
}

GroupElement Group::evaluate(const Word& word) const {
  GroupElement g = identity();
  for (const auto& s : word) g = apply(g, s);
  return g;
}

RationalForm Group::full_r(const GroupElement& g) const {
  if (g.rprime.is_zero()) return ring_.zero();
  return ring_.mul(a_power(g.m, 1), ring_.recompose(g.rprime));
}

TreeMetric Group::tree_distance(const GroupElement& g) const {
  const int d = rank();
  std::vector<std::int64_t> h(static_cast<std::size_t>(d), 0);
  std::int64_t total = 0;
  for (int k = 0; k + 1 < d; ++k) {
    h[static_cast<std::size_t>(k)] = g.m[static_cast<std::size_t>(k)];
    total += g.m[static_cast<std::size_t>(k)];
  }
  h.back() = -total;
  const Decomposition r = ring_.decompose(full_r(g));
  TreeMetric tm;
  tm.u.resize(static_cast<std::size_t>(d));
  tm.v.resize(static_cast<std::size_t>(d));
  for (std::size_t k = 0; k < static_cast<std::size_t>(d); ++k) {
    auto dep = static_cast<std::int64_t>(r.parts[k].size());
    tm.u[k] = std::max<std::int64_t>({0, -h[k], dep});
    tm.v[k] = tm.u[k] + h[k];
    tm.dT += tm.u[k] + tm.v[k];
  }
  return tm;
}

Ball Group::ball(int radius) const {
  Ball out;
  const auto gens = generators();
  std::vector<GroupElement> basis;
  basis.reserve(gens.size());
  for (const auto& s : gens) basis.push_back(element_of(s));

  out.elements.push_back(identity());
  out.length.push_back(0);
  out.index.emplace(out.elements.back(), 0);
  std::size_t frontier_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t frontier_end = out.elements.size();
    for (std::size_t x = frontier_begin; x < frontier_end; ++x) {
      for (const auto& s : basis) {
        GroupElement next = multiply(out.elements[x], s);
        if (out.index.contains(next)) continue;
        out.index.emplace(next, static_cast<int>(out.elements.size()));
        out.elements.push_back(std::move(next));
        out.length.push_back(r);
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

std::string Group::to_string(const GroupElement& g) const {
  std::ostringstream os;
  os << "m=(";
  for (std::size_t k = 0; k < g.m.size(); ++k) os << (k ? "," : "") << g.m[k];
  os << ") R'=" << ring_.to_string(g.rprime);
  return os.str();
}

std::string to_string(const Generator& s) {
  std::ostringstream os;
  if (s.kind == GenKind::Type1) {
    os << "t1[" << s.i + 1 << ',' << s.b << ']';
  } else {
    os << "t2[" << s.i + 1 << ',' << s.j + 1 << ',' << s.b << ']';
  }
  if (s.inverse) os << '\'';
  return os.str();
}

}  // namespace dlga
