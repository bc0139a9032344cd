#include "dlga/codec.hpp"

#include <cctype>

#include "dlga/errors.hpp"
#include "dlga/fsa.hpp"

namespace dlga {

namespace {

std::vector<std::string> token_names(std::uint32_t q) {
  std::vector<std::string> names;
  for (std::uint32_t r = 0; r < q; ++r) names.push_back(std::to_string(r));
  names.insert(names.end(), {"#", "x", "y"});
  return names;
}

}  // namespace

NfAlphabet::NfAlphabet(const GroupParams& params)
    : q_(params.q()), tokens_(Alphabet::make(token_names(params.q()))), conv_(Alphabet::convolution(tokens_)) {}

Codec::Codec(Group group) : group_(std::move(group)), alpha_(group_.params()) {}

SymbolString Codec::encode(const GroupElement& g) const {
  SymbolString w;
  const int d = group_.rank();
  for (int k = 0; k + 1 < d; ++k) {
    if (k) w.push_back(alpha_.hash());
    auto m = g.m[static_cast<std::size_t>(k)];
    const Symbol letter = m > 0 ? alpha_.x() : alpha_.y();
    for (std::int64_t c = 0; c < (m > 0 ? m : -m); ++c) w.push_back(letter);
  }
  for (int k = 0; k < d; ++k) {
    if (k) w.push_back(alpha_.hash());
    for (Residue c : g.rprime.parts[static_cast<std::size_t>(k)]) w.push_back(alpha_.digit(c));
  }
  return w;
}

GroupElement Codec::decode(const SymbolString& w) const {
  const int d = group_.rank();
  GroupElement g = group_.identity();
  std::size_t pos = 0;
  for (int k = 0; k + 1 < d; ++k) {
    if (k) {
      if (pos >= w.size() || w[pos] != alpha_.hash()) throw MalformedString("missing prefix separator");
      ++pos;
    }
    std::int64_t count = 0;
    Symbol letter = 0;
    while (pos < w.size() && alpha_.is_letter(w[pos])) {
      if (count && w[pos] != letter) throw MalformedString("mixed x and y in one prefix block");
      letter = w[pos++];
      ++count;
    }
    g.m[static_cast<std::size_t>(k)] = letter == alpha_.y() ? -count : count;
  }
  for (int k = 0; k < d; ++k) {
    if (k) {
      if (pos >= w.size() || w[pos] != alpha_.hash()) throw MalformedString("missing suffix separator");
      ++pos;
    }
    auto& part = g.rprime.parts[static_cast<std::size_t>(k)];
    while (pos < w.size() && alpha_.is_digit(w[pos])) part.push_back(w[pos++]);
    if (!part.empty() && part.back() == 0) throw MalformedString("suffix block ends in zero");
  }
  if (pos != w.size()) throw MalformedString("unexpected token after the last suffix block");
  return g;
}

std::string Codec::to_string(const SymbolString& w, bool raw) const {
  return render(alpha_.tokens(), w, raw && group_.params().q() <= 10 ? "" : " ");
}

SymbolString Codec::parse(std::string_view text) const {
  const auto& tokens = alpha_.tokens();
  SymbolString w;
  const bool spaced = text.find_first_of(" \t\n") != std::string_view::npos;
  auto push = [&](std::string_view tok) {
    auto s = tokens->find(tok);
    if (!s) throw MalformedString("unknown token '" + std::string(tok) + "'");
    w.push_back(*s);
  };
  if (!spaced && group_.params().q() > 10 && text.size() > 1) {
    // A single multi-character token is still unambiguous.
    push(text);
    return w;
  }
  std::size_t k = 0;
  while (k < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
      continue;
    }
    std::size_t e = k + 1;
    if (spaced) {
      while (e < text.size() && !std::isspace(static_cast<unsigned char>(text[e]))) ++e;
    }
    push(text.substr(k, e - k));
    k = e;
  }
  return w;
}

Automaton Codec::prefix_automaton() const {
  Automaton a(alpha_.tokens());
  const int blocks = group_.rank() - 1;
  // Per block: empty, inside x^+, inside y^+.
  std::vector<State> empty_s, xs, ys;
  for (int k = 0; k < blocks; ++k) {
    bool last = k + 1 == blocks;
    empty_s.push_back(a.add_state(last));
    xs.push_back(a.add_state(last));
    ys.push_back(a.add_state(last));
  }
  for (int k = 0; k < blocks; ++k) {
    a.add_edge(empty_s[k], alpha_.x(), xs[k]);
    a.add_edge(empty_s[k], alpha_.y(), ys[k]);
    a.add_edge(xs[k], alpha_.x(), xs[k]);
    a.add_edge(ys[k], alpha_.y(), ys[k]);
    if (k + 1 < blocks) {
      for (State s : {empty_s[k], xs[k], ys[k]}) a.add_edge(s, alpha_.hash(), empty_s[k + 1]);
    }
  }
  a.set_start(empty_s[0]);
  return a;
}

Automaton Codec::suffix_automaton() const {
  Automaton a(alpha_.tokens());
  const int blocks = group_.rank();
  const auto q = group_.params().q();
  // Per block: empty, last digit nonzero, last digit zero.
  std::vector<State> empty_s, nz, z;
  for (int k = 0; k < blocks; ++k) {
    bool last = k + 1 == blocks;
    empty_s.push_back(a.add_state(last));
    nz.push_back(a.add_state(last));
    z.push_back(a.add_state(false));
  }
  for (int k = 0; k < blocks; ++k) {
    for (State s : {empty_s[k], nz[k], z[k]}) {
      a.add_edge(s, alpha_.digit(0), z[k]);
      for (Residue r = 1; r < q; ++r) a.add_edge(s, alpha_.digit(r), nz[k]);
    }
    if (k + 1 < blocks) {
      for (State s : {empty_s[k], nz[k]}) a.add_edge(s, alpha_.hash(), empty_s[k + 1]);
    }
  }
  a.set_start(empty_s[0]);
  return a;
}

Automaton Codec::nf_automaton() const { return minimize(concat(prefix_automaton(), suffix_automaton())); }

}  // namespace dlga
