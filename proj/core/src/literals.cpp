#include "dlga/literals.hpp"

#include <cctype>
#include <charconv>

#include "dlga/errors.hpp"

namespace dlga {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string s) : s_(std::move(s)) {}

  bool done() const { return pos_ == s_.size(); }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool take(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool take(std::string_view lit) {
    if (s_.compare(pos_, lit.size(), lit) != 0) return false;
    pos_ += lit.size();
    return true;
  }
  void expect(char c) {
    if (!take(c)) fail(std::string("expected '") + c + "'");
  }
  std::int64_t integer() {
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::int64_t v = 0;
    auto first = s_.data() + start + (start < s_.size() && s_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_) fail("expected an integer");
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Generator parse_generator(std::string_view text, const GroupParams& params) {
  Cursor c(strip_spaces(text));
  Generator g;
  if (c.take("t1[")) {
    g.kind = GenKind::Type1;
  } else if (c.take("t2[")) {
    g.kind = GenKind::Type2;
  } else {
    c.fail("expected t1[ or t2[");
  }
  const std::int64_t poles = params.poles();
  const std::int64_t i = c.integer();
  c.expect(',');
  std::int64_t j = 0;
  if (g.kind == GenKind::Type2) {
    j = c.integer();
    c.expect(',');
  }
  const std::int64_t b = c.integer();
  c.expect(']');
  g.inverse = c.take('\'');
  if (!c.done()) c.fail("trailing characters");
  if (i < 1 || i > poles) c.fail("index i out of range");
  if (g.kind == GenKind::Type2 && (j <= i || j > poles)) c.fail("type 2 needs i < j <= d-1");
  g.i = static_cast<int>(i - 1);
  g.j = g.kind == GenKind::Type2 ? static_cast<int>(j - 1) : -1;
  g.b = params.ring().reduce(b);
  return g;
}

Word parse_word(std::string_view text, const GroupParams& params) {
  Word w;
  const std::string s = strip_spaces(text);
  if (s.empty()) return w;
  std::size_t start = 0;
  // Commas also separate indices inside brackets; split at depth zero.
  int depth = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k < s.size() && s[k] == '[') ++depth;
    if (k < s.size() && s[k] == ']') --depth;
    if (k == s.size() || (s[k] == ',' && depth == 0)) {
      w.push_back(parse_generator(std::string_view(s).substr(start, k - start), params));
      start = k + 1;
    }
  }
  return w;
}

std::string to_string(const Word& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += to_string(word[k]);
  }
  return out;
}

RationalForm parse_polynomial(std::string_view text, const PolyRing& ring) {
  const std::string s = strip_spaces(text);
  RationalForm acc = ring.zero();
  if (s.empty() || s == "0") return acc;
  Cursor c(s);
  for (;;) {
    const std::int64_t coeff = c.integer();
    const Residue cr = ring.zq().reduce(coeff);
    if (!c.take('*')) {
      acc = ring.add(acc, ring.constant(cr));
    } else if (c.take("(t+l")) {
      const std::int64_t pole = c.integer();
      c.expect(')');
      std::int64_t e = 1;
      if (c.take('^')) e = c.integer();
      if (pole < 1 || pole > ring.poles()) c.fail("pole index out of range");
      acc = ring.add(acc, ring.pole_power(static_cast<int>(pole - 1), static_cast<int>(-e), cr));
    } else if (c.take('t')) {
      std::int64_t k = 1;
      if (c.take('^')) k = c.integer();
      if (k < 0) c.fail("negative power of t");
      acc = ring.add(acc, ring.t_power(static_cast<int>(k), cr));
    } else {
      c.fail("expected (t+l<i>) or t");
    }
    if (c.done()) break;
    c.expect('+');
  }
  return acc;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  const std::string s = strip_spaces(text);
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == ',') {
      Cursor c(s.substr(start, k - start));
      out.push_back(c.integer());
      if (!c.done()) c.fail("trailing characters");
      start = k + 1;
    }
  }
  return out;
}

}  // namespace dlga
