#pragma once

#include <string>
#include <string_view>

#include "dlga/automaton.hpp"
#include "dlga/group.hpp"

namespace dlga {

// Normal-form tokens: digits 0..q-1, then '#', 'x', 'y'.
class NfAlphabet {
 public:
  explicit NfAlphabet(const GroupParams& params);

  const AlphabetPtr& tokens() const noexcept { return tokens_; }
  const AlphabetPtr& conv() const noexcept { return conv_; }

  Symbol digit(Residue r) const noexcept { return r; }
  Symbol hash() const noexcept { return q_; }
  Symbol x() const noexcept { return q_ + 1; }
  Symbol y() const noexcept { return q_ + 2; }
  bool is_digit(Symbol s) const noexcept { return s < q_; }
  bool is_letter(Symbol s) const noexcept { return s == x() || s == y(); }

 private:
  Symbol q_;
  AlphabetPtr tokens_;
  AlphabetPtr conv_;
};

// Prefix blocks e_1^{|m_1|} # ... # e_{d-1}^{|m_{d-1}|} with e = x for
// positive and y for negative exponents, followed by suffix blocks
// S_1 # ... # S_d. S_k (k < d) lists the coefficients of (t + l_k)^{-1},
// (t + l_k)^{-2}, ...; S_d lists the coefficients of t^0, t^1, ... . Every
// nonempty suffix block ends in a nonzero digit.
class Codec {
 public:
  explicit Codec(Group group);

  const Group& group() const noexcept { return group_; }
  const NfAlphabet& alphabet() const noexcept { return alpha_; }

  SymbolString encode(const GroupElement& g) const;
  // Throws MalformedString.
  GroupElement decode(const SymbolString& w) const;

  // Space-separated tokens; raw joins them without separators (q <= 10).
  std::string to_string(const SymbolString& w, bool raw = false) const;
  // Accepts space-separated tokens, or a compact string when q <= 10.
  SymbolString parse(std::string_view text) const;

  Automaton prefix_automaton() const;
  Automaton suffix_automaton() const;
  // Minimal DFA for prefix . suffix.
  Automaton nf_automaton() const;

 private:
  Group group_;
  NfAlphabet alpha_;
};

}  // namespace dlga
