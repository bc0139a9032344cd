#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dlga/automaton.hpp"

namespace dlga {

// Default bound on constructed states; DLGA_STATE_CAP overrides it.
std::size_t default_state_cap();

Automaton determinize(const Automaton& a, std::size_t cap = default_state_cap());
// Unique minimal trim DFA with states numbered in breadth-first symbol order.
Automaton minimize(const Automaton& a, std::size_t cap = default_state_cap());
// Keeps only states reachable from the start and co-reachable to acceptance.
Automaton trim(const Automaton& a);

Automaton intersect(const Automaton& a, const Automaton& b, std::size_t cap = default_state_cap());
Automaton unite(const Automaton& a, const Automaton& b, std::size_t cap = default_state_cap());
Automaton concat(const Automaton& a, const Automaton& b);
// Complement relative to all strings over the alphabet.
Automaton complement(const Automaton& a, std::size_t cap = default_state_cap());

bool is_empty(const Automaton& a);
// False on strings that break the pad discipline of a convolution alphabet.
bool accepts(const Automaton& a, const SymbolString& w);
bool equivalent(const Automaton& a, const Automaton& b);

// Accepted strings of length <= maxlen in lexicographic symbol order.
std::vector<SymbolString> enumerate(const Automaton& a, std::size_t maxlen);

// Machines over every string, over one string, and over nothing.
Automaton universal(const AlphabetPtr& alphabet);
Automaton literal(const AlphabetPtr& alphabet, const SymbolString& w);
Automaton empty_language(const AlphabetPtr& alphabet);

// ---------------------------------------------------------------------------
// Convolution of two strings over a base alphabet.

SymbolString convolve(const AlphabetPtr& conv, const SymbolString& top, const SymbolString& bottom);
// Component strings with pads stripped; throws MalformedString on bad padding.
std::pair<SymbolString, SymbolString> split(const AlphabetPtr& conv, const SymbolString& w);
bool pad_discipline(const AlphabetPtr& conv, const SymbolString& w);

// {conv(v, u) : conv(u, v) in L(a)}.
Automaton swap_tracks(const Automaton& a);
// {conv(u, v) : u in L(a)} with track 0 = top, 1 = bottom; v ranges freely.
Automaton lift_track(const Automaton& a, const AlphabetPtr& conv, int track);
// Well-padded convolutions.
Automaton pad_checker(const AlphabetPtr& conv);
// {conv(x w, w) : w in L(a), x a base token} for a over a plain alphabet.
Automaton shift_closure(const Automaton& a, const AlphabetPtr& conv);
// {conv(u, x v) : conv(u, v) in L(a), x a base token}.
Automaton delay_bottom(const Automaton& a);
// {conv(a1 b1, a2 x b2), conv(a1 y b1, a2 b2)} over conv(a1, a2) in L(a)
// of equal length and conv(b1, b2) in L(b).
Automaton offset_concat(const Automaton& a, const Automaton& b);

// ---------------------------------------------------------------------------
// Serialization.

std::string export_text(const Automaton& a);
std::string export_dot(const Automaton& a, const std::string& name = "automaton");

// Renders a string of tokens with the given separator.
std::string render(const AlphabetPtr& alphabet, const SymbolString& w, const std::string& sep = " ");

}  // namespace dlga
