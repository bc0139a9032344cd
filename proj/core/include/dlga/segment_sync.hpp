#pragma once

#include <cstddef>
#include <vector>

#include "dlga/automaton.hpp"

namespace dlga {

enum class SegmentEnd {
  Hash,         // closed by the separator token, which is consumed
  Soft,         // closed by the first token outside the content class
  EndOfString,  // closed by the end of the track
};

struct SegmentSpec {
  SegmentEnd end = SegmentEnd::Hash;
  // content[t] != 0 iff base token t may occur inside the segment.
  std::vector<char> content;
};

struct SyncScheme {
  std::vector<SegmentSpec> segments;
  Symbol separator = 0;
};

// Accepts conv(u, v) where u and v split into segments U_1..U_K and
// V_1..V_K under the scheme and conv(U_k, V_k) is accepted by machines[k]
// for every k. The two tracks may drift apart by at most max_lag buffered
// tokens; strings needing more are rejected.
Automaton synchronize_segments(const AlphabetPtr& conv, const SyncScheme& scheme,
                               const std::vector<Automaton>& machines, std::size_t max_lag,
                               std::size_t cap);

}  // namespace dlga
