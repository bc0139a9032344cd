#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "dlga/multiplier.hpp"

namespace dlga {

struct CheckReport {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  // Reproduction literals for the first few failures.
  std::vector<std::string> examples;
  std::string detail;

  void fail(std::string example);
};

// One line: name, status, counts, seed, detail, then examples.
std::string format_report(const CheckReport& r);

// Random element with |m_k| <= max_exp and suffix blocks of length <= max_len.
GroupElement random_element(const Group& group, std::mt19937_64& rng, int max_exp = 3, int max_len = 3);
// Numerator degree <= max_degree, denominator exponents <= max_exp.
RationalForm random_rational(const PolyRing& ring, std::mt19937_64& rng, int max_degree, int max_exp);
Word random_word(const Group& group, std::mt19937_64& rng, int max_length);

class Verifier {
 public:
  Verifier(const Codec& codec, BuildOptions options = {}, std::uint64_t seed = 1);

  const Codec& codec() const noexcept { return codec_; }
  const Group& group() const noexcept { return codec_.group(); }
  const MultiplierBuilder& builder() const noexcept { return builder_; }

  // Cached per generator; inverse generators reuse the swapped base machine.
  const Automaton& machine(const Generator& s);
  const Ball& ball(int radius);

  CheckReport check_soundness(const Generator& s, std::size_t maxlen);
  // Same, against an explicitly supplied machine.
  CheckReport check_soundness(const Generator& s, const Automaton& m, std::size_t maxlen, const std::string& name);
  CheckReport check_completeness(const Generator& s, int radius);
  // The swapped machine accepts conv(code(gs), code(g)).
  CheckReport check_inverse(const Generator& s, int radius);
  CheckReport check_geometry(int radius);
  // Normal-form length against tree distance and word length.
  CheckReport check_quasigeodesic(int radius);
  CheckReport check_algebra(std::size_t samples);
  CheckReport check_decomposition(std::size_t samples);
  CheckReport check_codec(int radius, std::size_t samples, std::size_t maxlen);
  CheckReport check_recurrences(std::size_t samples);
  CheckReport check_first_coefficient(std::size_t samples);
  // Every single-constant corruption of s must yield a soundness failure.
  CheckReport check_mutation(const Generator& s, std::size_t maxlen);

  struct AllOptions {
    int radius = 4;
    std::size_t maxlen = 9;
    std::size_t samples = 1000;
    bool mutation = true;
  };
  std::vector<CheckReport> run_all(const AllOptions& options);

 private:
  std::mt19937_64 rng_for(const std::string& check) const;

  const Codec& codec_;
  MultiplierBuilder builder_;
  std::uint64_t seed_;
  std::map<std::string, Automaton> machines_;
  std::map<int, std::unique_ptr<Ball>> balls_;
};

}  // namespace dlga
