#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dlga/codec.hpp"
#include "dlga/fsa.hpp"

namespace dlga {

// Coefficients f_0, f_1, ... of the generator factor F expanded at block n
// (n != i), with f_{x+1} = rho f_x for x >= 1. For such blocks
// c_r = sum_x f_x b_{x+r} maps the block of R to the block of the product.
struct TrackConstants {
  bool used = false;
  // The product block is one coefficient shorter.
  bool lead = false;
  Residue f0 = 0;
  Residue f1 = 0;
  Residue rho = 0;
};

// F = carry (t + l_i)^{-1} + keep at block i. The first coefficient of the
// product block i is b + keep beta_{i,1} + carry * (sum over the other
// blocks of beta times base^position).
struct MachineConstants {
  Generator s;
  std::vector<TrackConstants> tracks;  // per block, unused at i
  Residue carry = 0;
  Residue keep = 0;
  std::vector<Residue> base;     // per block, unused at i
  std::vector<unsigned> cycle;   // multiplicative order of base
  std::vector<int> prefix_delta; // exponent change per prefix block
};

// Reads every constant off truncated Laurent expansions and checks the
// structural assumptions (geometric tails, unit leading terms).
MachineConstants derive_constants(const PolyRing& ring, const Generator& s);

// Named single-constant corruptions used by the mutation sentinel.
std::vector<std::string> constant_slots(const MachineConstants& c);
MachineConstants mutate_constant(const MachineConstants& c, std::size_t slot, const PolyRing& ring);

// Block coefficients c_1..c_L of the product for block n from the direct
// sum, and from the first coefficient plus the recurrence.
std::vector<Residue> direct_block(const TrackConstants& t, const ModRing& zq, const std::vector<Residue>& b);
std::vector<Residue> recurrence_block(const TrackConstants& t, const ModRing& zq, const std::vector<Residue>& b,
                                      Residue c1);
// The last coefficient the recurrence must land on.
bool recurrence_terminal_ok(const TrackConstants& t, const ModRing& zq, const std::vector<Residue>& b,
                            const std::vector<Residue>& c);

// b + keep beta_{i,1} + carry * partial sums, evaluated on g's coordinates.
Residue first_coefficient(const MachineConstants& c, const ModRing& zq, const GroupElement& g);

struct BuildOptions {
  std::size_t cap = default_state_cap();
  // Zero picks the bound for the generator type.
  std::size_t max_lag = 0;
};

class MultiplierBuilder {
 public:
  explicit MultiplierBuilder(const Codec& codec, BuildOptions options = {});

  const Codec& codec() const noexcept { return codec_; }
  std::size_t lag_for(const Generator& s) const;

  // Pairs of x/y blocks whose exponents differ by delta.
  Automaton prefix_block_machine(int delta) const;
  // Pairs of full prefix strings related by the generator.
  Automaton prefix_pair_machine(const Generator& s) const;
  // Pairs of digit blocks (block n of g, block n of gs), n != i.
  Automaton coeff_track_machine(int n, const MachineConstants& c) const;
  // Pairs of digit blocks at i; the first product coefficient is free.
  Automaton i_track_machine(const MachineConstants& c) const;
  // Block length relation at n.
  Automaton length_relation_machine(int n, const MachineConstants& c) const;
  // Full strings; checks the first coefficient of block i of the bottom track.
  Automaton first_coeff_machine(const MachineConstants& c) const;
  // Both tracks are normal forms.
  Automaton well_formed_pairs() const;

  Automaton multiplier(const Generator& s) const;
  Automaton multiplier(const MachineConstants& c) const;

 private:
  const Codec& codec_;
  BuildOptions options_;
};

// The unique v with conv(u, v) accepted; throws NoImage or AmbiguousImage.
SymbolString apply_multiplier(const Automaton& m, const SymbolString& u, std::size_t slack);

}  // namespace dlga
