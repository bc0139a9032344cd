#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dlga/errors.hpp"

namespace dlga {

// Least nonnegative representative of a class in Z_q.
using Residue = std::uint32_t;

// Arithmetic in Z_q. All results are reduced eagerly.
class ModRing {
 public:
  explicit ModRing(std::uint32_t q) : q_(q) {}

  std::uint32_t modulus() const noexcept { return q_; }

  Residue reduce(std::int64_t a) const noexcept {
    auto r = a % static_cast<std::int64_t>(q_);
    return static_cast<Residue>(r < 0 ? r + q_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    auto s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % q_);
  }
  // a^e for e >= 0; negative e requires a to be a unit.
  Residue pow(Residue a, std::int64_t e) const;

  bool is_unit(Residue a) const noexcept;
  // Throws NonUnit when gcd(a, q) != 1.
  Residue inverse(Residue a) const;

 private:
  std::uint32_t q_;
};

// Validated (q, d, l_1..l_{d-1}). Immutable after construction.
//
// Poles are indexed 0..d-2 in code; pole k stands for the factor (t + l(k)).
class GroupParams {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  static GroupParams validate(std::int64_t q, int d, std::span<const std::int64_t> l);

  std::uint32_t q() const noexcept { return ring_.modulus(); }
  int rank() const noexcept { return d_; }
  int poles() const noexcept { return d_ - 1; }
  Residue l(int k) const { return l_.at(static_cast<std::size_t>(k)); }
  const std::vector<Residue>& l_values() const noexcept { return l_; }
  const ModRing& ring() const noexcept { return ring_; }

  friend bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.q() == b.q() && a.d_ == b.d_ && a.l_ == b.l_;
  }

 private:
  GroupParams(std::uint32_t q, int d, std::vector<Residue> l)
      : ring_(q), d_(d), l_(std::move(l)) {}

  ModRing ring_;
  int d_;
  std::vector<Residue> l_;
};

Residue unit_inverse(Residue a, const GroupParams& params);

// Smallest k >= 1 with a^k == 1 (mod q). Throws NonUnit.
unsigned mult_order(Residue a, const GroupParams& params);

// Order of the unit group of Z_q.
std::uint32_t euler_phi(std::uint32_t q);

}  // namespace dlga
