#include "dlga/params.hpp"

#include <numeric>
#include <string>

namespace dlga {

const char* to_string(ParamsErrc code) {
  switch (code) {
    case ParamsErrc::RankTooSmall: return "RankTooSmall";
    case ParamsErrc::LengthMismatch: return "LengthMismatch";
    case ParamsErrc::ModulusOutOfRange: return "ModulusOutOfRange";
    case ParamsErrc::RankTooLargeForModulus: return "RankTooLargeForModulus";
    case ParamsErrc::DuplicateL: return "DuplicateL";
    case ParamsErrc::NonUnitL: return "NonUnitL";
    case ParamsErrc::NonUnitDifference: return "NonUnitDifference";
  }
  return "Unknown";
}

Residue ModRing::pow(Residue a, std::int64_t e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  Residue result = reduce(1);
  Residue base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool ModRing::is_unit(Residue a) const noexcept {
  return std::gcd(a, q_) == 1;
}

Residue ModRing::inverse(Residue a) const {
  // Extended Euclid on (a, q).
  std::int64_t r0 = q_, r1 = a % q_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - quot * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) {
    throw NonUnit(std::to_string(a) + " is not a unit mod " + std::to_string(q_));
  }
  return reduce(s0);
}

namespace {

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

GroupParams GroupParams::validate(std::int64_t q, int d, std::span<const std::int64_t> l) {
  if (d < 3) {
    throw ParamsError(ParamsErrc::RankTooSmall, "d = " + std::to_string(d) + " but d >= 3 is required");
  }
  if (q < 2 || q > static_cast<std::int64_t>(kMaxModulus)) {
    throw ParamsError(ParamsErrc::ModulusOutOfRange,
                      "q = " + std::to_string(q) + " outside [2, " + std::to_string(kMaxModulus) + "]");
  }
  if (l.size() != static_cast<std::size_t>(d - 1)) {
    throw ParamsError(ParamsErrc::LengthMismatch, "expected " + std::to_string(d - 1) +
                                                      " values of l, got " + std::to_string(l.size()));
  }
  const auto uq = static_cast<std::uint32_t>(q);
  for (auto p : prime_divisors(uq)) {
    if (static_cast<std::uint32_t>(d - 1) >= p) {
      throw ParamsError(ParamsErrc::RankTooLargeForModulus,
                        "prime divisor " + std::to_string(p) + " of q does not exceed d-1 = " +
                            std::to_string(d - 1));
    }
  }
  ModRing ring(uq);
  std::vector<Residue> reduced;
  reduced.reserve(l.size());
  for (auto v : l) reduced.push_back(ring.reduce(v));

  for (std::size_t a = 0; a < reduced.size(); ++a) {
    for (std::size_t b = a + 1; b < reduced.size(); ++b) {
      if (reduced[a] == reduced[b]) {
        throw ParamsError(ParamsErrc::DuplicateL, "l" + std::to_string(a + 1) + " == l" +
                                                      std::to_string(b + 1) + " (mod q)");
      }
    }
  }
  for (std::size_t a = 0; a < reduced.size(); ++a) {
    if (!ring.is_unit(reduced[a])) {
      throw ParamsError(ParamsErrc::NonUnitL,
                        "l" + std::to_string(a + 1) + " = " + std::to_string(reduced[a]) + " is not a unit");
    }
  }
  for (std::size_t a = 0; a < reduced.size(); ++a) {
    for (std::size_t b = a + 1; b < reduced.size(); ++b) {
      if (!ring.is_unit(ring.sub(reduced[a], reduced[b]))) {
        throw ParamsError(ParamsErrc::NonUnitDifference,
                          "l" + std::to_string(a + 1) + " - l" + std::to_string(b + 1) + " is not a unit");
      }
    }
  }
  return GroupParams(uq, d, std::move(reduced));
}

Residue unit_inverse(Residue a, const GroupParams& params) {
  return params.ring().inverse(params.ring().reduce(a));
}

unsigned mult_order(Residue a, const GroupParams& params) {
  const auto& ring = params.ring();
  a = ring.reduce(a);
  if (!ring.is_unit(a)) {
    throw NonUnit(std::to_string(a) + " has no multiplicative order mod " + std::to_string(params.q()));
  }
  unsigned k = 1;
  for (Residue x = a; x != ring.reduce(1); x = ring.mul(x, a)) ++k;
  return k;
}

std::uint32_t euler_phi(std::uint32_t q) {
  std::uint32_t phi = q;
  for (auto p : prime_divisors(q)) phi = phi / p * (p - 1);
  return phi;
}

}  // namespace dlga
