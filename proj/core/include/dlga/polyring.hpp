#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dlga/params.hpp"

namespace dlga {

// Polynomial in t over Z_q; coeffs[k] is the coefficient of t^k.
// Invariant: no trailing zero coefficient (the zero polynomial is empty).
struct ModPoly {
  std::vector<Residue> coeffs;

  bool is_zero() const noexcept { return coeffs.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  friend bool operator==(const ModPoly&, const ModPoly&) = default;
};

// numerator / prod_k (t + l_k)^{denom[k]}, kept reduced: whenever denom[k] > 0
// the numerator does not vanish at t = -l_k.
struct RationalForm {
  ModPoly numerator;
  std::vector<int> denom;

  bool is_zero() const noexcept { return numerator.is_zero(); }
  friend bool operator==(const RationalForm&, const RationalForm&) = default;
};

// Unique splitting of a ring element into principal parts at each pole plus a
// polynomial part.
//
// parts[k] for k < d-1 lists the coefficient of (t + l_k)^{-(j+1)} at index j.
// parts[d-1] lists the coefficient of t^y at index y.
// Every nonempty part ends in a nonzero coefficient, so parts[k].size() is the
// depth of that part.
struct Decomposition {
  std::vector<std::vector<Residue>> parts;

  static Decomposition zero(int d) { return Decomposition{std::vector<std::vector<Residue>>(d)}; }
  bool is_zero() const noexcept;
  bool is_canonical() const noexcept;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Coefficients of a Laurent expansion at degrees min_degree, min_degree+1, ...
struct LaurentWindow {
  int min_degree = 0;
  std::vector<Residue> coeffs;

  // Coefficient at the given degree; zero below the window.
  Residue at(int degree) const;
};

// Exact arithmetic in Z_q[t, (t+l_1)^{-1}, ..., (t+l_{d-1})^{-1}].
class PolyRing {
 public:
  explicit PolyRing(GroupParams params);

  const GroupParams& params() const noexcept { return params_; }
  const ModRing& zq() const noexcept { return params_.ring(); }
  int rank() const noexcept { return params_.rank(); }
  int poles() const noexcept { return params_.poles(); }

  RationalForm zero() const;
  RationalForm constant(Residue c) const;
  // c * t^k, k >= 0.
  RationalForm t_power(int k, Residue c = 1) const;
  // c * (t + l_pole)^{-depth}, depth may be negative.
  RationalForm pole_power(int pole, int depth, Residue c = 1) const;
  // prod_k (t + l_k)^{exponents[k]}; exponents may be negative.
  RationalForm monomial(std::span<const std::int64_t> exponents) const;

  RationalForm add(const RationalForm& a, const RationalForm& b) const;
  RationalForm sub(const RationalForm& a, const RationalForm& b) const;
  RationalForm neg(const RationalForm& a) const;
  RationalForm mul(const RationalForm& a, const RationalForm& b) const;
  RationalForm scale(const RationalForm& a, Residue c) const;

  // Brings an arbitrary numerator/denominator pair to reduced form.
  RationalForm reduce(RationalForm x) const;
  bool is_reduced(const RationalForm& x) const;

  Decomposition decompose(const RationalForm& x) const;
  RationalForm recompose(const Decomposition& dec) const;

  // Laurent expansion in powers of (t + l_target) for target < d-1, or in
  // powers of t^{-1} for target == d-1, returning order+1 coefficients
  // starting at the lowest occurring degree (degree 0 if there is no pole).
  LaurentWindow series_expand(const RationalForm& x, int target, int order) const;

  // decompose((t + l_pole)^{sign} * recompose(dec)).
  Decomposition shift_multiply(const Decomposition& dec, int pole, int sign) const;

  // Polynomial helpers over Z_q.
  ModPoly poly_add(const ModPoly& a, const ModPoly& b) const;
  ModPoly poly_mul(const ModPoly& a, const ModPoly& b) const;
  ModPoly poly_scale(const ModPoly& a, Residue c) const;
  Residue poly_eval(const ModPoly& a, Residue x) const;
  // a * (t + c)^e.
  ModPoly poly_mul_linear_power(ModPoly a, Residue c, int e) const;
  // Exact quotient a / (t + c); requires a(-c) == 0.
  ModPoly poly_div_linear(const ModPoly& a, Residue c) const;
  // a(u - c) as a polynomial in u.
  ModPoly poly_taylor_shift(const ModPoly& a, Residue c) const;

  std::string to_string(const RationalForm& x) const;
  std::string to_string(const Decomposition& dec) const;

 private:
  // Power series 1/g mod u^n for g(0) a unit.
  std::vector<Residue> series_inverse(const std::vector<Residue>& g, int n) const;
  std::vector<Residue> series_mul(const std::vector<Residue>& a, const std::vector<Residue>& b, int n) const;

  GroupParams params_;
};

}  // namespace dlga
