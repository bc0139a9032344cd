#include "dlga/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dlga {

bool Decomposition::is_zero() const noexcept {
  return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); });
}

bool Decomposition::is_canonical() const noexcept {
  return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty() || p.back() != 0; });
}

Residue LaurentWindow::at(int degree) const {
  if (degree < min_degree) return 0;
  auto idx = static_cast<std::size_t>(degree - min_degree);
  if (idx >= coeffs.size()) throw std::out_of_range("degree outside the expansion window");
  return coeffs[idx];
}

PolyRing::PolyRing(GroupParams params) : params_(std::move(params)) {}

// ---------------------------------------------------------------------------
// Polynomials

ModPoly PolyRing::poly_add(const ModPoly& a, const ModPoly& b) const {
  ModPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) r.coeffs[k] = a.coeffs[k];
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) r.coeffs[k] = zq().add(r.coeffs[k], b.coeffs[k]);
  r.normalize();
  return r;
}

ModPoly PolyRing::poly_mul(const ModPoly& a, const ModPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const auto q = static_cast<std::uint64_t>(params_.q());
  std::vector<std::uint64_t> acc(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t x = 0; x < a.coeffs.size(); ++x) {
    if (a.coeffs[x] == 0) continue;
    for (std::size_t y = 0; y < b.coeffs.size(); ++y) {
      acc[x + y] = (acc[x + y] + static_cast<std::uint64_t>(a.coeffs[x]) * b.coeffs[y]) % q;
    }
  }
  ModPoly r;
  r.coeffs.assign(acc.begin(), acc.end());
  r.normalize();
  return r;
}

ModPoly PolyRing::poly_scale(const ModPoly& a, Residue c) const {
  ModPoly r = a;
  for (auto& v : r.coeffs) v = zq().mul(v, c);
  r.normalize();
  return r;
}

Residue PolyRing::poly_eval(const ModPoly& a, Residue x) const {
  Residue acc = 0;
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) acc = zq().add(zq().mul(acc, x), *it);
  return acc;
}

ModPoly PolyRing::poly_mul_linear_power(ModPoly a, Residue c, int e) const {
  for (int k = 0; k < e; ++k) {
    if (a.is_zero()) return a;
    std::vector<Residue> next(a.coeffs.size() + 1, 0);
    for (std::size_t x = 0; x < a.coeffs.size(); ++x) {
      next[x + 1] = zq().add(next[x + 1], a.coeffs[x]);
      next[x] = zq().add(next[x], zq().mul(a.coeffs[x], c));
    }
    a.coeffs = std::move(next);
    a.normalize();
  }
  return a;
}

ModPoly PolyRing::poly_div_linear(const ModPoly& a, Residue c) const {
  // Synthetic division by t - (-c).
  if (a.is_zero()) return {};
  const Residue root = zq().neg(c);
  ModPoly quot;
  quot.coeffs.assign(a.coeffs.size() - 1, 0);
  Residue carry = 0;
  for (std::size_t k = a.coeffs.size(); k-- > 0;) {
    Residue v = zq().add(a.coeffs[k], zq().mul(carry, root));
    if (k == 0) {
      if (v != 0) throw std::logic_error("poly_div_linear: division is not exact");
    } else {
      quot.coeffs[k - 1] = v;
    }
    carry = v;
  }
  quot.normalize();
  return quot;
}

ModPoly PolyRing::poly_taylor_shift(const ModPoly& a, Residue c) const {
  // Horner in (u - c).
  ModPoly acc;
  const Residue minus_c = zq().neg(c);
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) {
    acc = poly_mul_linear_power(std::move(acc), minus_c, 1);
    acc = poly_add(acc, ModPoly{{*it}});
  }
  acc.normalize();
  return acc;
}

std::vector<Residue> PolyRing::series_mul(const std::vector<Residue>& a, const std::vector<Residue>& b,
                                          int n) const {
  std::vector<Residue> r(static_cast<std::size_t>(n), 0);
  for (std::size_t x = 0; x < a.size() && x < r.size(); ++x) {
    if (a[x] == 0) continue;
    for (std::size_t y = 0; y < b.size() && x + y < r.size(); ++y) {
      r[x + y] = zq().add(r[x + y], zq().mul(a[x], b[y]));
    }
  }
  return r;
}

std::vector<Residue> PolyRing::series_inverse(const std::vector<Residue>& g, int n) const {
  std::vector<Residue> inv(static_cast<std::size_t>(n), 0);
  if (n == 0) return inv;
  const Residue g0_inv = zq().inverse(g.empty() ? 0 : g[0]);
  inv[0] = g0_inv;
  for (int k = 1; k < n; ++k) {
    Residue s = 0;
    for (int x = 1; x <= k && static_cast<std::size_t>(x) < g.size(); ++x) {
      s = zq().add(s, zq().mul(g[static_cast<std::size_t>(x)], inv[static_cast<std::size_t>(k - x)]));
    }
    inv[static_cast<std::size_t>(k)] = zq().mul(zq().neg(s), g0_inv);
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Rational forms

RationalForm PolyRing::zero() const { return RationalForm{{}, std::vector<int>(poles(), 0)}; }

RationalForm PolyRing::constant(Residue c) const {
  RationalForm r = zero();
  r.numerator.coeffs = {zq().reduce(c)};
  r.numerator.normalize();
  return r;
}

RationalForm PolyRing::t_power(int k, Residue c) const {
  RationalForm r = zero();
  if (zq().reduce(c) == 0) return r;
  r.numerator.coeffs.assign(static_cast<std::size_t>(k) + 1, 0);
  r.numerator.coeffs.back() = zq().reduce(c);
  return r;
}

RationalForm PolyRing::pole_power(int pole, int depth, Residue c) const {
  std::vector<std::int64_t> exps(poles(), 0);
  exps.at(static_cast<std::size_t>(pole)) = -depth;
  return scale(monomial(exps), c);
}

RationalForm PolyRing::monomial(std::span<const std::int64_t> exponents) const {
  RationalForm r = constant(1);
  for (int k = 0; k < poles(); ++k) {
    auto e = exponents[static_cast<std::size_t>(k)];
    if (e > 0) {
      r.numerator = poly_mul_linear_power(std::move(r.numerator), params_.l(k), static_cast<int>(e));
    } else {
      r.denom[static_cast<std::size_t>(k)] = static_cast<int>(-e);
    }
  }
  return r;
}

bool PolyRing::is_reduced(const RationalForm& x) const {
  if (x.denom.size() != static_cast<std::size_t>(poles())) return false;
  if (x.numerator.is_zero()) {
    return std::all_of(x.denom.begin(), x.denom.end(), [](int e) { return e == 0; });
  }
  for (int k = 0; k < poles(); ++k) {
    if (x.denom[static_cast<std::size_t>(k)] < 0) return false;
    if (x.denom[static_cast<std::size_t>(k)] > 0 && poly_eval(x.numerator, zq().neg(params_.l(k))) == 0) {
      return false;
    }
  }
  return true;
}

RationalForm PolyRing::reduce(RationalForm x) const {
  x.numerator.normalize();
  if (x.numerator.is_zero()) return zero();
  for (int k = 0; k < poles(); ++k) {
    auto& e = x.denom[static_cast<std::size_t>(k)];
    const Residue root = zq().neg(params_.l(k));
    while (e > 0 && poly_eval(x.numerator, root) == 0) {
      x.numerator = poly_div_linear(x.numerator, params_.l(k));
      --e;
    }
  }
  return x;
}

RationalForm PolyRing::add(const RationalForm& a, const RationalForm& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RationalForm r = zero();
  ModPoly na = a.numerator, nb = b.numerator;
  for (int k = 0; k < poles(); ++k) {
    auto idx = static_cast<std::size_t>(k);
    int e = std::max(a.denom[idx], b.denom[idx]);
    r.denom[idx] = e;
    na = poly_mul_linear_power(std::move(na), params_.l(k), e - a.denom[idx]);
    nb = poly_mul_linear_power(std::move(nb), params_.l(k), e - b.denom[idx]);
  }
  r.numerator = poly_add(na, nb);
  return reduce(std::move(r));
}

RationalForm PolyRing::neg(const RationalForm& a) const { return scale(a, zq().neg(1 % params_.q())); }

RationalForm PolyRing::sub(const RationalForm& a, const RationalForm& b) const { return add(a, neg(b)); }

RationalForm PolyRing::scale(const RationalForm& a, Residue c) const {
  RationalForm r = a;
  r.numerator = poly_scale(a.numerator, zq().reduce(c));
  return reduce(std::move(r));
}

RationalForm PolyRing::mul(const RationalForm& a, const RationalForm& b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  RationalForm r = zero();
  r.numerator = poly_mul(a.numerator, b.numerator);
  for (std::size_t k = 0; k < r.denom.size(); ++k) r.denom[k] = a.denom[k] + b.denom[k];
  return reduce(std::move(r));
}

// ---------------------------------------------------------------------------
// Decomposition

Decomposition PolyRing::decompose(const RationalForm& input) const {
  const RationalForm x = is_reduced(input) ? input : reduce(input);
  Decomposition dec = Decomposition::zero(rank());
  if (x.is_zero()) return dec;

  // Polynomial part: quotient of the numerator by the monic denominator.
  ModPoly denom_poly{{1}};
  for (int k = 0; k < poles(); ++k) {
    denom_poly = poly_mul_linear_power(std::move(denom_poly), params_.l(k), x.denom[static_cast<std::size_t>(k)]);
  }
  const auto& num = x.numerator.coeffs;
  const int dd = denom_poly.degree();
  if (static_cast<int>(num.size()) - 1 >= dd) {
    std::vector<Residue> rem = num;
    std::vector<Residue> quot(num.size() - static_cast<std::size_t>(dd), 0);
    for (int k = static_cast<int>(num.size()) - 1; k >= dd; --k) {
      Residue lead = rem[static_cast<std::size_t>(k)];
      quot[static_cast<std::size_t>(k - dd)] = lead;
      if (lead == 0) continue;
      for (int y = 0; y <= dd; ++y) {
        auto pos = static_cast<std::size_t>(k - dd + y);
        rem[pos] = zq().sub(rem[pos], zq().mul(lead, denom_poly.coeffs[static_cast<std::size_t>(y)]));
      }
    }
    ModPoly qp{quot};
    qp.normalize();
    dec.parts.back() = std::move(qp.coeffs);
  }

  // Principal part at each pole from the local expansion x = u^{-e} N(u - l) / G(u).
  for (int k = 0; k < poles(); ++k) {
    const int e = x.denom[static_cast<std::size_t>(k)];
    if (e == 0) continue;
    auto window = series_expand(x, k, e - 1);
    std::vector<Residue> part(static_cast<std::size_t>(e), 0);
    for (int j = 1; j <= e; ++j) part[static_cast<std::size_t>(j - 1)] = window.at(-j);
    while (!part.empty() && part.back() == 0) part.pop_back();
    dec.parts[static_cast<std::size_t>(k)] = std::move(part);
  }
  return dec;
}

RationalForm PolyRing::recompose(const Decomposition& dec) const {
  RationalForm acc = zero();
  for (int k = 0; k < poles(); ++k) {
    const auto& part = dec.parts.at(static_cast<std::size_t>(k));
    if (part.empty()) continue;
    // sum_j c_j (t+l)^{-j} = (sum_j c_j (t+l)^{depth-j}) / (t+l)^depth
    const int depth = static_cast<int>(part.size());
    ModPoly num;
    for (int j = 1; j <= depth; ++j) {
      ModPoly term = poly_mul_linear_power(ModPoly{{part[static_cast<std::size_t>(j - 1)]}}, params_.l(k), depth - j);
      term.normalize();
      num = poly_add(num, term);
    }
    RationalForm piece = zero();
    piece.numerator = std::move(num);
    piece.denom[static_cast<std::size_t>(k)] = depth;
    acc = add(acc, reduce(std::move(piece)));
  }
  RationalForm poly = zero();
  poly.numerator.coeffs = dec.parts.back();
  poly.numerator.normalize();
  return add(acc, poly);
}

LaurentWindow PolyRing::series_expand(const RationalForm& input, int target, int order) const {
  const RationalForm x = is_reduced(input) ? input : reduce(input);
  const int n = order + 1;
  LaurentWindow out;
  if (x.is_zero()) {
    out.coeffs.assign(static_cast<std::size_t>(n), 0);
    return out;
  }
  if (target < 0 || target >= rank()) throw std::out_of_range("series_expand: bad target");

  if (target < poles()) {
    const Residue lt = params_.l(target);
    ModPoly shifted = poly_taylor_shift(x.numerator, lt);
    ModPoly g{{1}};
    for (int m = 0; m < poles(); ++m) {
      if (m == target) continue;
      g = poly_mul_linear_power(std::move(g), zq().sub(params_.l(m), lt), x.denom[static_cast<std::size_t>(m)]);
    }
    auto ginv = series_inverse(g.coeffs, n);
    out.coeffs = series_mul(shifted.coeffs, ginv, n);
    out.min_degree = -x.denom[static_cast<std::size_t>(target)];
    return out;
  }

  // Expansion in w = t^{-1}: x = w^{E - deg N} * rev(N)(w) / rev(D)(w).
  ModPoly denom_poly{{1}};
  int total = 0;
  for (int k = 0; k < poles(); ++k) {
    denom_poly = poly_mul_linear_power(std::move(denom_poly), params_.l(k), x.denom[static_cast<std::size_t>(k)]);
    total += x.denom[static_cast<std::size_t>(k)];
  }
  std::vector<Residue> rev_num(x.numerator.coeffs.rbegin(), x.numerator.coeffs.rend());
  std::vector<Residue> rev_den(denom_poly.coeffs.rbegin(), denom_poly.coeffs.rend());
  auto dinv = series_inverse(rev_den, n);
  out.coeffs = series_mul(rev_num, dinv, n);
  out.min_degree = total - x.numerator.degree();
  return out;
}

Decomposition PolyRing::shift_multiply(const Decomposition& dec, int pole, int sign) const {
  RationalForm factor = pole_power(pole, sign > 0 ? -1 : 1);
  return decompose(mul(factor, recompose(dec)));
}

// ---------------------------------------------------------------------------
// Printing

std::string PolyRing::to_string(const RationalForm& x) const {
  std::ostringstream os;
  os << "(";
  if (x.numerator.is_zero()) os << "0";
  bool first = true;
  for (std::size_t k = 0; k < x.numerator.coeffs.size(); ++k) {
    if (x.numerator.coeffs[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << x.numerator.coeffs[k] << "*t^" << k;
  }
  os << ")";
  for (std::size_t k = 0; k < x.denom.size(); ++k) {
    if (x.denom[k] > 0) os << " / (t+l" << (k + 1) << ")^" << x.denom[k];
  }
  return os.str();
}

std::string PolyRing::to_string(const Decomposition& dec) const {
  std::ostringstream os;
  for (std::size_t k = 0; k < dec.parts.size(); ++k) {
    if (k) os << ' ';
    os << "part" << (k + 1) << "={";
    bool first = true;
    const bool poly = k + 1 == dec.parts.size();
    for (std::size_t j = 0; j < dec.parts[k].size(); ++j) {
      if (dec.parts[k][j] == 0) continue;
      if (!first) os << ", ";
      first = false;
      os << (poly ? j : j + 1) << ':' << dec.parts[k][j];
    }
    os << '}';
  }
  return os.str();
}

}  // namespace dlga
