#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dlga/polyring.hpp"

namespace dlga {

// (m, R') coordinates of the affine matrix [[A, A R'], [0, 1]] with
// A = prod_k (t + l_k)^{m_k}.
struct GroupElement {
  std::vector<std::int64_t> m;
  Decomposition rprime;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

enum class GenKind { Type1, Type2 };

// Pole indices i, j are 0-based; literals print them 1-based.
// Type 1: upper-left entry (t + l_i), R' = b (t + l_i)^{-1}.
// Type 2: upper-left entry (t + l_i)(t + l_j)^{-1}, R' = b (t + l_i)^{-1}, i < j.
struct Generator {
  GenKind kind = GenKind::Type1;
  int i = 0;
  int j = -1;
  Residue b = 0;
  bool inverse = false;

  Generator base() const {
    Generator g = *this;
    g.inverse = false;
    return g;
  }
  Generator inverted() const {
    Generator g = *this;
    g.inverse = !g.inverse;
    return g;
  }
  friend bool operator==(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

struct TreeMetric {
  std::vector<std::int64_t> u;
  std::vector<std::int64_t> v;
  std::int64_t dT = 0;
};

// BFS ball; elements are listed in discovery order, lengths are word lengths.
struct Ball {
  std::vector<GroupElement> elements;
  std::vector<int> length;
  std::unordered_map<GroupElement, int, GroupElementHash> index;

  std::size_t size() const noexcept { return elements.size(); }
};

class Group {
 public:
  explicit Group(GroupParams params);

  const GroupParams& params() const noexcept { return ring_.params(); }
  const PolyRing& ring() const noexcept { return ring_; }
  int rank() const noexcept { return ring_.rank(); }

  GroupElement identity() const;
  bool is_identity(const GroupElement& g) const;

  // All type-1 then all type-2 generators, each followed by its inverse.
  std::vector<Generator> generators() const;
  // Generators without the inverse flag.
  std::vector<Generator> base_generators() const;

  GroupElement element_of(const Generator& s) const;
  GroupElement apply(const GroupElement& g, const Generator& s) const;
  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement invert(const GroupElement& g) const;
  GroupElement evaluate(const Word& word) const;

  // R = prod (t + l_k)^{m_k} R'.
  RationalForm full_r(const GroupElement& g) const;
  TreeMetric tree_distance(const GroupElement& g) const;

  Ball ball(int radius) const;

  std::string to_string(const GroupElement& g) const;

 private:
  RationalForm a_power(const std::vector<std::int64_t>& m, int sign) const;

  PolyRing ring_;
};

std::string to_string(const Generator& s);

}  // namespace dlga
