// Twisted conjugacy classes and Reidemeister numbers.
//
// x ~ g x f(g^-1) is a G-action on the underlying set, so merging along
// generators only is enough to recover the full partition.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tb/endomorphism.hpp"
#include "tb/errors.hpp"
#include "tb/group.hpp"

namespace tb {

// g x f(g)^-1 ... the action sends x to g * x * f(g^-1).
inline Elt twisted_image(const FiniteGroup& g, const Endomorphism& f, Elt gen, Elt x) {
  return g.mul(g.mul(gen, x), f(g.inv(gen)));
}

struct TwistedPartition {
  const FiniteGroup* group = nullptr;
  const Endomorphism* endo = nullptr;
  std::vector<Elt> class_of;        // element -> class id
  std::vector<Elt> representatives; // minimal element per class, ascending
  std::uint32_t reidemeister_number = 0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::uint32_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace detail

inline TwistedPartition twisted_classes(const FiniteGroup& g, const Endomorphism& f) {
  const std::uint32_t n = g.order();
  detail::UnionFind uf(n);
  for (Elt x = 0; x < n; ++x)
    for (Elt gen : g.generators()) uf.unite(x, twisted_image(g, f, gen, x));

  // renumber classes by minimal representative for a deterministic output
  std::vector<Elt> min_of_root(n, n);
  for (Elt x = 0; x < n; ++x) {
    const std::uint32_t r = uf.find(x);
    min_of_root[r] = std::min(min_of_root[r], x);
  }
  TwistedPartition part;
  part.group = &g;
  part.endo = &f;
  for (Elt r = 0; r < n; ++r)
    if (min_of_root[r] != n) part.representatives.push_back(min_of_root[r]);
  std::sort(part.representatives.begin(), part.representatives.end());
  std::vector<Elt> class_id(n, 0);
  for (std::uint32_t c = 0; c < part.representatives.size(); ++c)
    class_id[uf.find(part.representatives[c])] = c;
  part.class_of.resize(n);
  for (Elt x = 0; x < n; ++x) part.class_of[x] = class_id[uf.find(x)];
  part.reidemeister_number = static_cast<std::uint32_t>(part.representatives.size());
  return part;
}

inline std::uint32_t reidemeister_number(const FiniteGroup& g, const Endomorphism& f) {
  return twisted_classes(g, f).reidemeister_number;
}

// Orbit-counting cross-check: (1/|G|) sum_g #{x : g x f(g^-1) = x}.
// Quadratic in |G|; lives in the test surface, not the hot path.
inline std::uint32_t burnside_count_oracle(const FiniteGroup& g, const Endomorphism& f) {
  const std::uint32_t n = g.order();
  std::uint64_t total = 0;
  for (Elt a = 0; a < n; ++a)
    for (Elt x = 0; x < n; ++x)
      if (twisted_image(g, f, a, x) == x) ++total;
  if (total % n != 0)
    throw InternalInconsistency("fixed-point total " + std::to_string(total) +
                                " is not divisible by the group order " + std::to_string(n));
  return static_cast<std::uint32_t>(total / n);
}

}  // namespace tb
