// Finite groups as dense Cayley tables.
//
// Elements are integer indices 0..order-1, every map is a flat table, so
// multiplication is one lookup and orbit walks stay cache-friendly.  All
// types are immutable after construction and safe to share across threads.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tb/errors.hpp"
#include "tb/rng.hpp"

namespace tb {

using Elt = std::uint32_t;

inline constexpr std::uint64_t kDefaultOrderCap = 20000;

// Associativity is checked exhaustively up to this order, by random triples above.
inline constexpr std::uint32_t kExhaustiveAssocLimit = 512;

class FiniteGroup {
 public:
  std::uint32_t order() const { return n_; }
  Elt identity() const { return identity_; }
  Elt mul(Elt x, Elt y) const { return mul_[static_cast<std::size_t>(x) * n_ + y]; }
  Elt inv(Elt x) const { return inv_[x]; }
  const std::vector<Elt>& generators() const { return generators_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(Elt x) const {
    return labels_.empty() ? std::to_string(x) : labels_[x];
  }

  // Smallest m >= 1 with x^m = identity.
  std::uint32_t element_order(Elt x) const {
    std::uint32_t m = 1;
    Elt y = x;
    while (y != identity_) {
      y = mul(y, x);
      ++m;
    }
    return m;
  }

  // lcm of all element orders.
  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (Elt x = 0; x < n_; ++x) e = std::lcm(e, std::uint64_t{element_order(x)});
    return e;
  }

  bool is_abelian() const {
    for (Elt x = 0; x < n_; ++x)
      for (Elt y = x + 1; y < n_; ++y)
        if (mul(x, y) != mul(y, x)) return false;
    return true;
  }

  // Closure of a subset under multiplication.
  std::vector<Elt> closure(const std::vector<Elt>& seed) const {
    std::vector<char> in(n_, 0);
    std::vector<Elt> out;
    in[identity_] = 1;
    out.push_back(identity_);
    for (Elt g : seed) {
      if (!in[g]) {
        in[g] = 1;
        out.push_back(g);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (Elt g : seed) {
        const Elt y = mul(out[i], g);
        if (!in[y]) {
          in[y] = 1;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Sorted multiset of element orders; a cheap isomorphism heuristic.
  std::vector<std::uint32_t> order_multiset() const {
    std::vector<std::uint32_t> v(n_);
    for (Elt x = 0; x < n_; ++x) v[x] = element_order(x);
    std::sort(v.begin(), v.end());
    return v;
  }

  static FiniteGroup from_table(std::uint32_t order, const std::vector<std::vector<Elt>>& mul_table,
                                std::optional<std::vector<Elt>> generators = std::nullopt,
                                std::vector<std::string> labels = {},
                                std::uint64_t order_cap = kDefaultOrderCap);

  static FiniteGroup from_permutations(std::uint32_t degree,
                                       const std::vector<std::vector<Elt>>& generator_perms,
                                       std::uint64_t order_cap = kDefaultOrderCap);

 private:
  FiniteGroup() = default;

  void find_identity_and_inverses();
  void check_associativity() const;
  void pick_generators_greedy();
  void check_generators_span() const;

  std::uint32_t n_ = 0;
  std::vector<Elt> mul_;  // n*n row-major
  Elt identity_ = 0;
  std::vector<Elt> inv_;
  std::vector<Elt> generators_;
  std::vector<std::string> labels_;
};

inline void FiniteGroup::find_identity_and_inverses() {
  bool found = false;
  for (Elt e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (Elt x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw NotAGroup("no two-sided identity element");
  inv_.assign(n_, 0);
  for (Elt x = 0; x < n_; ++x) {
    bool ok = false;
    for (Elt y = 0; y < n_; ++y) {
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inv_[x] = y;
        ok = true;
        break;
      }
    }
    if (!ok) throw NotAGroup("element " + std::to_string(x) + " has no two-sided inverse");
  }
}

inline void FiniteGroup::check_associativity() const {
  auto fail = [](Elt x, Elt y, Elt z) {
    throw NotAGroup("associativity fails at triple (" + std::to_string(x) + ", " +
                    std::to_string(y) + ", " + std::to_string(z) + ")");
  };
  if (n_ <= kExhaustiveAssocLimit) {
    for (Elt x = 0; x < n_; ++x)
      for (Elt y = 0; y < n_; ++y)
        for (Elt z = 0; z < n_; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) fail(x, y, z);
  } else {
    Rng rng(0x74627572u ^ n_);  // fixed validation seed, deterministic per order
    for (int t = 0; t < 100000; ++t) {
      const Elt x = static_cast<Elt>(rng.below(n_));
      const Elt y = static_cast<Elt>(rng.below(n_));
      const Elt z = static_cast<Elt>(rng.below(n_));
      if (mul(mul(x, y), z) != mul(x, mul(y, z))) fail(x, y, z);
    }
  }
}

inline void FiniteGroup::pick_generators_greedy() {
  generators_.clear();
  std::vector<char> in(n_, 0);
  std::vector<Elt> reach;
  in[identity_] = 1;
  reach.push_back(identity_);
  for (Elt g = 0; g < n_ && reach.size() < n_; ++g) {
    if (in[g]) continue;
    generators_.push_back(g);
    // grow the closure with the new generator
    for (std::size_t i = 0; i < reach.size(); ++i) {
      for (Elt h : generators_) {
        const Elt y = mul(reach[i], h);
        if (!in[y]) {
          in[y] = 1;
          reach.push_back(y);
        }
      }
    }
  }
}

inline void FiniteGroup::check_generators_span() const {
  if (closure(generators_).size() != n_)
    throw NotAGroup("given generators do not generate the group");
}

inline FiniteGroup FiniteGroup::from_table(std::uint32_t order,
                                           const std::vector<std::vector<Elt>>& mul_table,
                                           std::optional<std::vector<Elt>> generators,
                                           std::vector<std::string> labels,
                                           std::uint64_t order_cap) {
  if (order == 0) throw NotAGroup("order must be positive");
  if (order > order_cap)
    throw TooLarge("order " + std::to_string(order) + " exceeds cap " + std::to_string(order_cap));
  if (mul_table.size() != order) throw NotAGroup("multiplication table must have `order` rows");
  FiniteGroup g;
  g.n_ = order;
  g.mul_.resize(static_cast<std::size_t>(order) * order);
  for (std::uint32_t i = 0; i < order; ++i) {
    if (mul_table[i].size() != order)
      throw NotAGroup("row " + std::to_string(i) + " has wrong length");
    for (std::uint32_t j = 0; j < order; ++j) {
      if (mul_table[i][j] >= order)
        throw NotAGroup("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") out of range");
      g.mul_[static_cast<std::size_t>(i) * order + j] = mul_table[i][j];
    }
  }
  g.find_identity_and_inverses();
  g.check_associativity();
  if (!labels.empty() && labels.size() != order) throw NotAGroup("label count mismatch");
  g.labels_ = std::move(labels);
  if (generators) {
    g.generators_ = *generators;
    for (Elt x : g.generators_)
      if (x >= order) throw NotAGroup("generator index out of range");
    g.check_generators_span();
  } else {
    g.pick_generators_greedy();
  }
  return g;
}

namespace detail {

inline std::vector<Elt> compose_perm(const std::vector<Elt>& p, const std::vector<Elt>& q) {
  // (p.q)(i) = p(q(i))
  std::vector<Elt> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline std::string cycle_notation(const std::vector<Elt>& p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    s += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) s += ' ';
      s += std::to_string(j);
      first = false;
      j = p[j];
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace detail

inline FiniteGroup FiniteGroup::from_permutations(std::uint32_t degree,
                                                  const std::vector<std::vector<Elt>>& generator_perms,
                                                  std::uint64_t order_cap) {
  for (const auto& p : generator_perms) {
    if (p.size() != degree) throw NotAGroup("generator permutation has wrong degree");
    std::vector<char> hit(degree, 0);
    for (Elt v : p) {
      if (v >= degree || hit[v]) throw NotAGroup("generator is not a permutation");
      hit[v] = 1;
    }
  }

  std::vector<Elt> id(degree);
  std::iota(id.begin(), id.end(), 0);

  // breadth-first closure under right multiplication; identity is element 0
  std::vector<std::vector<Elt>> elts;
  std::map<std::vector<Elt>, Elt> index_of;
  elts.push_back(id);
  index_of[id] = 0;
  for (std::size_t i = 0; i < elts.size(); ++i) {
    for (const auto& gp : generator_perms) {
      auto y = detail::compose_perm(elts[i], gp);
      if (!index_of.count(y)) {
        if (elts.size() >= order_cap)
          throw TooLarge("permutation closure exceeds order cap " + std::to_string(order_cap));
        index_of[y] = static_cast<Elt>(elts.size());
        elts.push_back(std::move(y));
      }
    }
  }

  const auto n = static_cast<std::uint32_t>(elts.size());
  FiniteGroup g;
  g.n_ = n;
  g.identity_ = 0;
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      g.mul_[static_cast<std::size_t>(i) * n + j] = index_of.at(detail::compose_perm(elts[i], elts[j]));
  g.inv_.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<Elt> p(degree);
    for (std::uint32_t v = 0; v < degree; ++v) p[elts[i][v]] = v;
    g.inv_[i] = index_of.at(p);
  }
  g.labels_.reserve(n);
  for (const auto& p : elts) g.labels_.push_back(detail::cycle_notation(p));
  g.generators_.clear();
  for (const auto& gp : generator_perms) {
    const Elt idx = index_of.at(gp);
    if (idx != g.identity_ &&
        std::find(g.generators_.begin(), g.generators_.end(), idx) == g.generators_.end())
      g.generators_.push_back(idx);
  }
  if (g.generators_.empty() && n > 1) g.pick_generators_greedy();
  g.check_associativity();
  return g;
}

inline FiniteGroup cyclic_group(std::uint32_t m, std::uint64_t order_cap = kDefaultOrderCap) {
  if (m == 0) throw NotAGroup("cyclic group order must be >= 1");
  if (m > order_cap) throw TooLarge("cyclic group order exceeds cap");
  std::vector<std::vector<Elt>> t(m, std::vector<Elt>(m));
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) t[i][j] = (i + j) % m;
  std::vector<std::string> labels(m);
  for (std::uint32_t i = 0; i < m; ++i) labels[i] = std::to_string(i);
  std::vector<Elt> gens;
  if (m > 1) gens.push_back(1);
  return FiniteGroup::from_table(m, t, gens, std::move(labels), order_cap);
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  std::uint64_t order_cap = kDefaultOrderCap) {
  const std::uint64_t order = std::uint64_t{a.order()} * b.order();
  if (order > order_cap) throw TooLarge("direct product order exceeds cap");
  const auto n = static_cast<std::uint32_t>(order);
  const std::uint32_t nb = b.order();
  auto pack = [nb](Elt x, Elt y) { return x * nb + y; };
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (Elt xa = 0; xa < a.order(); ++xa)
    for (Elt xb = 0; xb < nb; ++xb)
      for (Elt ya = 0; ya < a.order(); ++ya)
        for (Elt yb = 0; yb < nb; ++yb)
          t[pack(xa, xb)][pack(ya, yb)] = pack(a.mul(xa, ya), b.mul(xb, yb));
  std::vector<std::string> labels(n);
  for (Elt xa = 0; xa < a.order(); ++xa)
    for (Elt xb = 0; xb < nb; ++xb)
      labels[pack(xa, xb)] = "(" + a.label(xa) + "," + b.label(xb) + ")";
  std::vector<Elt> gens;
  for (Elt g : a.generators()) gens.push_back(pack(g, b.identity()));
  for (Elt g : b.generators()) gens.push_back(pack(a.identity(), g));
  return FiniteGroup::from_table(n, t, gens, std::move(labels), order_cap);
}

}  // namespace tb
