// Ordinary conjugacy classes by orbit enumeration of x -> g x g^-1.
#pragma once

#include <cstdint>
#include <vector>

#include "tb/group.hpp"

namespace tb {

struct ConjClasses {
  std::vector<Elt> class_reps;           // ascending minimal elements
  std::vector<std::uint32_t> class_sizes;
  std::vector<std::uint32_t> class_of;   // element -> class index
  std::uint32_t identity_class = 0;

  std::uint32_t count() const { return static_cast<std::uint32_t>(class_reps.size()); }
};

inline ConjClasses conjugacy_classes(const FiniteGroup& g) {
  const std::uint32_t n = g.order();
  ConjClasses cc;
  cc.class_of.assign(n, n);
  for (Elt x = 0; x < n; ++x) {
    if (cc.class_of[x] != n) continue;
    const auto id = static_cast<std::uint32_t>(cc.class_reps.size());
    cc.class_reps.push_back(x);
    std::vector<Elt> orbit{x};
    cc.class_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elt gen : g.generators()) {
        const Elt y = g.mul(g.mul(gen, orbit[i]), g.inv(gen));
        if (cc.class_of[y] == n) {
          cc.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    cc.class_sizes.push_back(static_cast<std::uint32_t>(orbit.size()));
  }
  cc.identity_class = cc.class_of[g.identity()];
  return cc;
}

}  // namespace tb
