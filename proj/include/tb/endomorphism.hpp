// Verified endomorphisms of a FiniteGroup.
//
// An Endomorphism stores the full image table.  Verification is always
// exhaustive over all pairs: a silent non-homomorphism would poison every
// theorem check downstream.  The referenced group must outlive the map.
#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "tb/errors.hpp"
#include "tb/group.hpp"

namespace tb {

class Endomorphism {
 public:
  Endomorphism(const FiniteGroup& g, std::vector<Elt> image_table)
      : group_(&g), image_(std::move(image_table)) {
    validate();
  }

  const FiniteGroup& group() const { return *group_; }
  Elt operator()(Elt x) const { return image_[x]; }
  const std::vector<Elt>& image_table() const { return image_; }
  bool is_automorphism() const { return is_automorphism_; }

  bool is_identity() const {
    for (Elt x = 0; x < group_->order(); ++x)
      if (image_[x] != x) return false;
    return true;
  }

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.group_ == b.group_ && a.image_ == b.image_;
  }

 private:
  void validate() {
    const FiniteGroup& g = *group_;
    if (image_.size() != g.order())
      throw NotAHomomorphism("image table has wrong length", 0, 0);
    for (Elt x = 0; x < g.order(); ++x)
      if (image_[x] >= g.order())
        throw NotAHomomorphism("image out of range at " + std::to_string(x), x, x);
    if (image_[g.identity()] != g.identity())
      throw NotAHomomorphism("identity is not fixed", g.identity(), g.identity());
    for (Elt x = 0; x < g.order(); ++x)
      for (Elt y = 0; y < g.order(); ++y)
        if (image_[g.mul(x, y)] != g.mul(image_[x], image_[y]))
          throw NotAHomomorphism("image(xy) != image(x)image(y) at (" + std::to_string(x) +
                                     ", " + std::to_string(y) + ")",
                                 x, y);
    std::vector<char> hit(g.order(), 0);
    std::uint32_t distinct = 0;
    for (Elt x = 0; x < g.order(); ++x) {
      if (!hit[image_[x]]) {
        hit[image_[x]] = 1;
        ++distinct;
      }
    }
    is_automorphism_ = distinct == g.order();
  }

  const FiniteGroup* group_;
  std::vector<Elt> image_;
  bool is_automorphism_ = false;
};

// Extends generator images to the whole group along a breadth-first closure.
// Each element is reached by one defining word; a conflicting second word
// raises NotWellDefined, and the final exhaustive pair check raises
// NotAHomomorphism with a witness.
inline Endomorphism hom_from_generator_images(const FiniteGroup& g,
                                              const std::vector<Elt>& images_of_generators) {
  const auto& gens = g.generators();
  if (images_of_generators.size() != gens.size())
    throw NotWellDefined("need exactly one image per generator (" + std::to_string(gens.size()) +
                         " expected)");
  for (Elt v : images_of_generators)
    if (v >= g.order()) throw NotWellDefined("generator image out of range");

  constexpr Elt kUnset = static_cast<Elt>(-1);
  std::vector<Elt> image(g.order(), kUnset);
  image[g.identity()] = g.identity();
  std::deque<Elt> queue{g.identity()};
  while (!queue.empty()) {
    const Elt x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elt y = g.mul(x, gens[i]);
      const Elt proposed = g.mul(image[x], images_of_generators[i]);
      if (image[y] == kUnset) {
        image[y] = proposed;
        queue.push_back(y);
      } else if (image[y] != proposed) {
        throw NotWellDefined("element " + std::to_string(y) +
                             " receives two different images from different generator words");
      }
    }
  }
  for (Elt x = 0; x < g.order(); ++x)
    if (image[x] == kUnset)
      throw NotWellDefined("generators do not reach element " + std::to_string(x));
  return Endomorphism(g, std::move(image));
}

inline Endomorphism identity_endomorphism(const FiniteGroup& g) {
  std::vector<Elt> image(g.order());
  for (Elt x = 0; x < g.order(); ++x) image[x] = x;
  return Endomorphism(g, std::move(image));
}

inline Endomorphism trivial_endomorphism(const FiniteGroup& g) {
  return Endomorphism(g, std::vector<Elt>(g.order(), g.identity()));
}

// x -> h x h^-1
inline Endomorphism inner_automorphism(const FiniteGroup& g, Elt h) {
  std::vector<Elt> image(g.order());
  for (Elt x = 0; x < g.order(); ++x) image[x] = g.mul(g.mul(h, x), g.inv(h));
  return Endomorphism(g, std::move(image));
}

// compose(f, h)(x) = f(h(x))
inline Endomorphism compose(const Endomorphism& f, const Endomorphism& h) {
  if (&f.group() != &h.group())
    throw NotAHomomorphism("cannot compose endomorphisms of different groups", 0, 0);
  const FiniteGroup& g = f.group();
  std::vector<Elt> image(g.order());
  for (Elt x = 0; x < g.order(); ++x) image[x] = f(h(x));
  return Endomorphism(g, std::move(image));
}

inline Endomorphism endo_power(const Endomorphism& f, std::uint32_t n) {
  if (n == 0) throw Error("endo_power requires n >= 1");
  Endomorphism r = f;
  for (std::uint32_t i = 1; i < n; ++i) r = compose(r, f);
  return r;
}

}  // namespace tb
