// The induced map on the unitary dual and its fixed points.  rho is fixed
// iff chi_rho(phi(x)) = chi_rho(x) for all x; equality is decided in the
// exact mod-p table and cross-checked against the complex lift.
#pragma once

#include <cstdint>
#include <vector>

#include "tb/character_table.hpp"
#include "tb/endomorphism.hpp"
#include "tb/errors.hpp"

namespace tb {

struct DualMapReport {
  std::vector<std::size_t> class_image;  // class j -> class of phi(rep_j)
  std::vector<std::size_t> fixed_irreps;
  std::size_t s_number = 0;
  std::vector<bool> irreducible_after_composition;  // <chi rho phi, chi rho phi> = 1
};

inline DualMapReport dual_map(const FiniteGroup& g, const Endomorphism& phi,
                              const CharacterTable& t) {
  using namespace modp;
  const std::size_t k = t.num_irreps;
  const u64 p = t.prime;
  DualMapReport rep;

  rep.class_image.resize(k);
  for (std::size_t j = 0; j < k; ++j)
    rep.class_image[j] = t.classes.class_of[phi(t.classes.class_reps[j])];
  // phi maps conjugate elements to conjugate elements; the class map must
  // not depend on the representative
  for (Elt x = 0; x < g.order(); ++x)
    if (t.classes.class_of[phi(x)] != rep.class_image[t.classes.class_of[x]])
      throw InternalInconsistency("induced class map depends on the representative");

  rep.irreducible_after_composition.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    bool fixed_modp = true;
    double max_diff = 0.0;
    std::vector<u64> composed(k);
    for (std::size_t j = 0; j < k; ++j) {
      composed[j] = t.values_modp[r][rep.class_image[j]];
      if (composed[j] != t.values_modp[r][j]) fixed_modp = false;
      const double diff =
          std::abs(t.values_complex[r][rep.class_image[j]] - t.values_complex[r][j]);
      if (diff > max_diff) max_diff = diff;
    }
    const bool fixed_complex = max_diff < 1e-9;
    if (fixed_modp != fixed_complex)
      throw ModPComplexDisagreement("fixed-point decision differs between mod-p and complex "
                                    "tables for irrep " +
                                    std::to_string(r));
    if (fixed_modp) rep.fixed_irreps.push_back(r);
    // <chi phi, chi phi> is a sum of squared multiplicities bounded by
    // deg^2 <= |G| < p, so the residue decides the integer value
    rep.irreducible_after_composition[r] = char_inner_product_modp(t, composed, composed) == 1;
  }
  rep.s_number = rep.fixed_irreps.size();
  return rep;
}

}  // namespace tb
