// Reidemeister numbers on finitely generated abelian groups.  Twisted
// conjugacy in an abelian group collapses to cosets of Im(1 - phi), so
// R(phi) = #coker(1 - phi), computed from the Smith form of the cokernel
// presentation over the group presentation Z^r + sum Z/m_i.  Everything is
// exact big-integer arithmetic: determinants of matrix powers grow fast.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "tb/errors.hpp"
#include "tb/snf.hpp"

namespace tb {

struct FgAbelianGroup {
  std::size_t rank = 0;            // free part Z^rank
  std::vector<mpz_class> torsion;  // m_1 | m_2 | ..., each >= 2

  std::size_t gens() const { return rank + torsion.size(); }
};

inline FgAbelianGroup fg_abelian(std::size_t rank, std::vector<mpz_class> torsion) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw NotAGroup("torsion invariant " + torsion[i].get_str() + " below 2");
    if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
      throw NotAGroup("torsion invariants must form a divisibility chain: " +
                      torsion[i].get_str() + " does not divide " + torsion[i + 1].get_str());
  }
  return FgAbelianGroup{rank, std::move(torsion)};
}

struct AbelianEndo {
  // acts on generator coordinate columns; rows/cols 0..rank-1 are the free
  // part, the rest torsion
  ZMatrix matrix;
};

// Validates that the matrix descends to the quotient: torsion columns have
// zero free part and the relation lattice (m_j on torsion generator j) maps
// into itself.  Torsion-row entries are then canonicalized mod the modulus,
// which changes the lift only by a lattice map and so fixes the same
// endomorphism (and all its powers).
inline AbelianEndo abelian_endo(const FgAbelianGroup& g, ZMatrix m) {
  const std::size_t r = g.rank, t = g.torsion.size(), n = g.gens();
  if (m.rows != n || m.cols != n)
    throw NotWellDefined("endomorphism matrix must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < r; ++i)
      if (m.at(i, r + j) != 0)
        throw NotWellDefined("torsion generator " + std::to_string(j) +
                             " maps into the free part");
    for (std::size_t i = 0; i < t; ++i)
      if ((g.torsion[j] * m.at(r + i, r + j)) % g.torsion[i] != 0)
        throw NotWellDefined("relation " + g.torsion[j].get_str() + "*e_" + std::to_string(r + j) +
                             " does not map into the relation lattice");
  }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class& e = m.at(r + i, j);
      mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), g.torsion[i].get_mpz_t());
    }
  return AbelianEndo{std::move(m)};
}

// R(phi) = #coker(1 - phi), or nullopt for Infinite.  The cokernel is
// presented by [I - A | relation columns]; it is finite exactly when that
// matrix has full row rank, which happens exactly when det(I - M) != 0 for
// the free-part block M, i.e. 1 is not an eigenvalue of M; both routes are
// computed and compared.
inline std::optional<mpz_class> reidemeister_abelian(const FgAbelianGroup& g,
                                                     const AbelianEndo& phi) {
  const std::size_t r = g.rank, t = g.torsion.size(), n = g.gens();
  ZMatrix p(n, n + t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.at(i, j) = (i == j ? 1 : 0) - phi.matrix.at(i, j);
  for (std::size_t j = 0; j < t; ++j) p.at(r + j, n + j) = g.torsion[j];

  ZMatrix free_part(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) free_part.at(i, j) = p.at(i, j);
  const bool finite_by_det = bareiss_determinant(free_part) != 0;

  const SnfResult snf = smith_normal_form(p);
  const auto factors = snf.invariant_factors();
  const bool finite_by_snf = factors.size() == n;
  if (finite_by_snf != finite_by_det)
    throw InternalInconsistency("free-part determinant and Smith rank disagree on finiteness");
  if (!finite_by_snf) return std::nullopt;
  mpz_class total = 1;
  for (const mpz_class& d : factors) total *= d;
  return total;
}

inline std::vector<std::optional<mpz_class>> r_sequence(const FgAbelianGroup& g,
                                                        const AbelianEndo& phi, std::size_t n_max) {
  std::vector<std::optional<mpz_class>> seq;
  AbelianEndo power = phi;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1) power = abelian_endo(g, zmat_mul(power.matrix, phi.matrix));
    seq.push_back(reidemeister_abelian(g, power));
  }
  return seq;
}

}  // namespace tb
