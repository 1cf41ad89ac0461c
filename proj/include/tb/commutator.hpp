// Twisted-commutator subspaces.  K = span{a - g[a]} is generated by the
// integer vectors delta_x - delta_{g x phi(g)^{-1}} over generators g (any
// group element is a word in generators, and the corresponding differences
// telescope), so the global codimension is an exact integer rank.  Per
// block, the same vectors are projected through e_rho and ranked by SVD;
// blocks with a nonzero quotient are the generalized fixed points.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tb/blocks.hpp"
#include "tb/endomorphism.hpp"
#include "tb/errors.hpp"
#include "tb/group.hpp"
#include "tb/snf.hpp"

namespace tb {

struct TwistedCommutatorReport {
  std::size_t global_codim = 0;            // = R_*(phi): twisted-invariant
  std::vector<std::size_t> per_block_codim;  // functionals are the annihilator
  std::vector<std::size_t> gfp_blocks;
  std::size_t s_star = 0;
};

namespace detail {

// deduplicated pairs (x, g x phi(g)^{-1}) with distinct endpoints
inline std::vector<std::pair<Elt, Elt>> spanning_pairs(const FiniteGroup& g,
                                                       const Endomorphism& phi) {
  std::vector<std::pair<Elt, Elt>> pairs;
  std::vector<char> seen(static_cast<std::size_t>(g.order()) * g.order(), 0);
  for (Elt gen : g.generators()) {
    const Elt pg_inv = phi(g.inv(gen));
    for (Elt x = 0; x < g.order(); ++x) {
      const Elt tx = g.mul(g.mul(gen, x), pg_inv);
      if (tx == x) continue;
      const Elt lo = x < tx ? x : tx, hi = x < tx ? tx : x;
      char& flag = seen[static_cast<std::size_t>(lo) * g.order() + hi];
      if (flag) continue;
      flag = 1;
      pairs.emplace_back(lo, hi);
    }
  }
  return pairs;
}

}  // namespace detail

inline TwistedCommutatorReport twisted_commutator_space(const FiniteGroup& g,
                                                        const Endomorphism& phi) {
  const auto pairs = detail::spanning_pairs(g, phi);
  ZMatrix m(pairs.size(), g.order());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    m.at(i, pairs[i].first) = 1;
    m.at(i, pairs[i].second) = -1;
  }
  TwistedCommutatorReport rep;
  rep.global_codim = g.order() - integer_rank(std::move(m));
  return rep;
}

inline TwistedCommutatorReport per_block_codimension(const FiniteGroup& g,
                                                     const Endomorphism& phi,
                                                     const BlockDecomposition& blocks,
                                                     double tol = 1e-9) {
  TwistedCommutatorReport rep = twisted_commutator_space(g, phi);
  const auto pairs = detail::spanning_pairs(g, phi);
  for (std::size_t r = 0; r < blocks.spectrum.size(); ++r) {
    const Eigen::MatrixXcd& basis = blocks.block_basis[r];
    const std::size_t dim = blocks.block_dims[r];
    // blocks are mutually orthogonal, so the e_rho component of a vector is
    // its orthogonal projection; rows below are its basis coordinates
    Eigen::MatrixXcd s(pairs.size(), dim);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      s.row(i) = (basis.row(pairs[i].first) - basis.row(pairs[i].second)).conjugate();
    std::size_t rank = 0;
    if (pairs.size() > 0) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s);
      const auto& sv = svd.singularValues();
      // rows have ambient norm sqrt(2), so a top singular value below tol
      // means the block sees nothing but rounding noise: rank 0
      if (sv.size() > 0 && sv[0] > tol) {
        const double cut = tol * sv[0];
        for (Eigen::Index i = 0; i < sv.size(); ++i) {
          if (sv[i] > cut / 10 && sv[i] < cut * 10)
            throw RankUnstable("singular value " + std::to_string(sv[i]) +
                               " sits inside the guard band around " + std::to_string(cut) +
                               " in block " + std::to_string(r) +
                               "; rerun with a different tolerance");
          if (sv[i] > cut) ++rank;
        }
      }
    }
    rep.per_block_codim.push_back(dim - rank);
    if (dim > rank) rep.gfp_blocks.push_back(r);
    rep.s_star += dim - rank;
  }
  if (rep.s_star != rep.global_codim)
    throw InternalInconsistency("per-block codimensions sum to " + std::to_string(rep.s_star) +
                                " but the exact global codimension is " +
                                std::to_string(rep.global_codim));
  return rep;
}

}  // namespace tb
