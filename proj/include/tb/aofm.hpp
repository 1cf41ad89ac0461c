// Functionals on C[G] through their block matrices, the dual norm, Jordan
// decomposition into positive parts, and the atomic operator-valued measure
// picture over the finite block spectrum.  A functional with weight vector
// w pairs as f(a) = sum_rho trace(F_rho rhohat(a)), rhohat(a) = sum a(g)rho(g),
// with F_rho = (d_rho/|G|) sum_h w(h) rho(h)^*.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "tb/algebra.hpp"
#include "tb/blocks.hpp"
#include "tb/commutator.hpp"
#include "tb/endomorphism.hpp"
#include "tb/errors.hpp"

namespace tb {

inline double nuclear_norm(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues().sum();
}

inline std::vector<Eigen::MatrixXcd> block_matrices(const FunctionalOnA& f,
                                                    const BlockDecomposition& blocks) {
  const FiniteGroup& g = blocks.group();
  const Elt n = g.order();
  std::vector<Eigen::MatrixXcd> out;
  for (std::size_t r = 0; r < blocks.spectrum.size(); ++r) {
    const auto& rho = blocks.irrep_matrices(r);
    const std::uint64_t d = blocks.table().degrees[r];
    Eigen::MatrixXcd fm = Eigen::MatrixXcd::Zero(d, d);
    for (Elt h = 0; h < n; ++h) fm += f.weights[h] * rho[h].adjoint();
    fm *= static_cast<double>(d) / static_cast<double>(n);
    out.push_back(std::move(fm));
  }
  return out;
}

inline FunctionalOnA weights_from_blocks(const BlockDecomposition& blocks,
                                         const std::vector<Eigen::MatrixXcd>& mats) {
  const FiniteGroup& g = blocks.group();
  FunctionalOnA f(g.order());
  for (std::size_t r = 0; r < blocks.spectrum.size(); ++r) {
    const auto& rho = blocks.irrep_matrices(r);
    for (Elt x = 0; x < g.order(); ++x) f.weights[x] += (mats[r] * rho[x]).trace();
  }
  return f;
}

// dual norm of (sup over blocks of the operator norm): sum of nuclear norms
inline double functional_norm(const FunctionalOnA& f, const BlockDecomposition& blocks) {
  double norm = 0.0;
  for (const auto& fm : block_matrices(f, blocks)) norm += nuclear_norm(fm);
  return norm;
}

struct JordanParts {
  FunctionalOnA f1_plus, f1_minus, f2_plus, f2_minus;
};

// f = (f1+ - f1-) + i (f2+ - f2-) with all four parts positive, blockwise:
// F1 = (F + F*)/2 and F2 = (F - F*)/(2i) are self-adjoint, and each splits
// into its positive and negative spectral parts.
inline JordanParts jordan_decompose(const FunctionalOnA& f, const BlockDecomposition& blocks) {
  const auto mats = block_matrices(f, blocks);
  std::vector<Eigen::MatrixXcd> p1, m1, p2, m2;
  for (const auto& fm : mats) {
    const Eigen::MatrixXcd f1 = (fm + fm.adjoint()) / 2.0;
    const Eigen::MatrixXcd f2 = (fm - fm.adjoint()) / std::complex<double>(0.0, 2.0);
    for (int which = 0; which < 2; ++which) {
      const Eigen::MatrixXcd& sa = which == 0 ? f1 : f2;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sa);
      Eigen::MatrixXcd plus = Eigen::MatrixXcd::Zero(sa.rows(), sa.cols());
      Eigen::MatrixXcd minus = plus;
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()[i];
        const Eigen::VectorXcd u = es.eigenvectors().col(i);
        if (lam > 0.0)
          plus += lam * u * u.adjoint();
        else
          minus += -lam * u * u.adjoint();
      }
      (which == 0 ? p1 : p2).push_back(std::move(plus));
      (which == 0 ? m1 : m2).push_back(std::move(minus));
    }
  }
  JordanParts parts{weights_from_blocks(blocks, p1), weights_from_blocks(blocks, m1),
                    weights_from_blocks(blocks, p2), weights_from_blocks(blocks, m2)};
  const Eigen::VectorXcd recon =
      parts.f1_plus.weights - parts.f1_minus.weights +
      std::complex<double>(0.0, 1.0) * (parts.f2_plus.weights - parts.f2_minus.weights);
  if ((recon - f.weights).cwiseAbs().maxCoeff() > 1e-9)
    throw InternalInconsistency("jordan parts do not reassemble the functional");
  return parts;
}

// Atomic operator-valued measure on the power set of the block spectrum.
// Every subset of a finite discrete spectrum is closed, so the measure is
// determined by its atoms and regularity is automatic.
struct FiniteAOFM {
  std::vector<Eigen::MatrixXcd> atoms;  // block label -> F_rho
};

inline FiniteAOFM aofm_from_functional(const FunctionalOnA& f, const BlockDecomposition& blocks) {
  return FiniteAOFM{block_matrices(f, blocks)};
}

// mu(E) as a functional: only the atoms inside E contribute
inline FunctionalOnA aofm_value(const FiniteAOFM& mu, const std::vector<std::size_t>& subset,
                                const BlockDecomposition& blocks) {
  std::vector<Eigen::MatrixXcd> mats;
  std::vector<char> in(mu.atoms.size(), 0);
  for (std::size_t r : subset) in[r] = 1;
  for (std::size_t r = 0; r < mu.atoms.size(); ++r)
    mats.push_back(in[r] ? mu.atoms[r]
                         : Eigen::MatrixXcd::Zero(mu.atoms[r].rows(), mu.atoms[r].cols()));
  return weights_from_blocks(blocks, mats);
}

inline FunctionalOnA aofm_total(const FiniteAOFM& mu, const BlockDecomposition& blocks) {
  return weights_from_blocks(blocks, mu.atoms);
}

// sup over partitions of sum ||mu(E_i)||; attained at the atomic partition
inline double aofm_norm(const FiniteAOFM& mu) {
  double norm = 0.0;
  for (const auto& atom : mu.atoms) norm += nuclear_norm(atom);
  return norm;
}

struct TwistedInvarianceReport {
  bool invariant = false;
  double max_violation = 0.0;  // max |w(x) - w(g x phi(g)^{-1})| over gens g
  std::vector<bool> atom_invariant;
  std::vector<double> atom_norms;
  std::vector<std::size_t> gfp_blocks;
  double off_gfp_mass = 0.0;
  bool concentrated_on_gfp = false;
};

// Decides f(a) = f(g[a]) on generators and basis deltas, which is w(x) =
// w(g x phi(g)^{-1}).  For invariant f this asserts the two finite-scale
// lemmas: every atom of the associated measure is itself twisted invariant,
// and atoms vanish outside the generalized fixed point blocks.
inline TwistedInvarianceReport check_twisted_invariance(const FunctionalOnA& f,
                                                        const Endomorphism& phi,
                                                        const BlockDecomposition& blocks,
                                                        double tol = 1e-12) {
  const FiniteGroup& g = blocks.group();
  TwistedInvarianceReport rep;

  auto violation = [&](const Eigen::VectorXcd& w) {
    double worst = 0.0;
    for (Elt gen : g.generators()) {
      const Elt pg_inv = phi(g.inv(gen));
      for (Elt x = 0; x < g.order(); ++x) {
        const double v = std::abs(w[x] - w[g.mul(g.mul(gen, x), pg_inv)]);
        if (v > worst) worst = v;
      }
    }
    return worst;
  };

  rep.max_violation = violation(f.weights);
  rep.invariant = rep.max_violation <= tol;
  if (!rep.invariant) return rep;

  const FiniteAOFM mu = aofm_from_functional(f, blocks);
  const TwistedCommutatorReport tc = per_block_codimension(g, phi, blocks);
  rep.gfp_blocks = tc.gfp_blocks;
  std::vector<char> in_gfp(mu.atoms.size(), 0);
  for (std::size_t r : tc.gfp_blocks) in_gfp[r] = 1;

  rep.concentrated_on_gfp = true;
  for (std::size_t r = 0; r < mu.atoms.size(); ++r) {
    const FunctionalOnA part = aofm_value(mu, {r}, blocks);
    const bool part_ok = violation(part.weights) <= 1e-9;
    rep.atom_invariant.push_back(part_ok);
    if (!part_ok)
      throw InternalInconsistency("atom " + std::to_string(r) +
                                  " of an invariant functional is not twisted invariant");
    const double mass = nuclear_norm(mu.atoms[r]);
    rep.atom_norms.push_back(mass);
    if (!in_gfp[r]) {
      rep.off_gfp_mass += mass;
      if (mass > 1e-9) {
        rep.concentrated_on_gfp = false;
        throw InternalInconsistency("invariant functional carries mass " + std::to_string(mass) +
                                    " on non-fixed block " + std::to_string(r));
      }
    }
  }
  return rep;
}

}  // namespace tb
