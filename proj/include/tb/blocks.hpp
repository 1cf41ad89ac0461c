// Peter-Weyl block structure of C[G]: central idempotents from characters,
// orthonormal bases of the blocks e_rho * C[G], and explicit unitary irrep
// matrices obtained by splitting the left regular action on a block with a
// random self-adjoint commutant element.  For finite G the primitive
// spectrum is finite discrete Hausdorff, so these blocks are exactly the
// Glimm quotients.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "tb/algebra.hpp"
#include "tb/character_table.hpp"
#include "tb/errors.hpp"
#include "tb/group.hpp"
#include "tb/rng.hpp"

namespace tb {

inline constexpr std::uint64_t kIrrepDegreeCap = 5;

struct BlockDecomposition {
  std::vector<std::size_t> spectrum;          // labels = character table rows
  std::vector<AlgebraElement> idempotents;    // e_rho = (d/|G|) sum conj(chi(g)) delta_g
  std::vector<std::size_t> block_dims;        // d_rho^2
  std::vector<Eigen::MatrixXcd> block_basis;  // |G| x d^2, orthonormal columns

  const FiniteGroup& group() const { return *group_; }
  const CharacterTable& table() const { return table_; }
  std::uint64_t seed() const { return seed_; }

  // d x d unitary matrices rho(g), one per group element, computed on the
  // first request and cached.  Degrees above kIrrepDegreeCap are refused:
  // the randomized splitting is the one numerically delicate step here.
  const std::vector<Eigen::MatrixXcd>& irrep_matrices(std::size_t rho) const;

  const FiniteGroup* group_ = nullptr;
  CharacterTable table_;
  std::uint64_t seed_ = 0;
  mutable std::vector<std::vector<Eigen::MatrixXcd>> cache_;
  mutable std::vector<char> cached_;
};

inline BlockDecomposition block_decomposition(const FiniteGroup& g, const CharacterTable& t,
                                              std::uint64_t seed = 0x626c6bu) {
  const Elt n = g.order();
  const std::size_t k = t.num_irreps;
  BlockDecomposition b;
  b.group_ = &g;
  b.table_ = t;
  b.seed_ = seed;
  b.cache_.resize(k);
  b.cached_.assign(k, 0);

  for (std::size_t r = 0; r < k; ++r) {
    b.spectrum.push_back(r);
    const double scale = static_cast<double>(t.degrees[r]) / static_cast<double>(n);
    AlgebraElement e(n);
    for (Elt x = 0; x < n; ++x)
      e.coeffs[x] = scale * std::conj(t.values_complex[r][t.classes.class_of[x]]);
    b.idempotents.push_back(std::move(e));
    b.block_dims.push_back(static_cast<std::size_t>(t.degrees[r] * t.degrees[r]));
  }

  // cheap certificates now (self-idempotence, partition of unity); the
  // pairwise products are covered by the test suite on the corpus
  Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(n);
  for (std::size_t r = 0; r < k; ++r) {
    const AlgebraElement sq = convolve(g, b.idempotents[r], b.idempotents[r]);
    if ((sq.coeffs - b.idempotents[r].coeffs).cwiseAbs().maxCoeff() > 1e-9)
      throw InternalInconsistency("central idempotent fails e*e = e");
    unit += b.idempotents[r].coeffs;
  }
  unit[g.identity()] -= 1.0;
  if (unit.cwiseAbs().maxCoeff() > 1e-9)
    throw InternalInconsistency("central idempotents do not sum to the unit");

  for (std::size_t r = 0; r < k; ++r) {
    // columns e_rho * delta_x, i.e. right translates of e_rho
    Eigen::MatrixXcd m(n, n);
    const auto& e = b.idempotents[r].coeffs;
    for (Elt x = 0; x < n; ++x) {
      const Elt xi = g.inv(x);
      for (Elt h = 0; h < n; ++h) m(h, x) = e[g.mul(h, xi)];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cut = 1e-9 * sv[0];
    std::size_t rank = 0;
    while (rank < static_cast<std::size_t>(sv.size()) && sv[rank] > cut) ++rank;
    if (rank != b.block_dims[r])
      throw InternalInconsistency("block " + std::to_string(r) + " has rank " +
                                  std::to_string(rank) + ", expected d^2 = " +
                                  std::to_string(b.block_dims[r]));
    b.block_basis.push_back(svd.matrixU().leftCols(rank));
  }
  return b;
}

inline const std::vector<Eigen::MatrixXcd>& BlockDecomposition::irrep_matrices(
    std::size_t rho) const {
  if (cached_[rho]) return cache_[rho];
  const FiniteGroup& g = *group_;
  const Elt n = g.order();
  const std::uint64_t d = table_.degrees[rho];
  if (d > kIrrepDegreeCap)
    throw TooLarge("irrep degree " + std::to_string(d) + " exceeds the matrix cap " +
                   std::to_string(kIrrepDegreeCap));

  std::vector<Eigen::MatrixXcd> mats(n);
  if (d == 1) {
    for (Elt x = 0; x < n; ++x) {
      Eigen::MatrixXcd m(1, 1);
      m(0, 0) = table_.values_complex[rho][table_.classes.class_of[x]];
      mats[x] = std::move(m);
    }
    cache_[rho] = std::move(mats);
    cached_[rho] = 1;
    return cache_[rho];
  }

  const Eigen::MatrixXcd& basis = block_basis[rho];
  const std::size_t dim = block_dims[rho];  // = d^2
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rng rng(seed_ ^ (0x9e3779b97f4a7c15ull * (rho + 1)) ^ static_cast<std::uint64_t>(attempt));
    AlgebraElement raw(n);
    for (Elt x = 0; x < n; ++x) raw.coeffs[x] = std::complex<double>(rng.normal(), rng.normal());
    const AlgebraElement a = convolve(g, idempotents[rho], raw);

    // right convolution by a commutes with the left action; restricted to
    // the block and symmetrized it is a random element of the commutant M_d
    Eigen::MatrixXcd rfull(n, n);
    for (Elt x = 0; x < n; ++x) {
      const Elt xi = g.inv(x);
      for (Elt h = 0; h < n; ++h) rfull(h, x) = a.coeffs[g.mul(xi, h)];
    }
    Eigen::MatrixXcd r = basis.adjoint() * rfull * basis;
    Eigen::MatrixXcd c = r + r.adjoint();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double spread = ev[dim - 1] - ev[0];
    if (spread < 1e-9) continue;  // collapsed spectrum, reseed
    const double gap = 1e-6 * spread;
    // expect d clusters of size d, one per copy of rho inside the block
    std::vector<std::size_t> starts{0};
    for (std::size_t i = 1; i < dim; ++i)
      if (ev[i] - ev[i - 1] > gap) starts.push_back(i);
    starts.push_back(dim);
    bool shape_ok = starts.size() == d + 1;
    for (std::size_t ci = 0; shape_ok && ci + 1 < starts.size(); ++ci)
      if (starts[ci + 1] - starts[ci] != d) shape_ok = false;
    if (!shape_ok) continue;

    // one cluster = one copy of rho; conjugate the left translations into it
    const Eigen::MatrixXcd v =
        basis * es.eigenvectors().middleCols(0, static_cast<Eigen::Index>(d));
    bool valid = true;
    for (Elt x = 0; x < n && valid; ++x) {
      const Elt xi = g.inv(x);
      Eigen::MatrixXcd pg_v(n, d);
      for (Elt h = 0; h < n; ++h) pg_v.row(h) = v.row(g.mul(xi, h));
      mats[x] = v.adjoint() * pg_v;
      if ((mats[x].adjoint() * mats[x] - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() >
          1e-8)
        valid = false;
      const std::complex<double> want =
          table_.values_complex[rho][table_.classes.class_of[x]];
      if (std::abs(mats[x].trace() - want) > 1e-8) valid = false;
    }
    for (Elt x = 0; x < n && valid; ++x)
      for (Elt y = 0; y < n && valid; ++y)
        if ((mats[x] * mats[y] - mats[g.mul(x, y)]).cwiseAbs().maxCoeff() > 1e-8) valid = false;
    if (!valid) continue;

    cache_[rho] = std::move(mats);
    cached_[rho] = 1;
    return cache_[rho];
  }
  throw SplitDegenerate("random commutant splitting failed for block " + std::to_string(rho) +
                        " after bounded retries");
}

}  // namespace tb
