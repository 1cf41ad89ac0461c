// C*(G) for finite G: the group algebra C[G] with convolution product,
// the twisted action g[a] = delta_g * a * delta_{phi(g^-1)}, and bounded
// functionals as weight vectors on G.
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "tb/endomorphism.hpp"
#include "tb/group.hpp"

namespace tb {

struct AlgebraElement {
  Eigen::VectorXcd coeffs;  // a = sum_g coeffs(g) delta_g

  AlgebraElement() = default;
  explicit AlgebraElement(Eigen::Index n) : coeffs(Eigen::VectorXcd::Zero(n)) {}
};

inline AlgebraElement delta(const FiniteGroup& g, Elt x) {
  AlgebraElement a(g.order());
  a.coeffs[x] = 1.0;
  return a;
}

// (a*b)(h) = sum_g a(g) b(g^{-1} h), accumulated as out[g y] += a(g) b(y)
inline AlgebraElement convolve(const FiniteGroup& g, const AlgebraElement& a,
                               const AlgebraElement& b) {
  const Elt n = g.order();
  AlgebraElement out(n);
  for (Elt x = 0; x < n; ++x) {
    const std::complex<double> ax = a.coeffs[x];
    if (ax == 0.0) continue;
    for (Elt y = 0; y < n; ++y) out.coeffs[g.mul(x, y)] += ax * b.coeffs[y];
  }
  return out;
}

// g[a]: deltas permute along x -> g x phi(g)^{-1}, so this is a coefficient
// permutation rather than two convolutions
inline AlgebraElement twisted_act(const FiniteGroup& grp, Elt g, const AlgebraElement& a,
                                  const Endomorphism& phi) {
  const Elt n = grp.order();
  const Elt pg_inv = phi(grp.inv(g));
  AlgebraElement out(n);
  for (Elt x = 0; x < n; ++x)
    out.coeffs[grp.mul(grp.mul(g, x), pg_inv)] = a.coeffs[x];
  return out;
}

struct FunctionalOnA {
  Eigen::VectorXcd weights;

  FunctionalOnA() = default;
  explicit FunctionalOnA(Eigen::Index n) : weights(Eigen::VectorXcd::Zero(n)) {}

  // pairing is bilinear, not sesquilinear
  std::complex<double> operator()(const AlgebraElement& a) const {
    return (weights.array() * a.coeffs.array()).sum();
  }
};

}  // namespace tb
