// Character table by the Burnside/Dixon method: class-sum structure
// constants, simultaneous eigenvectors over F_p, then a lift to complex
// values through eigenvalue multiplicities.  The mod-p table is the exact
// object; the complex table is derived from it.
#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <vector>

#include "tb/conjugacy.hpp"
#include "tb/errors.hpp"
#include "tb/group.hpp"
#include "tb/modp.hpp"
#include "tb/rng.hpp"

namespace tb {

struct CharacterTable {
  std::size_t num_irreps = 0;
  std::vector<std::uint64_t> degrees;
  // rows = irreps, columns = classes
  std::vector<std::vector<std::complex<double>>> values_complex;
  std::vector<std::vector<modp::u64>> values_modp;
  modp::u64 prime = 0;
  struct RootMap {
    std::uint64_t exponent = 1;      // exponent(G); all character values are
    modp::u64 modp_root = 1;         // sums of powers of this e-th root mod p
    std::complex<double> complex_root{1.0, 0.0};
  } root_map;
  std::uint64_t seed = 0;
  ConjClasses classes;
  std::vector<std::size_t> inverse_class;  // j -> class of rep_j^{-1}
};

// (1/|G|) sum_j sizes[j] f(j) conj(h(j)) for class functions given by value
// vectors along the table's class order.
inline std::complex<double> char_inner_product(const CharacterTable& t,
                                               const std::vector<std::complex<double>>& f,
                                               const std::vector<std::complex<double>>& h) {
  std::complex<double> acc{0.0, 0.0};
  std::uint64_t n = 0;
  for (std::size_t j = 0; j < t.classes.count(); ++j) {
    acc += static_cast<double>(t.classes.class_sizes[j]) * f[j] * std::conj(h[j]);
    n += t.classes.class_sizes[j];
  }
  return acc / static_cast<double>(n);
}

// Exact mod-p analogue; conj corresponds to evaluating at inverse classes.
inline modp::u64 char_inner_product_modp(const CharacterTable& t,
                                         const std::vector<modp::u64>& f,
                                         const std::vector<modp::u64>& h) {
  using namespace modp;
  const u64 p = t.prime;
  u64 acc = 0;
  u64 n = 0;
  for (std::size_t j = 0; j < t.classes.count(); ++j) {
    acc = add(acc, mul(mul(t.classes.class_sizes[j] % p, f[j], p), h[t.inverse_class[j]], p), p);
    n += t.classes.class_sizes[j];
  }
  return mul(acc, inv(n % p, p), p);
}

namespace dixon {

struct Subspace {
  std::vector<std::vector<modp::u64>> basis;  // RREF rows, length k
  std::vector<std::size_t> pivots;
};

inline Subspace make_subspace(std::vector<std::vector<modp::u64>> rows, modp::u64 p) {
  const std::size_t k = rows.front().size();
  modp::Mat m(rows.size(), k);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = rows[i][j];
  Subspace s;
  s.pivots = modp::rref(m, p);
  for (std::size_t i = 0; i < s.pivots.size(); ++i)
    s.basis.emplace_back(m.a.begin() + i * k, m.a.begin() + (i + 1) * k);
  return s;
}

}  // namespace dixon

inline CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed = 0x646978u) {
  using namespace modp;
  CharacterTable t;
  t.seed = seed;
  t.classes = conjugacy_classes(g);
  const std::size_t k = t.classes.count();
  const std::uint64_t n = g.order();
  const std::uint64_t e = g.exponent();
  const u64 p = find_character_prime(n, e);
  t.prime = p;
  t.num_irreps = k;

  t.inverse_class.resize(k);
  for (std::size_t j = 0; j < k; ++j)
    t.inverse_class[j] = t.classes.class_of[g.inv(t.classes.class_reps[j])];

  std::vector<std::vector<Elt>> members(k);
  for (Elt x = 0; x < n; ++x) members[t.classes.class_of[x]].push_back(x);

  // structure constants: N_i[j][l] = #{x in C_i : x^{-1} z_l in C_j},
  // so that N_i v = omega(C_i) v for every central character vector v
  std::vector<Mat> class_mats(k, Mat(k, k));
  for (std::size_t i = 0; i < k; ++i)
    for (Elt x : members[i]) {
      const Elt xi = g.inv(x);
      for (std::size_t l = 0; l < k; ++l) {
        const std::size_t j = t.classes.class_of[g.mul(xi, t.classes.class_reps[l])];
        ++class_mats[i].at(j, l);
      }
    }

  // split the full space into common eigenlines
  Rng rng(seed);
  std::vector<dixon::Subspace> spaces;
  {
    std::vector<std::vector<u64>> full(k, std::vector<u64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(dixon::make_subspace(std::move(full), p));
  }
  for (std::size_t i = 0; i < k; ++i) {
    bool all_lines = true;
    for (const auto& s : spaces)
      if (s.basis.size() > 1) all_lines = false;
    if (all_lines) break;

    std::vector<dixon::Subspace> next;
    for (auto& s : spaces) {
      const std::size_t d = s.basis.size();
      if (d <= 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restriction of N_i to the subspace; coordinates read off pivot cols
      Mat r(d, d);
      std::vector<std::vector<u64>> images(d);
      for (std::size_t c = 0; c < d; ++c) {
        images[c] = mat_vec(class_mats[i], s.basis[c], p);
        for (std::size_t row = 0; row < d; ++row) r.at(row, c) = images[c][s.pivots[row]];
      }
      // invariance sanity: the image must equal its pivot reconstruction
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<u64> recon(k, 0);
        for (std::size_t row = 0; row < d; ++row)
          for (std::size_t j = 0; j < k; ++j)
            recon[j] = add(recon[j], mul(r.at(row, c), s.basis[row][j], p), p);
        if (recon != images[c])
          throw InternalInconsistency("class matrix does not preserve eigenspace");
      }
      const Poly f = char_poly(r, p);
      const std::vector<u64> roots = distinct_roots(f, p, rng);
      std::size_t total = 0;
      for (const u64 lam : roots) {
        Mat shifted = r;
        for (std::size_t q = 0; q < d; ++q) shifted.at(q, q) = sub(shifted.at(q, q), lam, p);
        const auto coords = kernel_basis(std::move(shifted), p);
        if (coords.empty()) continue;
        std::vector<std::vector<u64>> ambient;
        for (const auto& c : coords) {
          std::vector<u64> w(k, 0);
          for (std::size_t row = 0; row < d; ++row)
            for (std::size_t j = 0; j < k; ++j)
              w[j] = add(w[j], mul(c[row], s.basis[row][j], p), p);
          ambient.push_back(std::move(w));
        }
        dixon::Subspace piece = dixon::make_subspace(std::move(ambient), p);
        total += piece.basis.size();
        next.push_back(std::move(piece));
      }
      if (total != d)
        throw InternalInconsistency("class matrix restriction is not diagonalizable");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k)
    throw InternalInconsistency("expected " + std::to_string(k) + " common eigenlines, found " +
                                std::to_string(spaces.size()));

  // each line, scaled to 1 at the identity class, is omega_l = h_l chi(z_l)/d
  const std::size_t idc = t.classes.identity_class;
  std::vector<std::vector<u64>> rows_modp;
  std::vector<std::uint64_t> degs;
  for (const auto& s : spaces) {
    std::vector<u64> v = s.basis.front();
    if (v[idc] == 0) throw InternalInconsistency("central character vanishes at identity");
    const u64 scale = inv(v[idc], p);
    for (u64& x : v) x = mul(x, scale, p);

    u64 tsum = 0;
    for (std::size_t l = 0; l < k; ++l)
      tsum = add(tsum, mul(mul(v[l], v[t.inverse_class[l]], p),
                           inv(t.classes.class_sizes[l] % p, p), p),
                 p);
    const u64 d2 = mul(n % p, inv(tsum, p), p);
    std::uint64_t deg = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d)
      if (d * d % p == d2) {
        deg = d;
        break;
      }
    if (deg == 0) throw InternalInconsistency("no integer degree matches d^2 residue");
    if (n % deg != 0) throw InternalInconsistency("irrep degree does not divide group order");

    std::vector<u64> chi(k);
    for (std::size_t l = 0; l < k; ++l)
      chi[l] = mul(mul(deg % p, v[l], p), inv(t.classes.class_sizes[l] % p, p), p);
    rows_modp.push_back(std::move(chi));
    degs.push_back(deg);
  }

  // canonical order: by degree, then lexicographically on the mod-p row.
  // the trivial character (all residues 1) always lands in row 0.
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    return rows_modp[a] < rows_modp[b];
  });
  for (std::size_t i = 0; i < k; ++i) {
    t.degrees.push_back(degs[order[i]]);
    t.values_modp.push_back(rows_modp[order[i]]);
  }

  std::uint64_t sumsq = 0;
  for (std::uint64_t d : t.degrees) sumsq += d * d;
  if (sumsq != n) throw InternalInconsistency("sum of squared degrees misses group order");

  // lift: chi(z_l) = sum_s m_s zeta_o^s where m_s is the multiplicity of the
  // eigenvalue zeta_o^s of rho(z_l); the m_s come out of a mod-p inverse DFT
  const u64 zroot = pow(primitive_root(p), (p - 1) / e, p);
  t.root_map.exponent = e;
  t.root_map.modp_root = zroot;
  const double two_pi = 6.28318530717958647692;
  t.root_map.complex_root = std::polar(1.0, two_pi / static_cast<double>(e));

  t.values_complex.assign(k, std::vector<std::complex<double>>(k));
  for (std::size_t l = 0; l < k; ++l) {
    const Elt rep = t.classes.class_reps[l];
    const std::uint64_t o = g.element_order(rep);
    std::vector<std::size_t> power_class(o);
    Elt x = g.identity();
    for (std::uint64_t j = 0; j < o; ++j) {
      power_class[j] = t.classes.class_of[x];
      x = g.mul(x, rep);
    }
    const u64 zo = pow(zroot, e / o, p);
    const u64 zo_inv = inv(zo, p);
    const u64 o_inv = inv(o % p, p);
    for (std::size_t r = 0; r < k; ++r) {
      std::complex<double> val{0.0, 0.0};
      u64 roundtrip = 0;
      for (std::uint64_t s = 0; s < o; ++s) {
        u64 m = 0;
        for (std::uint64_t j = 0; j < o; ++j)
          m = add(m, mul(t.values_modp[r][power_class[j]], pow(zo_inv, s * j % o, p), p), p);
        m = mul(m, o_inv, p);
        if (m > t.degrees[r])
          throw InternalInconsistency("eigenvalue multiplicity exceeds degree in lift");
        roundtrip = add(roundtrip, mul(m, pow(zo, s, p), p), p);
        val += static_cast<double>(m) *
               std::polar(1.0, two_pi * static_cast<double>(s) / static_cast<double>(o));
      }
      if (roundtrip != t.values_modp[r][l])
        throw InternalInconsistency("complex lift does not reduce back mod p");
      t.values_complex[r][l] = val;
    }
  }

  // orthogonality certificates, exact and complex
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s) {
      const u64 exact = char_inner_product_modp(t, t.values_modp[r], t.values_modp[s]);
      if (exact != (r == s ? 1u : 0u))
        throw InternalInconsistency("mod-p row orthogonality failed");
      const std::complex<double> num =
          char_inner_product(t, t.values_complex[r], t.values_complex[s]);
      if (std::abs(num - (r == s ? 1.0 : 0.0)) > 1e-9)
        throw InternalInconsistency("complex row orthogonality failed");
    }

  return t;
}

}  // namespace tb
