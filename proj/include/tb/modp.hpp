// Prime-field arithmetic, dense linear algebra and polynomial root finding
// over F_p.  Everything here backs the exact half of the character-table
// pipeline; p always fits in 64 bits and products go through __int128.
#pragma once

#include <cstdint>
#include <vector>

#include "tb/errors.hpp"
#include "tb/rng.hpp"

namespace tb::modp {

using u64 = std::uint64_t;

inline u64 add(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}

inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p) { return pow(a % p, p - 2, p); }

inline u64 neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

inline bool is_prime(u64 m) {
  if (m < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull}) {
    if (m == d) return true;
    if (m % d == 0) return false;
  }
  for (u64 d = 11; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

// Smallest prime p with p = 1 (mod exponent) and p^2 > 4|G|^3 (integer form
// of p > 2 sqrt(|G|) |G|, the margin needed to read degrees and eigenvalue
// multiplicities off their residues).  Deterministic, hence reproducible.
inline u64 find_character_prime(u64 group_order, u64 exponent, u64 bound = (1ull << 40)) {
  const u64 n3x4 = 4 * group_order * group_order * group_order;
  u64 p = 1;
  while (true) {
    p += exponent;
    if (p > bound)
      throw PrimeSearchFailed("no prime = 1 mod " + std::to_string(exponent) + " below " +
                              std::to_string(bound) + "; raise the bound");
    if (p * p <= n3x4) continue;
    if (is_prime(p)) return p;
  }
}

// Generator of the multiplicative group F_p^*, by deterministic scan.
inline u64 primitive_root(u64 p) {
  // factor p-1 by trial division
  std::vector<u64> prime_factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (u64 a = 2; a < p; ++a) {
    bool ok = true;
    for (u64 q : prime_factors)
      if (pow(a, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return a;
  }
  throw InternalInconsistency("no primitive root found mod " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// dense matrices over F_p, row-major

struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<u64> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  u64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  u64 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline std::vector<u64> mat_vec(const Mat& m, const std::vector<u64>& v, u64 p) {
  std::vector<u64> r(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j) acc += static_cast<unsigned __int128>(m.at(i, j)) * v[j];
    r[i] = static_cast<u64>(acc % p);
  }
  return r;
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
    const u64 s = inv(m.at(row, col), p);
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = mul(m.at(row, j), s, p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const u64 f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) = sub(m.at(i, j), mul(f, m.at(row, j), p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of the right kernel {v : m v = 0}.
inline std::vector<std::vector<u64>> kernel_basis(Mat m, u64 p) {
  const auto pivots = rref(m, p);
  std::vector<char> is_pivot(m.cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = neg(m.at(r, free), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline u64 determinant(Mat m, u64 p) {
  if (m.rows != m.cols) throw InternalInconsistency("determinant of non-square matrix");
  u64 det = 1;
  for (std::size_t col = 0; col < m.cols; ++col) {
    std::size_t piv = col;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(col, j), m.at(piv, j));
      det = neg(det, p);
    }
    det = mul(det, m.at(col, col), p);
    const u64 s = inv(m.at(col, col), p);
    for (std::size_t i = col + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      const u64 f = mul(m.at(i, col), s, p);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) = sub(m.at(i, j), mul(f, m.at(col, j), p), p);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// polynomials over F_p, coefficients low to high

using Poly = std::vector<u64>;

inline void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_rem(Poly f, const Poly& g, u64 p) {
  // g must be nonzero
  const std::size_t dg = g.size() - 1;
  const u64 lead_inv = inv(g.back(), p);
  while (f.size() >= g.size()) {
    const u64 c = mul(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - g.size();
    if (c != 0)
      for (std::size_t i = 0; i <= dg; ++i)
        f[shift + i] = sub(f[shift + i], mul(c, g[i], p), p);
    f.pop_back();
    poly_trim(f);
    if (f.empty()) break;
  }
  return f;
}

// Quotient of an exact division f = q g (remainder known to vanish).
inline Poly poly_div_exact(Poly f, const Poly& g, u64 p) {
  poly_trim(f);
  if (f.size() < g.size()) return {};
  Poly q(f.size() - g.size() + 1, 0);
  const u64 lead_inv = inv(g.back(), p);
  while (f.size() >= g.size()) {
    const u64 c = mul(f.back(), lead_inv, p);
    const std::size_t s = f.size() - g.size();
    q[s] = c;
    for (std::size_t i = 0; i < g.size(); ++i)
      f[s + i] = sub(f[s + i], mul(c, g[i], p), p);
    poly_trim(f);
    if (f.empty()) break;
  }
  return q;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = add(c[i + j], mul(a[i], b[j], p), p);
  }
  poly_trim(c);
  return poly_rem(std::move(c), f, p);
}

inline Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  base = poly_rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, u64 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 s = inv(a.back(), p);
    for (u64& c : a) c = mul(c, s, p);
  }
  return a;
}

inline u64 poly_eval(const Poly& f, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = add(mul(r, x, p), f[i], p);
  return r;
}

// Monic characteristic polynomial det(lambda I - X) by evaluation at
// 0..m and Lagrange interpolation.  O(m^4), fine at class-count scale.
inline Poly char_poly(const Mat& x, u64 p) {
  const std::size_t m = x.rows;
  if (m == 0) return {1};
  std::vector<u64> xs(m + 1), ys(m + 1);
  for (std::size_t t = 0; t <= m; ++t) {
    Mat a(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        a.at(i, j) = i == j ? sub(t % p, x.at(i, j), p) : neg(x.at(i, j), p);
    xs[t] = t % p;
    ys[t] = determinant(std::move(a), p);
  }
  // full product prod (X - xs[i]), then peel one root off per term
  Poly master{1};
  for (std::size_t i = 0; i <= m; ++i) {
    Poly next(master.size() + 1, 0);
    for (std::size_t j = 0; j < master.size(); ++j) {
      next[j + 1] = add(next[j + 1], master[j], p);
      next[j] = sub(next[j], mul(master[j], xs[i], p), p);
    }
    master = std::move(next);
  }
  Poly result(m + 1, 0);
  for (std::size_t i = 0; i <= m; ++i) {
    // synthetic division of master by (X - xs[i])
    Poly q(master.size() - 1, 0);
    u64 carry = master.back();
    for (std::size_t j = master.size() - 1; j-- > 0;) {
      q[j] = carry;
      carry = add(master[j], mul(carry, xs[i], p), p);
    }
    u64 denom = 1;
    for (std::size_t j = 0; j <= m; ++j)
      if (j != i) denom = mul(denom, sub(xs[i], xs[j], p), p);
    const u64 scale = mul(ys[i], inv(denom, p), p);
    for (std::size_t j = 0; j < q.size(); ++j)
      result[j] = add(result[j], mul(scale, q[j], p), p);
  }
  poly_trim(result);
  return result;
}

namespace detail {

inline void split_linear(const Poly& h, u64 p, Rng& rng, std::vector<u64>& roots, int depth) {
  if (h.size() <= 1) return;
  if (h.size() == 2) {
    roots.push_back(mul(neg(h[0], p), inv(h[1], p), p));
    return;
  }
  if (depth > 512) throw EigenSplitFailed("equal-degree splitting did not converge");
  // h is a product of distinct linear factors; (x+a)^((p-1)/2) - 1 vanishes
  // exactly on the roots r with r+a a nonzero square, so its gcd with h
  // splits h whenever the roots land in both residue classes.
  for (int attempt = 0; attempt < 256; ++attempt) {
    const u64 shift = rng.below(p);
    if (poly_eval(h, neg(shift, p), p) == 0) {
      const Poly lin{shift, 1};
      roots.push_back(neg(shift, p));
      split_linear(poly_div_exact(h, lin, p), p, rng, roots, depth + 1);
      return;
    }
    Poly u = poly_powmod(Poly{shift, 1}, (p - 1) / 2, h, p);
    if (u.empty())
      u = Poly{p - 1};
    else
      u[0] = sub(u[0], 1, p);
    poly_trim(u);
    Poly g = poly_gcd(h, u, p);
    if (g.size() > 1 && g.size() < h.size()) {
      split_linear(g, p, rng, roots, depth + 1);
      split_linear(poly_div_exact(h, g, p), p, rng, roots, depth + 1);
      return;
    }
  }
  throw EigenSplitFailed("no splitting element found after bounded retries");
}

}  // namespace detail

// Distinct roots of f over F_p, assuming they all lie in F_p (true for the
// class-matrix spectra handled here).  Seeded, hence reproducible.
inline std::vector<u64> distinct_roots(const Poly& f, u64 p, Rng& rng) {
  if (f.size() <= 1) return {};
  // radical: gcd(f, x^p - x) collects each root exactly once
  Poly xp = poly_powmod(Poly{0, 1}, p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = sub(xp[1], 1, p);
  poly_trim(xp);
  Poly radical = poly_gcd(f, xp, p);
  std::vector<u64> roots;
  detail::split_linear(radical, p, rng, roots, 0);
  return roots;
}

}  // namespace tb::modp
