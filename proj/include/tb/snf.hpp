// Exact integer linear algebra: Bareiss fraction-free elimination for ranks
// and determinants, and Smith normal form with unimodular transforms.
#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "tb/errors.hpp"

namespace tb {

struct ZMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  ZMatrix() = default;
  ZMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static ZMatrix identity(std::size_t n) {
    ZMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline ZMatrix zmat_mul(const ZMatrix& x, const ZMatrix& y) {
  if (x.cols != y.rows) throw InternalInconsistency("zmat_mul shape mismatch");
  ZMatrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

// Fraction-free echelon rank.  Entries after step k are (k+1)-minors of the
// input, so the division by the previous pivot is exact.
inline std::size_t integer_rank(ZMatrix m) {
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        mpz_class t = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = std::move(t);
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

inline mpz_class bareiss_determinant(ZMatrix m) {
  if (m.rows != m.cols) throw InternalInconsistency("determinant of non-square matrix");
  if (m.rows == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < m.rows; ++k) {
    std::size_t piv = k;
    while (piv < m.rows && m.at(piv, k) == 0) ++piv;
    if (piv == m.rows) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < m.cols; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m.rows; ++i) {
      for (std::size_t j = k + 1; j < m.cols; ++j) {
        mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = std::move(t);
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(m.rows - 1, m.rows - 1);
}

// U a V = d with U, V unimodular and d diagonal, d_i | d_{i+1}, d_i >= 0.
struct SnfResult {
  ZMatrix u, d, v;

  std::vector<mpz_class> invariant_factors() const {
    std::vector<mpz_class> f;
    const std::size_t k = d.rows < d.cols ? d.rows : d.cols;
    for (std::size_t i = 0; i < k; ++i)
      if (d.at(i, i) != 0) f.push_back(d.at(i, i));
    return f;
  }
};

inline SnfResult smith_normal_form(const ZMatrix& input) {
  ZMatrix a = input;
  ZMatrix u = ZMatrix::identity(a.rows);
  ZMatrix v = ZMatrix::identity(a.cols);
  const std::size_t k = a.rows < a.cols ? a.rows : a.cols;

  auto row_sub = [&](std::size_t i, std::size_t t, const mpz_class& q) {
    for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) -= q * a.at(t, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(i, j) -= q * u.at(t, j);
  };
  auto col_sub = [&](std::size_t j, std::size_t t, const mpz_class& q) {
    for (std::size_t i = 0; i < a.rows; ++i) a.at(i, j) -= q * a.at(i, t);
    for (std::size_t i = 0; i < v.rows; ++i) v.at(i, j) -= q * v.at(i, t);
  };
  auto row_swap = [&](std::size_t i, std::size_t t) {
    for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(i, j), a.at(t, j));
    for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(i, j), u.at(t, j));
  };
  auto col_swap = [&](std::size_t j, std::size_t t) {
    for (std::size_t i = 0; i < a.rows; ++i) std::swap(a.at(i, j), a.at(i, t));
    for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, j), v.at(i, t));
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) = -a.at(i, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(i, j) = -u.at(i, j);
  };

  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block into the pivot slot
      std::size_t bi = a.rows, bj = a.cols;
      for (std::size_t i = t; i < a.rows; ++i)
        for (std::size_t j = t; j < a.cols; ++j) {
          if (a.at(i, j) == 0) continue;
          if (bi == a.rows ||
              mpz_cmpabs(a.at(i, j).get_mpz_t(), a.at(bi, bj).get_mpz_t()) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi == a.rows) break;  // trailing block vanished
      if (bi != t) row_swap(bi, t);
      if (bj != t) col_swap(bj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows; ++i) {
        if (a.at(i, t) == 0) continue;
        const mpz_class q = a.at(i, t) / a.at(t, t);
        row_sub(i, t, q);
        if (a.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols; ++j) {
        if (a.at(t, j) == 0) continue;
        const mpz_class q = a.at(t, j) / a.at(t, t);
        col_sub(j, t, q);
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // leftover remainders become the next, smaller pivot

      // pivot must divide everything that remains, otherwise pull the
      // offending row up and restart the reduction at this position
      std::size_t vi = a.rows;
      for (std::size_t i = t + 1; i < a.rows && vi == a.rows; ++i)
        for (std::size_t j = t + 1; j < a.cols; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            vi = i;
            break;
          }
      if (vi != a.rows) {
        row_sub(t, vi, -1);  // adds row vi onto row t
        continue;
      }
      if (a.at(t, t) < 0) row_negate(t);
      break;
    }
  }

  SnfResult res{std::move(u), std::move(a), std::move(v)};
  const mpz_class du = bareiss_determinant(res.u);
  const mpz_class dv = bareiss_determinant(res.v);
  if (!(du == 1 || du == -1) || !(dv == 1 || dv == -1))
    throw InternalInconsistency("smith transform is not unimodular");
  return res;
}

}  // namespace tb
