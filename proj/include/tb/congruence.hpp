// Moebius function and the Reidemeister congruences: for every n,
// sum_{d|n} mu(d) R(phi^{n/d}) = 0 mod n, provided all R(phi^n) are finite.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace tb {

// 1 at d=1; (-1)^k for a product of k distinct primes; 0 otherwise
inline int moebius(std::uint64_t d) {
  int k = 0;
  for (std::uint64_t q = 2; q * q <= d; ++q) {
    if (d % q != 0) continue;
    d /= q;
    if (d % q == 0) return 0;
    ++k;
  }
  if (d > 1) ++k;
  return k % 2 == 0 ? 1 : -1;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  for (std::size_t i = large.size(); i-- > 0;) small.push_back(large[i]);
  return small;
}

struct CongruenceEntry {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> divs;
  bool skipped = false;  // some R(phi^{n/d}) is Infinite: hypothesis fails
  mpz_class sum = 0;     // sum_{d|n} mu(d) R(phi^{n/d})
  mpz_class residue = 0;
  bool pass = false;
};

struct CongruenceReport {
  std::vector<CongruenceEntry> entries;
  bool all_pass = true;  // over the non-skipped entries
  std::size_t checked = 0, skipped = 0;
};

// r_seq[i] = R(phi^{i+1}), nullopt for Infinite
inline CongruenceReport congruence_check(const std::vector<std::optional<mpz_class>>& r_seq,
                                         std::uint64_t n_max) {
  CongruenceReport rep;
  for (std::uint64_t n = 1; n <= n_max && n <= r_seq.size(); ++n) {
    CongruenceEntry e;
    e.n = n;
    e.divs = divisors(n);
    for (std::uint64_t d : e.divs)
      if (!r_seq[n / d - 1].has_value()) e.skipped = true;
    if (e.skipped) {
      ++rep.skipped;
      rep.entries.push_back(std::move(e));
      continue;
    }
    for (std::uint64_t d : e.divs) e.sum += moebius(d) * r_seq[n / d - 1].value();
    mpz_fdiv_r_ui(e.residue.get_mpz_t(), e.sum.get_mpz_t(), n);
    e.pass = e.residue == 0;
    if (!e.pass) rep.all_pass = false;
    ++rep.checked;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace tb
