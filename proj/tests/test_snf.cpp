#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "tb/rng.hpp"
#include "tb/snf.hpp"

using tb::ZMatrix;

namespace {
ZMatrix make(std::size_t r, std::size_t c, std::vector<long> v) {
  ZMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = v[i * c + j];
  return m;
}
}  // namespace

TEST_CASE("smith normal form of small matrices") {
  // diag(2,3) ~ diag(1,6)
  auto res = tb::smith_normal_form(make(2, 2, {2, 0, 0, 3}));
  REQUIRE(res.invariant_factors() == std::vector<mpz_class>{1, 6});
  // unimodular input ~ identity
  auto res2 = tb::smith_normal_form(make(2, 2, {-1, -1, -1, 0}));
  REQUIRE(res2.invariant_factors() == std::vector<mpz_class>{1, 1});
  // the classic (2,4;6,8): d = diag(2, 4) since det = -8, gcd = 2
  auto res3 = tb::smith_normal_form(make(2, 2, {2, 4, 6, 8}));
  REQUIRE(res3.invariant_factors() == std::vector<mpz_class>{2, 4});
}

TEST_CASE("smith transform identity U a V = d, unimodular, divisibility") {
  tb::Rng rng(0x534e46u);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
    ZMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        a.at(i, j) = static_cast<long>(rng.below(13)) - 6;
    auto res = tb::smith_normal_form(a);
    REQUIRE(tb::bareiss_determinant(res.u) * tb::bareiss_determinant(res.u) == 1);
    REQUIRE(tb::bareiss_determinant(res.v) * tb::bareiss_determinant(res.v) == 1);
    ZMatrix lhs = tb::zmat_mul(tb::zmat_mul(res.u, a), res.v);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        REQUIRE(lhs.at(i, j) == res.d.at(i, j));
        if (i != j) REQUIRE(res.d.at(i, j) == 0);
      }
    mpz_class prev = 0;
    bool seen_zero = false;
    for (std::size_t k = 0; k < std::min(r, c); ++k) {
      const mpz_class cur = res.d.at(k, k);
      REQUIRE(cur >= 0);
      if (seen_zero) REQUIRE(cur == 0);
      if (prev != 0 && cur != 0) REQUIRE(cur % prev == 0);
      seen_zero |= cur == 0;
      prev = cur;
    }
  }
}

TEST_CASE("integer rank and bareiss determinant") {
  REQUIRE(tb::integer_rank(make(2, 2, {2, 4, 1, 2})) == 1);
  REQUIRE(tb::integer_rank(make(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
  REQUIRE(tb::integer_rank(make(2, 3, {0, 0, 0, 0, 0, 0})) == 0);
  REQUIRE(tb::bareiss_determinant(make(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1})) == 5);
  REQUIRE(tb::bareiss_determinant(make(2, 2, {3, 5, 1, 2})) == 1);
  REQUIRE(tb::bareiss_determinant(make(1, 1, {-7})) == -7);
}

TEST_CASE("rank agrees with smith normal form on random matrices") {
  tb::Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
    ZMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        a.at(i, j) = static_cast<long>(rng.below(9)) - 4;
    auto inv = tb::smith_normal_form(a).invariant_factors();
    std::size_t snf_rank = 0;
    for (const auto& x : inv) snf_rank += x != 0;
    REQUIRE(tb::integer_rank(a) == snf_rank);
  }
}
