#include <numeric>
#include <optional>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "tb/abelian.hpp"
#include "tb/congruence.hpp"
#include "tb/endomorphism.hpp"
#include "tb/twisted.hpp"

TEST_CASE("moebius values and multiplicativity") {
  const int want[31] = {9, 1,  -1, -1, 0, -1, 1,  -1, 0, 0, 1, -1, 0, -1, 1, 1,
                        0, -1, 0,  -1, 0, 1,  1,  -1, 0, 0, 1, 0,  0, -1, -1};
  for (std::uint64_t n = 1; n <= 30; ++n) REQUIRE(tb::moebius(n) == want[n]);
  // multiplicative on coprime pairs
  for (std::uint64_t a = 1; a <= 40; ++a)
    for (std::uint64_t b = 1; b <= 40; ++b)
      if (std::gcd(a, b) == 1) REQUIRE(tb::moebius(a * b) == tb::moebius(a) * tb::moebius(b));
  // sum over divisors vanishes except at 1
  for (std::uint64_t n = 1; n <= 60; ++n) {
    int s = 0;
    for (std::uint64_t d : tb::divisors(n)) s += tb::moebius(d);
    REQUIRE(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("divisor lists are sorted and complete") {
  REQUIRE(tb::divisors(1) == std::vector<std::uint64_t>{1});
  REQUIRE(tb::divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  REQUIRE(tb::divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
  REQUIRE(tb::divisors(97) == std::vector<std::uint64_t>{1, 97});
}

TEST_CASE("congruences hold for finite group endomorphisms") {
  for (const corpus::FiniteGroup& g : {corpus::s3(), corpus::d4(), corpus::q8()}) {
    for (const auto& phi : corpus::sample_endomorphisms(g, 20)) {
      std::vector<std::optional<mpz_class>> seq;
      for (std::uint32_t k = 1; k <= 12; ++k)
        seq.emplace_back(mpz_class(tb::reidemeister_number(g, tb::endo_power(phi, k))));
      auto rep = tb::congruence_check(seq, 12);
      REQUIRE(rep.all_pass);
      REQUIRE(rep.checked == 12);
      REQUIRE(rep.skipped == 0);
      for (const auto& e : rep.entries) {
        REQUIRE(e.pass);
        REQUIRE(e.residue == 0);
      }
    }
  }
}

TEST_CASE("rotation matrix on Z^2 skips the orders where R is infinite") {
  tb::FgAbelianGroup z2 = tb::fg_abelian(2, {});
  tb::ZMatrix m(2, 2);
  m.at(0, 0) = 0; m.at(0, 1) = -1; m.at(1, 0) = 1; m.at(1, 1) = 0;
  auto seq = tb::r_sequence(z2, tb::abelian_endo(z2, m), 12);
  // phi^4 = identity, so R is infinite at multiples of 4
  for (int n = 1; n <= 12; ++n) REQUIRE(seq[n - 1].has_value() == (n % 4 != 0));
  auto rep = tb::congruence_check(seq, 12);
  REQUIRE(rep.all_pass);
  REQUIRE(rep.skipped == 3);
  REQUIRE(rep.checked == 9);
  // n = 6: mu-weighted sum is R(6) - R(3) - R(2) + R(1) = 4 - 2 - 4 + 2
  REQUIRE(rep.entries[5].sum == 0);
  REQUIRE_FALSE(rep.entries[3].pass);
  REQUIRE(rep.entries[3].skipped);
}

TEST_CASE("negation on Z skips even orders") {
  tb::FgAbelianGroup z = tb::fg_abelian(1, {});
  tb::ZMatrix m(1, 1);
  m.at(0, 0) = -1;
  auto seq = tb::r_sequence(z, tb::abelian_endo(z, m), 12);
  auto rep = tb::congruence_check(seq, 12);
  REQUIRE(rep.all_pass);
  REQUIRE(rep.skipped == 6);
  for (const auto& e : rep.entries)
    if (!e.skipped) REQUIRE(e.n % 2 == 1);
}

TEST_CASE("fibonacci-like matrix passes all twelve congruences") {
  tb::FgAbelianGroup z2 = tb::fg_abelian(2, {});
  tb::ZMatrix m(2, 2);
  m.at(0, 0) = 2; m.at(0, 1) = 1; m.at(1, 0) = 1; m.at(1, 1) = 1;
  auto rep = tb::congruence_check(tb::r_sequence(z2, tb::abelian_endo(z2, m), 12), 12);
  REQUIRE(rep.all_pass);
  REQUIRE(rep.skipped == 0);
  // spot check n = 6: R(6)-R(3)-R(2)+R(1) = 320-16-5+1 = 300 = 0 mod 6
  REQUIRE(rep.entries[5].sum == 300);
}

TEST_CASE("a fabricated bad sequence fails") {
  std::vector<std::optional<mpz_class>> seq;
  for (int i = 1; i <= 4; ++i) seq.emplace_back(mpz_class(i));  // R(phi^n) = n
  // n = 2: mu(1) R(2) + mu(2) R(1) = 2 - 1 = 1, not divisible by 2
  auto rep = tb::congruence_check(seq, 4);
  REQUIRE_FALSE(rep.all_pass);
  REQUIRE_FALSE(rep.entries[1].pass);
  REQUIRE(rep.entries[1].residue == 1);
}
