#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "tb/character_table.hpp"
#include "tb/modp.hpp"

using tb::CharacterTable;
using tb::FiniteGroup;

namespace {

void check_orthogonality(const FiniteGroup& g, const CharacterTable& t) {
  // rows: <chi_r, chi_s> = [r == s], exact mod p and complex to 1e-9
  for (std::size_t r = 0; r < t.num_irreps; ++r)
    for (std::size_t s = 0; s < t.num_irreps; ++s) {
      const std::complex<double> ip =
          tb::char_inner_product(t, t.values_complex[r], t.values_complex[s]);
      const double want = r == s ? 1.0 : 0.0;
      REQUIRE(std::abs(ip - want) < 1e-9);
      REQUIRE(tb::char_inner_product_modp(t, t.values_modp[r], t.values_modp[s]) ==
              (r == s ? 1u : 0u));
    }
  // columns: sum_r chi_r(j) conj(chi_r(l)) = [j == l] |G| / |C_j|
  for (std::size_t j = 0; j < t.classes.count(); ++j)
    for (std::size_t l = 0; l < t.classes.count(); ++l) {
      std::complex<double> acc{0, 0};
      for (std::size_t r = 0; r < t.num_irreps; ++r)
        acc += t.values_complex[r][j] * std::conj(t.values_complex[r][l]);
      const double want =
          j == l ? static_cast<double>(g.order()) / t.classes.class_sizes[j] : 0.0;
      REQUIRE(std::abs(acc - want) < 1e-9);
    }
}

std::vector<std::uint64_t> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("degree patterns on the corpus") {
  using V = std::vector<std::uint64_t>;
  REQUIRE(sorted_degrees(tb::character_table(corpus::s3())) == V{1, 1, 2});
  REQUIRE(sorted_degrees(tb::character_table(corpus::s4())) == V{1, 1, 2, 3, 3});
  REQUIRE(sorted_degrees(tb::character_table(corpus::a4())) == V{1, 1, 1, 3});
  REQUIRE(sorted_degrees(tb::character_table(corpus::d4())) == V{1, 1, 1, 1, 2});
  REQUIRE(sorted_degrees(tb::character_table(corpus::q8())) == V{1, 1, 1, 1, 2});
  REQUIRE(sorted_degrees(tb::character_table(corpus::z2z4())) == V{1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("trivial character is row zero and degrees sum of squares is the order") {
  for (auto& [name, g] : corpus::acceptance_groups()) {
    INFO(name);
    CharacterTable t = tb::character_table(g);
    REQUIRE(t.num_irreps == t.classes.count());
    std::uint64_t ss = 0;
    for (std::size_t r = 0; r < t.num_irreps; ++r) ss += t.degrees[r] * t.degrees[r];
    REQUIRE(ss == g.order());
    for (std::size_t j = 0; j < t.classes.count(); ++j) {
      REQUIRE(t.values_modp[0][j] == 1);
      REQUIRE(std::abs(t.values_complex[0][j] - 1.0) < 1e-9);
    }
    REQUIRE(t.degrees[0] == 1);
  }
}

TEST_CASE("orthogonality relations, exact and complex") {
  for (const FiniteGroup& g :
       {corpus::s3(), corpus::s4(), corpus::a4(), corpus::d4(), corpus::q8(), corpus::z2z4()}) {
    CharacterTable t = tb::character_table(g);
    check_orthogonality(g, t);
  }
}

TEST_CASE("prime choice is the smallest admissible one") {
  FiniteGroup g = corpus::s3();
  CharacterTable t = tb::character_table(g);
  REQUIRE(t.prime == 31);
  REQUIRE(t.root_map.exponent == 6);
  REQUIRE(tb::modp::pow(t.root_map.modp_root, 6, t.prime) == 1);
  for (std::uint64_t k = 1; k < 6; ++k)
    REQUIRE(tb::modp::pow(t.root_map.modp_root, k, t.prime) != 1);
  REQUIRE(std::abs(t.root_map.complex_root - std::polar(1.0, 2 * M_PI / 6)) < 1e-12);
}

TEST_CASE("Z4 characters are the four power maps of i") {
  CharacterTable t = tb::character_table(tb::cyclic_group(4));
  REQUIRE(t.num_irreps == 4);
  // classes of a cyclic group are singletons in element order
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t j = 0; j < 4; ++j) REQUIRE(std::abs(std::abs(t.values_complex[r][j]) - 1.0) < 1e-9);
  // some row is the faithful character k -> i^k
  bool found = false;
  for (std::size_t r = 0; r < 4; ++r) {
    bool match = true;
    for (std::size_t j = 0; j < 4; ++j)
      match &= std::abs(t.values_complex[r][j] - std::polar(1.0, M_PI / 2 * j)) < 1e-9;
    found |= match;
  }
  REQUIRE(found);
}

TEST_CASE("q8 and d4 share a character table") {
  CharacterTable q = tb::character_table(corpus::q8());
  CharacterTable d = tb::character_table(corpus::d4());
  REQUIRE(q.num_irreps == d.num_irreps);
  // same degree-2 row up to class relabeling: compare sorted value multisets
  for (std::size_t r = 0; r < q.num_irreps; ++r) {
    auto qs = q.values_complex[r];
    auto ds = d.values_complex[r];
    auto key = [](const std::complex<double>& a, const std::complex<double>& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    };
    std::sort(qs.begin(), qs.end(), key);
    std::sort(ds.begin(), ds.end(), key);
    for (std::size_t j = 0; j < qs.size(); ++j) REQUIRE(std::abs(qs[j] - ds[j]) < 1e-9);
  }
}

TEST_CASE("complex lift matches the mod p table through the root map") {
  // recomputing via the root map: each value is a sum of root powers, so the
  // lift is certified by the library itself; here we spot check degree rows
  CharacterTable t = tb::character_table(corpus::a4());
  for (std::size_t r = 0; r < t.num_irreps; ++r) {
    REQUIRE(t.values_modp[r][t.classes.identity_class] == t.degrees[r] % t.prime);
    REQUIRE(std::abs(t.values_complex[r][t.classes.identity_class] -
                     static_cast<double>(t.degrees[r])) < 1e-9);
  }
}

TEST_CASE("tables are deterministic per seed") {
  FiniteGroup g = corpus::s4();
  CharacterTable a = tb::character_table(g, 5), b = tb::character_table(g, 5);
  REQUIRE(a.values_modp == b.values_modp);
  for (std::size_t r = 0; r < a.num_irreps; ++r)
    for (std::size_t j = 0; j < a.classes.count(); ++j)
      REQUIRE(a.values_complex[r][j] == b.values_complex[r][j]);
  // a different seed may permute nothing: rows are sorted canonically
  CharacterTable c = tb::character_table(g, 99);
  REQUIRE(a.values_modp == c.values_modp);
}
