#include <numeric>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "tb/commutator.hpp"
#include "tb/twisted.hpp"

using tb::FiniteGroup;

TEST_CASE("global codimension counts twisted classes") {
  FiniteGroup z4 = tb::cyclic_group(4);
  std::vector<tb::Elt> img(4);
  for (tb::Elt x = 0; x < 4; ++x) img[x] = z4.inv(x);
  tb::Endomorphism phi(z4, img);
  auto rep = tb::twisted_commutator_space(z4, phi);
  REQUIRE(rep.global_codim == 2);

  FiniteGroup s3 = corpus::s3();
  auto rep2 = tb::twisted_commutator_space(s3, tb::identity_endomorphism(s3));
  REQUIRE(rep2.global_codim == 3);
}

TEST_CASE("per block codimensions on frozen cases") {
  FiniteGroup z4 = tb::cyclic_group(4);
  std::vector<tb::Elt> img(4);
  for (tb::Elt x = 0; x < 4; ++x) img[x] = z4.inv(x);
  tb::Endomorphism phi(z4, img);
  auto t = tb::character_table(z4);
  auto bd = tb::block_decomposition(z4, t);
  auto rep = tb::per_block_codimension(z4, phi, bd);
  REQUIRE(rep.per_block_codim == std::vector<std::size_t>{1, 0, 0, 1});
  REQUIRE(rep.gfp_blocks == std::vector<std::size_t>{0, 3});
  REQUIRE(rep.s_star == 2);
  REQUIRE(rep.global_codim == 2);

  FiniteGroup s3 = corpus::s3();
  auto t3 = tb::character_table(s3);
  auto bd3 = tb::block_decomposition(s3, t3);
  auto rep3 = tb::per_block_codimension(s3, tb::identity_endomorphism(s3), bd3);
  REQUIRE(rep3.per_block_codim == std::vector<std::size_t>{1, 1, 1});
  REQUIRE(rep3.s_star == 3);
}

TEST_CASE("blockwise sum equals the exact global codimension on sampled endomorphisms") {
  for (const FiniteGroup& g : {corpus::d4(), corpus::q8(), corpus::a4(), corpus::z2z4()}) {
    auto t = tb::character_table(g);
    auto bd = tb::block_decomposition(g, t);
    for (const auto& phi : corpus::sample_endomorphisms(g, 20)) {
      auto rep = tb::per_block_codimension(g, phi, bd);
      REQUIRE(rep.s_star ==
              std::accumulate(rep.per_block_codim.begin(), rep.per_block_codim.end(), 0ul));
      REQUIRE(rep.s_star == rep.global_codim);
      REQUIRE(rep.global_codim == tb::reidemeister_number(g, phi));
      REQUIRE(rep.gfp_blocks.size() <= rep.s_star);
    }
  }
}

TEST_CASE("endomorphism blocks have codimension at most one") {
  // K_I has codimension 0 or 1 in each block: the quotient carries an
  // invariant functional built from a twisted class indicator or nothing
  FiniteGroup g = corpus::s4();
  auto t = tb::character_table(g);
  auto bd = tb::block_decomposition(g, t);
  for (const auto& phi : corpus::sample_endomorphisms(g, 12)) {
    auto rep = tb::per_block_codimension(g, phi, bd);
    for (std::size_t c : rep.per_block_codim) REQUIRE(c <= 1);
    REQUIRE(rep.gfp_blocks.size() == rep.s_star);
  }
}

TEST_CASE("trivial endomorphism leaves only the trivial block") {
  FiniteGroup g = corpus::q8();
  auto t = tb::character_table(g);
  auto bd = tb::block_decomposition(g, t);
  auto rep = tb::per_block_codimension(g, tb::trivial_endomorphism(g), bd);
  REQUIRE(rep.s_star == 1);
  REQUIRE(rep.gfp_blocks == std::vector<std::size_t>{0});
  REQUIRE(rep.per_block_codim[0] == 1);
}
