#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "tb/io.hpp"

using tb::Elt;
using tb::FiniteGroup;

namespace {
std::string data(const std::string& name) { return std::string(TB_TEST_DATA_DIR "/") + name; }
}  // namespace

TEST_CASE("cayley table files") {
  FiniteGroup g = tb::io::load_group(data("z4.group"));
  REQUIRE(g.order() == 4);
  REQUIRE(g.mul(3, 2) == 1);
  REQUIRE(g.is_abelian());
  FiniteGroup q = tb::io::load_group(data("q8.group"));
  REQUIRE(q.order() == 8);
  REQUIRE(q.order_multiset() == corpus::q8().order_multiset());
}

TEST_CASE("permutation files with labels") {
  FiniteGroup g = tb::io::load_group(data("s3.group"));
  REQUIRE(g.order() == 6);
  REQUIRE(g.has_labels());
  REQUIRE(g.label(g.identity()) == "()");
  REQUIRE(g.generators().size() == 2);
}

TEST_CASE("cycles in one line compose right to left") {
  FiniteGroup g = tb::io::load_group(data("compose.group"));
  // (0 1)(1 2 3) applied right first is the 4-cycle (0 1 2 3)
  REQUIRE(g.order() == 4);
  REQUIRE(g.label(g.generators()[0]) == "(0 1 2 3)");
}

TEST_CASE("endomorphism files: generator words and element indices") {
  FiniteGroup g = tb::io::load_group(data("s3.group"));
  auto id = tb::io::load_endo(g, data("s3_id.endo"));
  REQUIRE(id.is_identity());
  auto tr = tb::io::load_endo(g, data("s3_trivial.endo"));
  REQUIRE(tr == tb::trivial_endomorphism(g));
  auto conj = tb::io::load_endo(g, data("s3_word.endo"));
  REQUIRE(conj == tb::inner_automorphism(g, g.generators()[0]));
}

TEST_CASE("abelian files") {
  auto in = tb::io::load_abelian(data("fib.ab"));
  REQUIRE(in.group.rank == 2);
  REQUIRE(in.group.torsion.empty());
  REQUIRE(in.endo.matrix.at(0, 0) == 2);
  REQUIRE(in.endo.matrix.at(1, 1) == 1);
  auto mixed = tb::io::load_abelian(data("mixed.ab"));
  REQUIRE(mixed.group.rank == 1);
  REQUIRE(mixed.group.torsion == std::vector<mpz_class>{2});
  REQUIRE(tb::io::file_is_abelian(data("fib.ab")));
  REQUIRE_FALSE(tb::io::file_is_abelian(data("s3.group")));
  REQUIRE_FALSE(tb::io::file_is_abelian(data("z4.group")));
}

TEST_CASE("functional files accept real and complex entries") {
  FiniteGroup g = tb::io::load_group(data("s3.group"));
  auto f = tb::io::load_functional(data("s3_class.fn"), g.order());
  REQUIRE(f.weights.size() == 6);
  REQUIRE(f.weights[0] == std::complex<double>(2, 1));
  for (Elt x = 1; x < 6; ++x) REQUIRE(f.weights[x] == std::complex<double>(0, 0));
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](auto fn) {
    try {
      fn();
    } catch (const tb::ParseError& e) {
      return e.line;
    } catch (const tb::Error&) {
      return -1;
    }
    return -2;
  };
  REQUIRE(line_of([&] { tb::io::load_group(data("bad/alpha.group")); }) == 2);
  REQUIRE(line_of([&] { tb::io::load_group(data("bad/cycle_range.group")); }) == 3);
  REQUIRE(line_of([&] { tb::io::load_group(data("bad/repeat_point.group")); }) == 4);
  FiniteGroup s3 = tb::io::load_group(data("s3.group"));
  REQUIRE(line_of([&] { tb::io::load_endo(s3, data("bad/unknown_symbol.endo")); }) == 3);
  REQUIRE(line_of([&] { tb::io::load_functional(data("bad/short.fn"), 6); }) > 0);
  // structurally valid files with non-group content fail too, without a line
  REQUIRE_THROWS_AS(tb::io::load_group(data("bad/not_latin.group")), tb::NotAGroup);
  REQUIRE_THROWS_AS(tb::io::load_endo(s3, data("bad/missing_gen.endo")), tb::Error);
  REQUIRE_THROWS_AS(tb::io::load_abelian(data("bad/chain.ab")), tb::NotAGroup);
  REQUIRE_THROWS_AS(tb::io::load_group(data("bad/does_not_exist.group")), tb::Error);
}

TEST_CASE("comments and blank lines are ignored") {
  std::istringstream in(
      "# leading comment\n"
      "\n"
      "table:\n"
      "0 1  # trailing comment\n"
      "1 0\n");
  FiniteGroup g = tb::io::parse_group(in);
  REQUIRE(g.order() == 2);
}
