// Text input formats: group files (Cayley table or permutation generators),
// endomorphism files (generator images), abelian presentations and
// functional weight vectors.  `#` starts a comment; blank lines are skipped;
// all diagnostics carry 1-based line numbers.
#pragma once

#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tb/abelian.hpp"
#include "tb/algebra.hpp"
#include "tb/endomorphism.hpp"
#include "tb/errors.hpp"
#include "tb/group.hpp"

namespace tb::io {

namespace detail {

struct Line {
  int number;
  std::string text;
};

inline std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = raw.find_last_not_of(" \t\r");
    lines.push_back({number, raw.substr(a, b - a + 1)});
  }
  return lines;
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline std::uint64_t parse_u64(const std::string& t, int line) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a nonnegative integer, got '" + t + "'");
  }
}

// cycles compose right to left: in "(0 1)(1 2)" the cycle (1 2) acts first
inline std::vector<Elt> parse_cycles(const std::string& s, Elt degree, int line) {
  std::vector<Elt> perm(degree);
  for (Elt i = 0; i < degree; ++i) perm[i] = i;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    if (s[pos] == ' ' || s[pos] == '\t') {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw ParseError(line, "expected '(' in cycle notation");
    const std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError(line, "unbalanced '(' in cycle notation");
    const auto toks = tokens(s.substr(pos + 1, close - pos - 1));
    std::vector<Elt> cyc;
    for (const auto& t : toks) {
      const std::uint64_t v = parse_u64(t, line);
      if (v >= degree)
        throw ParseError(line, "cycle entry " + t + " out of range for degree " +
                                   std::to_string(degree));
      cyc.push_back(static_cast<Elt>(v));
    }
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
      for (std::size_t j = i + 1; j < cyc.size(); ++j)
        if (cyc[i] == cyc[j]) throw ParseError(line, "repeated point inside one cycle");
    std::vector<Elt> c(degree);
    for (Elt i = 0; i < degree; ++i) c[i] = i;
    for (std::size_t i = 0; i < cyc.size(); ++i) c[cyc[i]] = cyc[(i + 1) % cyc.size()];
    std::vector<Elt> next(degree);
    for (Elt i = 0; i < degree; ++i) next[i] = perm[c[i]];
    perm = std::move(next);
    any = true;
    pos = close + 1;
  }
  if (!any) throw ParseError(line, "expected at least one cycle, e.g. (0 1)");
  return perm;
}

inline std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace detail

inline FiniteGroup parse_group(std::istream& in, std::uint64_t order_cap = kDefaultOrderCap) {
  const auto lines = detail::significant_lines(in);
  if (lines.empty()) throw ParseError(0, "empty group file");
  const std::string& head = lines[0].text;

  if (head == "table:") {
    if (lines.size() < 2) throw ParseError(lines[0].number, "table block has no rows");
    const std::size_t order = detail::tokens(lines[1].text).size();
    if (lines.size() - 1 != order)
      throw ParseError(lines[0].number,
                       "expected " + std::to_string(order) + " rows of " + std::to_string(order));
    std::vector<std::vector<Elt>> table(order);
    for (std::size_t r = 0; r < order; ++r) {
      const auto toks = detail::tokens(lines[1 + r].text);
      if (toks.size() != order)
        throw ParseError(lines[1 + r].number, "expected " + std::to_string(order) + " entries");
      for (const auto& t : toks) {
        const std::uint64_t v = detail::parse_u64(t, lines[1 + r].number);
        if (v >= order) throw ParseError(lines[1 + r].number, "entry " + t + " out of range");
        table[r].push_back(static_cast<Elt>(v));
      }
    }
    return FiniteGroup::from_table(static_cast<Elt>(order), table, std::nullopt, {}, order_cap);
  }

  if (head == "perm:") {
    if (lines.size() < 2 || detail::tokens(lines[1].text).size() != 2 ||
        detail::tokens(lines[1].text)[0] != "degree:")
      throw ParseError(lines.size() < 2 ? lines[0].number : lines[1].number,
                       "perm block needs 'degree: k' on its first line");
    const std::uint64_t degree =
        detail::parse_u64(detail::tokens(lines[1].text)[1], lines[1].number);
    std::vector<std::vector<Elt>> gens;
    for (std::size_t i = 2; i < lines.size(); ++i)
      gens.push_back(detail::parse_cycles(lines[i].text, static_cast<Elt>(degree),
                                          lines[i].number));
    return FiniteGroup::from_permutations(static_cast<Elt>(degree), gens, order_cap);
  }

  throw ParseError(lines[0].number, "group file must start with 'table:' or 'perm:'");
}

inline FiniteGroup load_group(const std::string& path, std::uint64_t order_cap = kDefaultOrderCap) {
  auto in = detail::open(path);
  return parse_group(in, order_cap);
}

// `images:` then one `POS -> RHS` line per generator, where POS indexes the
// group's generator list and RHS is an element index or a word g0 g1 ... in
// the generators
inline Endomorphism parse_endo(const FiniteGroup& g, std::istream& in) {
  const auto lines = detail::significant_lines(in);
  if (lines.empty() || lines[0].text != "images:")
    throw ParseError(lines.empty() ? 0 : lines[0].number,
                     "endomorphism file must start with 'images:'");
  const auto& gens = g.generators();
  std::vector<Elt> images(gens.size());
  std::vector<char> seen(gens.size(), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int ln = lines[i].number;
    auto toks = detail::tokens(lines[i].text);
    if (toks.size() < 3 || toks[1] != "->")
      throw ParseError(ln, "expected 'generator_position -> image'");
    const std::uint64_t pos = detail::parse_u64(toks[0], ln);
    if (pos >= gens.size())
      throw ParseError(ln, "generator position " + toks[0] + " out of range (group has " +
                               std::to_string(gens.size()) + " generators)");
    if (seen[pos]) throw ParseError(ln, "generator position " + toks[0] + " assigned twice");
    seen[pos] = 1;
    Elt img;
    if (toks.size() == 3 && toks[2].find('g') == std::string::npos) {
      const std::uint64_t v = detail::parse_u64(toks[2], ln);
      if (v >= g.order()) throw ParseError(ln, "element index " + toks[2] + " out of range");
      img = static_cast<Elt>(v);
    } else {
      img = g.identity();
      for (std::size_t t = 2; t < toks.size(); ++t) {
        if (toks[t].size() < 2 || toks[t][0] != 'g')
          throw ParseError(ln, "expected generator symbol gK, got '" + toks[t] + "'");
        const std::uint64_t k = detail::parse_u64(toks[t].substr(1), ln);
        if (k >= gens.size())
          throw ParseError(ln, "generator symbol g" + std::to_string(k) + " out of range");
        img = g.mul(img, gens[k]);
      }
    }
    images[pos] = img;
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!seen[i])
      throw ParseError(lines.back().number,
                       "no image given for generator position " + std::to_string(i));
  return hom_from_generator_images(g, images);
}

inline Endomorphism load_endo(const FiniteGroup& g, const std::string& path) {
  auto in = detail::open(path);
  return parse_endo(g, in);
}

struct AbelianInput {
  FgAbelianGroup group;
  AbelianEndo endo;
};

// `rank: r`, optional `torsion: m1 m2 ...`, then `matrix:` rows
inline AbelianInput parse_abelian(std::istream& in) {
  const auto lines = detail::significant_lines(in);
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
  std::size_t i = 0;
  if (i >= lines.size() || detail::tokens(lines[i].text)[0] != "rank:")
    throw ParseError(lines.empty() ? 0 : lines[0].number, "abelian file must start with 'rank:'");
  {
    const auto toks = detail::tokens(lines[i].text);
    if (toks.size() != 2) throw ParseError(lines[i].number, "expected 'rank: r'");
    rank = detail::parse_u64(toks[1], lines[i].number);
    ++i;
  }
  if (i < lines.size() && detail::tokens(lines[i].text)[0] == "torsion:") {
    const auto toks = detail::tokens(lines[i].text);
    for (std::size_t t = 1; t < toks.size(); ++t) {
      try {
        torsion.emplace_back(toks[t]);
      } catch (const std::exception&) {
        throw ParseError(lines[i].number, "bad torsion invariant '" + toks[t] + "'");
      }
    }
    ++i;
  }
  if (i >= lines.size() || lines[i].text != "matrix:")
    throw ParseError(i < lines.size() ? lines[i].number : lines.back().number,
                     "expected 'matrix:' block");
  ++i;
  const std::size_t n = rank + torsion.size();
  if (lines.size() - i != n)
    throw ParseError(lines.back().number,
                     "matrix block must have " + std::to_string(n) + " rows");
  ZMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto toks = detail::tokens(lines[i + r].text);
    if (toks.size() != n)
      throw ParseError(lines[i + r].number, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      try {
        m.at(r, c) = mpz_class(toks[c]);
      } catch (const std::exception&) {
        throw ParseError(lines[i + r].number, "bad integer '" + toks[c] + "'");
      }
    }
  }
  FgAbelianGroup grp = fg_abelian(rank, std::move(torsion));
  AbelianEndo endo = abelian_endo(grp, std::move(m));
  return AbelianInput{std::move(grp), std::move(endo)};
}

inline AbelianInput load_abelian(const std::string& path) {
  auto in = detail::open(path);
  return parse_abelian(in);
}

// first significant line decides whether a group path holds an abelian
// presentation or a concrete group
inline bool file_is_abelian(const std::string& path) {
  auto in = detail::open(path);
  const auto lines = detail::significant_lines(in);
  return !lines.empty() && detail::tokens(lines[0].text)[0] == "rank:";
}

// `weights:` then one `re [im]` line per group element
inline FunctionalOnA parse_functional(std::istream& in, Elt order) {
  const auto lines = detail::significant_lines(in);
  if (lines.empty() || lines[0].text != "weights:")
    throw ParseError(lines.empty() ? 0 : lines[0].number,
                     "functional file must start with 'weights:'");
  if (lines.size() - 1 != order)
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(order) + " weight lines");
  FunctionalOnA f(order);
  for (Elt x = 0; x < order; ++x) {
    const int ln = lines[1 + x].number;
    const auto toks = detail::tokens(lines[1 + x].text);
    if (toks.empty() || toks.size() > 2)
      throw ParseError(ln, "expected 're' or 're im'");
    try {
      std::size_t used = 0;
      const double re = std::stod(toks[0], &used);
      if (used != toks[0].size()) throw std::invalid_argument(toks[0]);
      double im = 0.0;
      if (toks.size() == 2) {
        const double v = std::stod(toks[1], &used);
        if (used != toks[1].size()) throw std::invalid_argument(toks[1]);
        im = v;
      }
      f.weights[x] = std::complex<double>(re, im);
    } catch (const std::exception&) {
      throw ParseError(ln, "bad weight on this line");
    }
  }
  return f;
}

inline FunctionalOnA load_functional(const std::string& path, Elt order) {
  auto in = detail::open(path);
  return parse_functional(in, order);
}

}  // namespace tb::io
