// Command dispatch behind the tburn binary.  run() is a pure function of
// the config (plus input files), writing the whole report to one stream and
// returning the process exit code: 0 success, 1 a theorem-level check
// failed, 2 input or computation error.  Identical config + seed gives
// byte-identical output.
#pragma once

#include <complex>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "tb/abelian.hpp"
#include "tb/aofm.hpp"
#include "tb/blocks.hpp"
#include "tb/character_table.hpp"
#include "tb/commutator.hpp"
#include "tb/congruence.hpp"
#include "tb/dual_map.hpp"
#include "tb/errors.hpp"
#include "tb/io.hpp"
#include "tb/twisted.hpp"

namespace tb::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string group_path;
  std::string endo_path;
  std::string functional_path;  // measure: supplied functional; else seeded random
  double tol = 1e-9;
  std::uint64_t order_cap = kDefaultOrderCap;
  std::uint64_t n = 12;  // congruence depth / r-sequence length
  std::uint64_t seed = 1;
  bool json = false;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline std::string fmt(std::complex<double> z) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.9g%+.9gi", z.real(), z.imag());
  return buf;
}

inline Json base(const RunConfig& c) {
  Json j;
  j["schema"] = 1;
  j["command"] = c.command;
  return j;
}

inline FiniteGroup require_group(const RunConfig& c) {
  if (c.group_path.empty()) throw Error("--group is required for this command");
  return io::load_group(c.group_path, c.order_cap);
}

inline Endomorphism require_endo(const RunConfig& c, const FiniteGroup& g) {
  if (c.endo_path.empty()) throw Error("--endo is required for this command");
  return io::load_endo(g, c.endo_path);
}

inline std::vector<std::optional<mpz_class>> finite_r_sequence(const FiniteGroup& g,
                                                               const Endomorphism& phi,
                                                               std::uint64_t n_max) {
  std::vector<std::optional<mpz_class>> seq;
  Endomorphism power = phi;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (n > 1) power = compose(power, phi);
    seq.emplace_back(mpz_class(reidemeister_number(g, power)));
  }
  return seq;
}

inline int cmd_classes(const RunConfig& c, std::ostream& out) {
  const FiniteGroup g = require_group(c);
  const Endomorphism phi = require_endo(c, g);
  const TwistedPartition part = twisted_classes(g, phi);
  std::vector<std::uint32_t> sizes(part.reidemeister_number, 0);
  for (Elt x = 0; x < g.order(); ++x) ++sizes[part.class_of[x]];
  if (c.json) {
    Json j = base(c);
    j["order"] = g.order();
    j["reidemeister_number"] = part.reidemeister_number;
    j["representatives"] = part.representatives;
    j["class_sizes"] = sizes;
    j["class_of"] = part.class_of;
    out << j.dump(2) << "\n";
  } else {
    out << "group order " << g.order() << "\n";
    out << "twisted classes: " << part.reidemeister_number << "\n";
    for (std::uint32_t cl = 0; cl < part.reidemeister_number; ++cl)
      out << "class " << cl << ": size " << sizes[cl] << " rep " << part.representatives[cl]
          << " (" << g.label(part.representatives[cl]) << ")\n";
    out << "R(phi) = " << part.reidemeister_number << "\n";
  }
  return 0;
}

inline int cmd_chartable(const RunConfig& c, std::ostream& out) {
  const FiniteGroup g = require_group(c);
  const CharacterTable t = character_table(g, c.seed);
  if (c.json) {
    Json j = base(c);
    j["order"] = g.order();
    j["num_irreps"] = t.num_irreps;
    j["prime"] = t.prime;
    j["seed"] = t.seed;
    j["exponent"] = t.root_map.exponent;
    j["class_reps"] = t.classes.class_reps;
    j["class_sizes"] = t.classes.class_sizes;
    j["degrees"] = t.degrees;
    Json rows = Json::array();
    for (const auto& row : t.values_complex) {
      Json r = Json::array();
      for (const auto& z : row) r.push_back(Json::array({z.real(), z.imag()}));
      rows.push_back(std::move(r));
    }
    j["values"] = std::move(rows);
    j["values_modp"] = t.values_modp;
    out << j.dump(2) << "\n";
  } else {
    out << "group order " << g.order() << ", " << t.num_irreps << " classes\n";
    out << "prime p = " << t.prime << ", seed = " << t.seed << "\n";
    out << "class sizes:";
    for (auto s : t.classes.class_sizes) out << " " << s;
    out << "\nclass reps:";
    for (auto r : t.classes.class_reps) out << " " << g.label(r);
    out << "\ndegrees:";
    for (auto d : t.degrees) out << " " << d;
    out << "\n";
    for (std::size_t r = 0; r < t.num_irreps; ++r) {
      out << "chi[" << r << "]:";
      for (std::size_t l = 0; l < t.num_irreps; ++l) out << " " << fmt(t.values_complex[r][l]);
      out << "\n";
    }
  }
  return 0;
}

inline int cmd_dual_fixed(const RunConfig& c, std::ostream& out) {
  const FiniteGroup g = require_group(c);
  const Endomorphism phi = require_endo(c, g);
  const CharacterTable t = character_table(g, c.seed);
  const DualMapReport rep = dual_map(g, phi, t);
  if (c.json) {
    Json j = base(c);
    j["s_number"] = rep.s_number;
    j["fixed_irreps"] = rep.fixed_irreps;
    j["class_image"] = rep.class_image;
    j["irreducible_after_composition"] = rep.irreducible_after_composition;
    out << j.dump(2) << "\n";
  } else {
    out << "S(phi) = " << rep.s_number << "\n";
    out << "fixed irreps:";
    for (auto r : rep.fixed_irreps) out << " " << r;
    out << "\nclass image:";
    for (auto ci : rep.class_image) out << " " << ci;
    out << "\nirreducible after composition:";
    for (bool b : rep.irreducible_after_composition) out << " " << (b ? 1 : 0);
    out << "\n";
  }
  return 0;
}

inline int cmd_burnside(const RunConfig& c, std::ostream& out) {
  const FiniteGroup g = require_group(c);
  const Endomorphism phi = require_endo(c, g);
  const std::uint32_t r = reidemeister_number(g, phi);
  const CharacterTable t = character_table(g, c.seed);
  const DualMapReport rep = dual_map(g, phi, t);
  const bool ok = r == rep.s_number;
  if (c.json) {
    Json j = base(c);
    j["r"] = r;
    j["s"] = rep.s_number;
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "R=" << r << " S=" << rep.s_number << (ok ? " OK" : " MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}

inline int cmd_glimm(const RunConfig& c, std::ostream& out) {
  const FiniteGroup g = require_group(c);
  const Endomorphism phi = require_endo(c, g);
  const CharacterTable t = character_table(g, c.seed);
  const BlockDecomposition blocks = block_decomposition(g, t, c.seed);
  const TwistedCommutatorReport rep = per_block_codimension(g, phi, blocks, c.tol);
  if (c.json) {
    Json j = base(c);
    j["global_codim"] = rep.global_codim;
    j["block_dims"] = blocks.block_dims;
    j["per_block_codim"] = rep.per_block_codim;
    j["gfp_blocks"] = rep.gfp_blocks;
    j["s_star"] = rep.s_star;
    j["tol"] = c.tol;
    j["seed"] = c.seed;
    out << j.dump(2) << "\n";
  } else {
    out << "global codim (R_*) = " << rep.global_codim << "\n";
    for (std::size_t r = 0; r < rep.per_block_codim.size(); ++r)
      out << "block " << r << ": dim " << blocks.block_dims[r] << " codim "
          << rep.per_block_codim[r] << (rep.per_block_codim[r] > 0 ? " GFP" : "") << "\n";
    out << "S_* = " << rep.s_star << "\n";
  }
  return 0;
}

inline int cmd_measure(const RunConfig& c, std::ostream& out) {
  const FiniteGroup g = require_group(c);
  const Endomorphism phi = require_endo(c, g);
  const CharacterTable t = character_table(g, c.seed);
  const BlockDecomposition blocks = block_decomposition(g, t, c.seed);

  FunctionalOnA f(g.order());
  if (!c.functional_path.empty()) {
    f = io::load_functional(c.functional_path, g.order());
  } else {
    Rng rng(c.seed);
    for (Elt x = 0; x < g.order(); ++x)
      f.weights[x] = std::complex<double>(rng.normal(), rng.normal());
  }

  const double fnorm = functional_norm(f, blocks);
  const JordanParts jp = jordan_decompose(f, blocks);
  const double n1p = functional_norm(jp.f1_plus, blocks);
  const double n1m = functional_norm(jp.f1_minus, blocks);
  const double n2p = functional_norm(jp.f2_plus, blocks);
  const double n2m = functional_norm(jp.f2_minus, blocks);
  FunctionalOnA f1(g.order()), f2(g.order());
  f1.weights = jp.f1_plus.weights - jp.f1_minus.weights;
  f2.weights = jp.f2_plus.weights - jp.f2_minus.weights;
  const double add1 = std::abs(functional_norm(f1, blocks) - (n1p + n1m));
  const double add2 = std::abs(functional_norm(f2, blocks) - (n2p + n2m));

  const FiniteAOFM mu = aofm_from_functional(f, blocks);
  const double anorm = aofm_norm(mu);
  const FunctionalOnA total = aofm_total(mu, blocks);
  const double recon = (total.weights - f.weights).cwiseAbs().maxCoeff();
  const double isometry = std::abs(anorm - fnorm);
  const TwistedInvarianceReport inv = check_twisted_invariance(f, phi, blocks, c.tol);

  std::vector<double> atom_norms;
  for (const auto& atom : mu.atoms) atom_norms.push_back(nuclear_norm(atom));

  if (c.json) {
    Json j = base(c);
    j["functional_source"] = c.functional_path.empty() ? "random" : c.functional_path;
    j["seed"] = c.seed;
    j["functional_norm"] = fnorm;
    j["jordan_norms"] = Json::array({n1p, n1m, n2p, n2m});
    j["jordan_additivity_error"] = Json::array({add1, add2});
    j["atom_norms"] = atom_norms;
    j["aofm_norm"] = anorm;
    j["isometry_error"] = isometry;
    j["reassembly_error"] = recon;
    j["invariant"] = inv.invariant;
    j["max_violation"] = inv.max_violation;
    if (inv.invariant) {
      j["gfp_blocks"] = inv.gfp_blocks;
      j["off_gfp_mass"] = inv.off_gfp_mass;
      j["concentrated_on_gfp"] = inv.concentrated_on_gfp;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "functional: "
        << (c.functional_path.empty() ? "random, seed " + std::to_string(c.seed)
                                      : c.functional_path)
        << "\n";
    out << "functional norm = " << fmt(fnorm) << "\n";
    out << "jordan norms: f1+ " << fmt(n1p) << ", f1- " << fmt(n1m) << ", f2+ " << fmt(n2p)
        << ", f2- " << fmt(n2m) << "\n";
    out << "jordan additivity error: " << fmt(add1) << " " << fmt(add2) << "\n";
    out << "atom norms:";
    for (double a : atom_norms) out << " " << fmt(a);
    out << "\naofm norm = " << fmt(anorm) << " (isometry error " << fmt(isometry) << ")\n";
    out << "reassembly error = " << fmt(recon) << "\n";
    out << "twisted invariant: " << (inv.invariant ? "yes" : "no") << " (max violation "
        << fmt(inv.max_violation) << ")\n";
    if (inv.invariant) {
      out << "gfp blocks:";
      for (auto b : inv.gfp_blocks) out << " " << b;
      out << "\noff-gfp mass = " << fmt(inv.off_gfp_mass) << " concentrated: "
          << (inv.concentrated_on_gfp ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

inline int cmd_abelian(const RunConfig& c, std::ostream& out) {
  if (c.group_path.empty()) throw Error("--group is required for this command");
  const io::AbelianInput in = io::load_abelian(c.group_path);
  const auto seq = r_sequence(in.group, in.endo, c.n);
  auto show = [](const std::optional<mpz_class>& v) {
    return v ? v->get_str() : std::string("Infinite");
  };
  if (c.json) {
    Json j = base(c);
    j["rank"] = in.group.rank;
    Json tor = Json::array();
    for (const auto& m : in.group.torsion) tor.push_back(m.get_str());
    j["torsion"] = std::move(tor);
    j["r"] = show(seq[0]);
    Json rs = Json::array();
    for (const auto& v : seq) rs.push_back(show(v));
    j["r_sequence"] = std::move(rs);
    out << j.dump(2) << "\n";
  } else {
    out << "rank " << in.group.rank << ", torsion:";
    if (in.group.torsion.empty()) out << " (none)";
    for (const auto& m : in.group.torsion) out << " " << m.get_str();
    out << "\nR(phi) = " << show(seq[0]) << "\n";
    out << "R(phi^n), n = 1.." << c.n << ":";
    for (const auto& v : seq) out << " " << show(v);
    out << "\n";
  }
  return 0;
}

inline int cmd_congruence(const RunConfig& c, std::ostream& out) {
  if (c.group_path.empty()) throw Error("--group is required for this command");
  std::vector<std::optional<mpz_class>> seq;
  if (io::file_is_abelian(c.group_path)) {
    const io::AbelianInput in = io::load_abelian(c.group_path);
    seq = r_sequence(in.group, in.endo, c.n);
  } else {
    const FiniteGroup g = require_group(c);
    const Endomorphism phi = require_endo(c, g);
    seq = finite_r_sequence(g, phi, c.n);
  }
  const CongruenceReport rep = congruence_check(seq, c.n);
  auto show = [](const std::optional<mpz_class>& v) {
    return v ? v->get_str() : std::string("Infinite");
  };
  if (c.json) {
    Json j = base(c);
    Json rs = Json::array();
    for (const auto& v : seq) rs.push_back(show(v));
    j["r_sequence"] = std::move(rs);
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
      Json je;
      je["n"] = e.n;
      je["divisors"] = e.divs;
      je["skipped"] = e.skipped;
      if (!e.skipped) {
        je["sum"] = e.sum.get_str();
        je["residue"] = e.residue.get_str();
        je["pass"] = e.pass;
      }
      entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["checked"] = rep.checked;
    j["skipped"] = rep.skipped;
    j["all_pass"] = rep.all_pass;
    out << j.dump(2) << "\n";
  } else {
    out << "R-sequence:";
    for (const auto& v : seq) out << " " << show(v);
    out << "\n";
    for (const auto& e : rep.entries) {
      out << "n=" << e.n << ": ";
      if (e.skipped)
        out << "skipped (some R(phi^(n/d)) is Infinite)\n";
      else
        out << "sum " << e.sum.get_str() << " residue " << e.residue.get_str()
            << (e.pass ? " pass" : " FAIL") << "\n";
    }
    out << "verdict: " << (rep.all_pass ? "pass" : "FAIL") << " (" << rep.checked
        << " checked, " << rep.skipped << " skipped)\n";
  }
  return rep.all_pass ? 0 : 1;
}

}  // namespace detail

inline int run(const RunConfig& c, std::ostream& out) {
  try {
    if (!(c.tol > 0.0)) throw Error("tolerance must be positive");
    if (c.n < 1) throw Error("depth n must be >= 1");
    if (c.command == "classes") return detail::cmd_classes(c, out);
    if (c.command == "chartable") return detail::cmd_chartable(c, out);
    if (c.command == "dual-fixed") return detail::cmd_dual_fixed(c, out);
    if (c.command == "burnside") return detail::cmd_burnside(c, out);
    if (c.command == "glimm") return detail::cmd_glimm(c, out);
    if (c.command == "measure") return detail::cmd_measure(c, out);
    if (c.command == "abelian") return detail::cmd_abelian(c, out);
    if (c.command == "congruence") return detail::cmd_congruence(c, out);
    throw Error("unknown command '" + c.command + "'");
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tb::cli
