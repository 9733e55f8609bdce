#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arfkit/arf.hpp"
#include "arfkit/census.hpp"
#include "arfkit/error.hpp"
#include "arfkit/ideal.hpp"
#include "arfkit/io.hpp"
#include "arfkit/lipman.hpp"
#include "arfkit/semigroup.hpp"
#include "arfkit/verify.hpp"

namespace arfkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string chain_string(const LipmanChain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " -> ";
    out += chain.members[i].to_string();
  }
  return out;
}

inline void print_info(std::ostream& out, const NumericalSemigroup& s) {
  const LipmanChain chain = lipman_chain(s);
  out << "semigroup: " << s.to_string() << '\n'
      << "multiplicity: " << s.multiplicity() << '\n'
      << "embedding_dimension: " << s.embedding_dimension() << '\n'
      << "frobenius: " << s.frobenius() << '\n'
      << "conductor: " << s.conductor() << '\n'
      << "genus: " << s.genus() << '\n'
      << "gaps: " << join_ints(s.gaps()) << '\n'
      << "apery(" << s.multiplicity() << "): " << join_ints(s.apery_set(s.multiplicity())) << '\n'
      << "minimal_multiplicity: " << yes_no(has_minimal_multiplicity(s)) << '\n'
      << "arf: " << yes_no(is_arf(s)) << '\n'
      << "arf_closure: " << arf_closure(s).to_string() << '\n'
      << "chain: " << chain_string(chain) << '\n'
      << "multiplicity_sequence: " << join_ints(chain.multiplicity_sequence) << '\n'
      << "End(m): " << end_semigroup(maximal_ideal(s)).to_string() << '\n';
}

}  // namespace detail

/// Entry point behind the `arfkit` executable. Returns 0 on success, 1 when
/// a verification check fails and 2 on usage or input errors.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups, relative ideals and Arf verification", "arfkit"};
  app.require_subcommand(1);

  std::string gens;
  auto* info = app.add_subcommand("info", "Invariants, Arf status, chain and End of the maximal ideal");
  info->add_option("generators", gens, "comma-separated generators")->required();

  std::string method = "all";
  auto* arf = app.add_subcommand("arf", "Arf test");
  arf->add_option("generators", gens)->required();
  arf->add_option("--method", method)->check(CLI::IsMember({"definition", "lipman", "pattern", "all"}));

  auto* closure = app.add_subcommand("closure", "Arf closure");
  closure->add_option("generators", gens)->required();

  auto* chain = app.add_subcommand("chain", "Blow-up chain of maximal ideals");
  chain->add_option("generators", gens)->required();

  bool only_reflexive = false;
  bool only_self_dual = false;
  auto* ideals = app.add_subcommand("ideals", "Normalized relative ideals");
  ideals->add_option("generators", gens)->required();
  ideals->add_flag("--reflexive", only_reflexive);
  ideals->add_flag("--self-dual", only_self_dual);

  bool all = false, thm_a = false, thm_b = false, stablechar = false, descent = false, trace_check = false;
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("generators", gens)->required();
  verify->add_flag("--all", all);
  verify->add_flag("--theorem-a", thm_a);
  verify->add_flag("--theorem-b", thm_b);
  verify->add_flag("--stablechar", stablechar);
  verify->add_flag("--descent", descent);
  verify->add_flag("--trace", trace_check);
  verify->add_flag("--json", as_json, "print the JSON report");

  int max_genus = 0;
  std::string out_path;
  std::string format = "csv";
  unsigned jobs = 1;
  auto* census_cmd = app.add_subcommand("census", "Genus-bounded census of all semigroups");
  census_cmd->add_option("--max-genus", max_genus)->required();
  census_cmd->add_option("--out", out_path)->required();
  census_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*census_cmd) {
      const CensusSummary s =
          census(max_genus, out_path, format == "json" ? CensusFormat::Json : CensusFormat::Csv, jobs);
      out << "semigroups: " << s.total << '\n'
          << "arf: " << s.arf << '\n'
          << "count_by_genus: " << join_ints(std::vector<int>(s.count_by_genus.begin(), s.count_by_genus.end())) << '\n'
          << "arf_disagreements: " << s.arf_disagreements << '\n'
          << "theorem_a_failures: " << s.theorem_a_failures << '\n'
          << "written: " << out_path << '\n';
      return s.arf_disagreements + s.theorem_a_failures > 0 ? kExitVerificationFailed : kExitOk;
    }

    const NumericalSemigroup s = parse_semigroup(gens);
    if (*info) {
      detail::print_info(out, s);
    } else if (*arf) {
      if (method == "all") {
        for (ArfMethod m : {ArfMethod::Definition, ArfMethod::Lipman, ArfMethod::Pattern})
          out << to_string(m) << ": " << detail::yes_no(is_arf(s, m)) << '\n';
        if (auto v = arf_pattern_violation(s)) {
          out << "witness: " << v->x << " + " << v->y << " - " << v->z << " = " << v->x + v->y - v->z
              << " not in S\n";
        }
      } else {
        out << detail::yes_no(is_arf(s, *parse_arf_method(method))) << '\n';
      }
    } else if (*closure) {
      out << arf_closure(s).to_string() << '\n';
    } else if (*chain) {
      const LipmanChain c = lipman_chain(s);
      for (std::size_t i = 0; i < c.size(); ++i)
        out << "A_" << i << ": " << c.members[i].to_string() << " multiplicity " << c.multiplicity_sequence[i] << '\n';
    } else if (*ideals) {
      for (const auto& e : enumerate_normalized_ideals(s)) {
        if (only_reflexive && !is_reflexive(e)) continue;
        if (only_self_dual && !is_self_dual(e)) continue;
        out << "window=" << e.window_string() << " members=" << e.to_string() << '\n';
      }
    } else if (*verify) {
      std::vector<Check> checks;
      if (thm_a) checks.push_back(Check::TheoremA);
      if (thm_b) checks.push_back(Check::TheoremB);
      if (stablechar) checks.push_back(Check::StableChar);
      if (descent) checks.push_back(Check::Descent);
      if (trace_check) checks.push_back(Check::Trace);
      if (all || checks.empty())
        checks = {Check::TheoremA, Check::TheoremB, Check::StableChar, Check::Descent, Check::Trace};
      std::vector<VerificationReport> reports;
      for (Check c : checks) reports.push_back(run_check(c, s));
      if (as_json) {
        out << verification_json(s, reports).dump(2) << '\n';
      } else {
        out << "semigroup: " << s.to_string() << '\n';
        for (const auto& r : reports) {
          out << r.check_name << ": " << to_string(r.status);
          if (!r.note.empty()) out << " (" << r.note << ')';
          if (r.witness) {
            out << " witness: " << r.witness->reason;
            if (r.witness->ideal) out << ' ' << r.witness->ideal->to_string();
            if (r.witness->semigroup) out << " over " << r.witness->semigroup->to_string();
          }
          out << '\n';
        }
      }
      for (const auto& r : reports)
        if (r.failed()) return kExitVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"arfkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace arfkit
