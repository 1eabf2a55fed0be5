#pragma once
// Command-line front end. Kept in a header so the test suite can run commands
// in-process; tools/pclean.cpp is a thin wrapper around run_command.
//
// Exit codes: 0 success, 2 for the mathematically negative answers
// (not Cohen-Macaulay / not sequentially Cohen-Macaulay), 1 for usage or
// internal errors, and 1 for a fuzz run that found mismatches.

#include <CLI11.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "pclean/json_io.hpp"
#include "pclean/parser.hpp"

namespace pclean {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline Ambient ambient_from_flag(const std::string& vars) {
  if (vars.empty()) return Ambient::xyzw();
  std::vector<std::string> names;
  std::string current;
  for (char c : vars) {
    if (c == ',') {
      names.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  names.push_back(current);
  return Ambient(std::move(names));
}

inline std::vector<AssConfigKind> kinds_from_flag(const std::string& kinds) {
  std::vector<AssConfigKind> out;
  std::string current;
  auto flush = [&]() {
    if (current.empty()) return;
    auto k = kind_from_name(current);
    if (!k) throw CLI::ValidationError("--kinds", "unknown configuration kind '" + current + "'");
    out.push_back(*k);
    current.clear();
  };
  for (char c : kinds) {
    if (c == ',')
      flush();
    else
      current += c;
  }
  flush();
  return out;
}

}  // namespace detail

inline CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out, err;

  CLI::App app{"monomial ideals in four variables: Cohen-Macaulay checks, clean and "
               "pretty clean filtrations, Stanley decompositions"};
  app.require_subcommand(1);
  app.fallthrough();  // parent flags may follow the subcommand
  bool json = false;
  std::string vars_flag;
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_option("--vars", vars_flag, "comma-separated variable names (default x,y,z,w)");

  std::string ideal_text;
  auto add_ideal_arg = [&](CLI::App* cmd) {
    cmd->add_option("ideal", ideal_text, "ideal, e.g. \"(x^2, y)\" or \"intersect((x,y),(z,w))\"")
        ->required();
  };

  CLI::App* cmd_decompose = app.add_subcommand("decompose", "irreducible and primary decomposition");
  add_ideal_arg(cmd_decompose);
  CLI::App* cmd_ass = app.add_subcommand("ass", "associated primes");
  add_ideal_arg(cmd_ass);
  CLI::App* cmd_dimfilt = app.add_subcommand("dimfilt", "dimension filtration");
  add_ideal_arg(cmd_dimfilt);
  CLI::App* cmd_depth = app.add_subcommand("depth", "depth, dimension and Betti table");
  add_ideal_arg(cmd_depth);
  int tmax = -1;
  cmd_depth->add_option("--tmax", tmax, "also print the Hilbert function up to this degree");
  CLI::App* cmd_check = app.add_subcommand("check", "Cohen-Macaulay and sequential CM status");
  add_ideal_arg(cmd_check);
  CLI::App* cmd_filtrate = app.add_subcommand("filtrate", "build a verified pretty clean filtration");
  add_ideal_arg(cmd_filtrate);
  CLI::App* cmd_stanley = app.add_subcommand("stanley", "Stanley decomposition and sdepth report");
  add_ideal_arg(cmd_stanley);

  CLI::App* cmd_fuzz = app.add_subcommand("fuzz", "randomized cross-validation campaign");
  CampaignConfig cfg;
  std::string kinds_flag;
  cmd_fuzz->add_option("--seed", cfg.seed, "PRNG seed");
  cmd_fuzz->add_option("--count", cfg.count, "number of sampled ideals");
  cmd_fuzz->add_option("--max-exp", cfg.max_exp, "exponent bound for sampled components");
  cmd_fuzz->add_option("--max-comps", cfg.max_comps, "component bound for mixed samples");
  cmd_fuzz->add_option("--kinds", kinds_flag, "comma-separated configuration kinds to sample");
  cmd_fuzz->add_option("--tmax", cfg.tmax, "Hilbert bound for consistency checks");

  std::vector<const char*> argv;
  argv.push_back("pclean");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out, usage_err;
    int code = app.exit(e, usage_out, usage_err);
    result.exit_code = code == 0 ? 0 : 1;
    result.out = usage_out.str();
    result.err = usage_err.str();
    return result;
  }

  try {
    Ambient amb = detail::ambient_from_flag(vars_flag);
    auto parsed = [&]() { return parse_ideal(ideal_text, amb); };

    if (*cmd_decompose) {
      MonomialIdeal I = parsed();
      Json j = decomposition_json(I);
      if (json)
        out << j.dump() << "\n";
      else {
        out << "irreducible components:\n";
        for (const IrreducibleComponent& c : irreducible_decomposition(I))
          out << "  " << c.to_ideal(amb).to_string() << "\n";
        out << "primary components:\n";
        for (const PrimaryComponent& c : primary_components(I))
          out << "  " << c.radical.to_string(amb) << "-primary: " << c.ideal.to_string() << "\n";
      }
    } else if (*cmd_ass) {
      MonomialIdeal I = parsed();
      if (json) {
        Json j;
        j["ass"] = decomposition_json(I)["ass"];
        out << j.dump() << "\n";
      } else {
        for (const VarSet& p : ass_primes(I)) out << p.to_string(amb) << "\n";
      }
    } else if (*cmd_dimfilt) {
      MonomialIdeal I = parsed();
      Json j = dimension_filtration_json(I);
      if (json)
        out << j.dump() << "\n";
      else {
        DimensionFiltration df = dimension_filtration(I);
        for (int i = -1; i < df.nvars(); ++i)
          out << "D_" << i << " = " << df.level(i).to_string() << "\n";
        if (amb.size() == 4)
          out << "u = " << principal_part(I).to_string(amb) << ", scm = "
              << (is_scm(I) ? "true" : "false") << "\n";
      }
    } else if (*cmd_depth) {
      MonomialIdeal I = parsed();
      Json j = depth_json(I);
      if (tmax >= 0) j["hilbert"] = hilbert_function(I, tmax);
      if (json)
        out << j.dump() << "\n";
      else {
        out << "depth " << j["depth"] << ", dim " << j["dim"] << ", pd " << j["pd"] << ", cm "
            << (j["cm"].get<bool>() ? "true" : "false") << "\n";
        if (tmax >= 0) {
          out << "hilbert:";
          for (long long v : hilbert_function(I, tmax)) out << " " << v;
          out << "\n";
        }
      }
    } else if (*cmd_check) {
      MonomialIdeal I = parsed();
      if (amb.size() != 4)
        throw std::invalid_argument("check needs the four-variable ambient");
      bool cm = is_cm(I);
      bool scm = is_scm(I);
      Json j;
      j["cm"] = cm;
      j["scm"] = scm;
      std::vector<VarSet> assp = ass_primes(I);
      bool ht2 = std::all_of(assp.begin(), assp.end(),
                             [](const VarSet& p) { return height(p) == 2; });
      if (ht2) {
        AssConfiguration config = classify_ass_config(assp);
        j["config"] = kind_name(config.kind);
        j["perm"] = perm_json(config, amb);
        j["condition"] = condition_json(cm_condition(config, primary_components(I)));
      } else {
        j["config"] = nullptr;
        j["perm"] = nullptr;
        j["condition"] = nullptr;
      }
      if (json)
        out << j.dump() << "\n";
      else {
        out << "cm: " << (cm ? "true" : "false") << "\n"
            << "scm: " << (scm ? "true" : "false") << "\n";
        if (ht2)
          out << "config: " << j["config"].get<std::string>() << "\n"
              << "condition: " << (j["condition"]["satisfied"].get<bool>() ? "satisfied" : "unsatisfied")
              << "\n";
      }
      if (!scm) result.exit_code = 2;
    } else if (*cmd_filtrate) {
      MonomialIdeal I = parsed();
      if (amb.size() != 4)
        throw std::invalid_argument("filtrate needs the four-variable ambient");
      // configuration context when the ideal is height-2 pure
      Json j;
      std::vector<VarSet> assp = ass_primes(I);
      bool ht2 = std::all_of(assp.begin(), assp.end(),
                             [](const VarSet& p) { return height(p) == 2; });
      if (ht2) {
        AssConfiguration config = classify_ass_config(assp);
        j["config"] = kind_name(config.kind);
        j["perm"] = perm_json(config, amb);
        j["condition"] = condition_json(cm_condition(config, primary_components(I)));
      } else {
        j["config"] = nullptr;
        j["perm"] = nullptr;
        j["condition"] = nullptr;
      }
      try {
        PrimeFiltration pf = build_pretty_clean(I);
        j["filtration"] = filtration_json(pf);
        j["error"] = nullptr;
        if (json)
          out << j.dump() << "\n";
        else {
          out << "base " << pf.base.to_string() << "\n";
          for (const FiltrationStep& s : pf.steps)
            out << "  + (" << s.u.to_string(amb) << ")  colon " << s.prime.to_string(amb) << "\n";
          FiltrationClass cls = classify_filtration(pf);
          out << "clean: " << (cls.clean ? "true" : "false")
              << ", pretty_clean: " << (cls.pretty_clean ? "true" : "false") << "\n";
        }
      } catch (const NotSequentiallyCMError&) {
        j["filtration"] = nullptr;
        j["error"] = "NotSequentiallyCM";
        out << (json ? j.dump() : std::string("error: NotSequentiallyCM")) << "\n";
        result.exit_code = 2;
      } catch (const NotCohenMacaulayError&) {
        j["filtration"] = nullptr;
        j["error"] = "NotCohenMacaulay";
        out << (json ? j.dump() : std::string("error: NotCohenMacaulay")) << "\n";
        result.exit_code = 2;
      }
    } else if (*cmd_stanley) {
      MonomialIdeal I = parsed();
      if (amb.size() != 4)
        throw std::invalid_argument("stanley needs the four-variable ambient");
      try {
        PrimeFiltration pf = build_pretty_clean(I);
        StanleyDecomposition sd = to_stanley(pf);
        if (!verify_stanley(sd, standard_box(I)))
          throw InternalVerificationError("Stanley decomposition failed its box check");
        StanleyReport rep = stanley_report(I, sd);
        Json j = stanley_json(sd, rep);
        if (json)
          out << j.dump() << "\n";
        else {
          for (const StanleySpace& s : sd.spaces)
            out << s.u.to_string(amb) << " * K" << s.free_vars.to_string(amb) << "\n";
          out << "sdepth " << rep.sdepth << ", depth " << rep.depth << ", stanley_ok "
              << (rep.stanley_ok ? "true" : "false") << "\n";
        }
      } catch (const NotSequentiallyCMError&) {
        Json j;
        j["error"] = "NotSequentiallyCM";
        out << (json ? j.dump() : std::string("error: NotSequentiallyCM")) << "\n";
        result.exit_code = 2;
      }
    } else if (*cmd_fuzz) {
      if (!kinds_flag.empty()) cfg.kinds = detail::kinds_from_flag(kinds_flag);
      CampaignReport report = fuzz_campaign(cfg);
      if (json)
        out << campaign_json(report).dump() << "\n";
      else {
        out << "samples: " << report.samples << ", kinds covered: " << report.kinds_covered << "\n";
        for (const auto& [kind, tally] : report.per_kind)
          out << "  " << kind_name(kind) << ": samples " << tally.samples << ", cm "
              << tally.cm_true << ", condition " << tally.condition_true << ", built "
              << tally.construction_ok << ", mismatches " << tally.mismatches << "\n";
        out << "scm_true " << report.scm_true << ", pretty_clean_ok " << report.pretty_clean_ok
            << ", stanley_ok " << report.stanley_ok << "\n"
            << "mismatches: scm " << report.scm_mismatches << ", stanley "
            << report.stanley_mismatches << ", oracle " << report.oracle_mismatches << "\n";
        for (const std::string& c : report.counterexamples) out << "counterexample: " << c << "\n";
      }
      if (report.scm_mismatches || report.stanley_mismatches || report.oracle_mismatches ||
          !report.counterexamples.empty())
        result.exit_code = 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    result.exit_code = 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  }

  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace pclean
