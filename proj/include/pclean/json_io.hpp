#pragma once
// JSON views of every report type. Uses ordered JSON throughout so equal
// inputs always serialize byte-identically.

#include <json.hpp>

#include "pclean/campaign.hpp"
#include "pclean/stanley.hpp"

namespace pclean {

using Json = nlohmann::ordered_json;

inline Json gens_json(const MonomialIdeal& I) {
  Json out = Json::array();
  for (const Monomial& g : I.gens()) out.push_back(g.to_string(I.ambient()));
  return out;
}

inline Json varset_json(const VarSet& s, const Ambient& amb) {
  Json out = Json::array();
  for (int v : s.vars()) out.push_back(amb.name(v));
  return out;
}

inline Json exponent_map_json(const Monomial& m, const Ambient& amb) {
  Json out = Json::object();
  for (int v = 0; v < amb.size(); ++v)
    if (m.exponent(v) > 0) out[amb.name(v)] = m.exponent(v);
  return out;
}

/// {"irreducible":[{"x":2,"y":1},...],
///  "primary":[{"radical":["x","y"],"gens":["x^2","y"]}],
///  "ass":[["x","y"],...]}
inline Json decomposition_json(const MonomialIdeal& I) {
  const Ambient& amb = I.ambient();
  Json out;
  out["irreducible"] = Json::array();
  for (const IrreducibleComponent& c : irreducible_decomposition(I)) {
    Json entry = Json::object();
    for (const auto& [v, e] : c.entries) entry[amb.name(v)] = e;
    out["irreducible"].push_back(std::move(entry));
  }
  out["primary"] = Json::array();
  for (const PrimaryComponent& c : primary_components(I))
    out["primary"].push_back(
        Json{{"radical", varset_json(c.radical, amb)}, {"gens", gens_json(c.ideal)}});
  out["ass"] = Json::array();
  for (const VarSet& p : ass_primes(I)) out["ass"].push_back(varset_json(p, amb));
  return out;
}

/// {"depth":1,"dim":2,"pd":3,"cm":false,"betti":[{"i":1,"deg":{...},"rank":1},...]}
inline Json depth_json(const MonomialIdeal& I) {
  BettiTable table = betti_table(I);
  int pd = table.max_index();
  int d = I.ambient().size() - pd;
  Json out;
  out["depth"] = d;
  out["dim"] = quotient_dim(I);
  out["pd"] = pd;
  out["cm"] = d == quotient_dim(I);
  out["betti"] = Json::array();
  for (const BettiEntry& e : table.entries())
    out["betti"].push_back(Json{{"i", e.index},
                                {"deg", exponent_map_json(e.degree, I.ambient())},
                                {"rank", e.rank}});
  return out;
}

/// {"dimfilt":[{"level":-1,"gens":[...]},...],"u":"x","scm":true}
inline Json dimension_filtration_json(const MonomialIdeal& I) {
  DimensionFiltration df = dimension_filtration(I);
  Json out;
  out["dimfilt"] = Json::array();
  for (int i = -1; i < df.nvars(); ++i)
    out["dimfilt"].push_back(Json{{"level", i}, {"gens", gens_json(df.level(i))}});
  if (I.ambient().size() == 4) {
    out["u"] = principal_part(I).to_string(I.ambient());
    out["scm"] = is_scm(I);
  }
  return out;
}

/// {"base":[...],"steps":[{"u":"y","prime":["x"]}],"clean":true,"pretty_clean":true}
inline Json filtration_json(const PrimeFiltration& pf) {
  const Ambient& amb = pf.base.ambient();
  Json out;
  out["base"] = gens_json(pf.base);
  out["steps"] = Json::array();
  for (const FiltrationStep& step : pf.steps)
    out["steps"].push_back(
        Json{{"u", step.u.to_string(amb)}, {"prime", varset_json(step.prime, amb)}});
  FiltrationClass cls = classify_filtration(pf);
  out["clean"] = cls.clean;
  out["pretty_clean"] = cls.pretty_clean;
  return out;
}

inline Json condition_json(const CmConditionReport& report) {
  Json out;
  out["clauses"] = Json::array();
  for (const CmClause& c : report.clauses)
    out["clauses"].push_back(Json{{"test", c.test}, {"holds", c.holds}});
  out["satisfied"] = report.satisfied;
  return out;
}

inline Json perm_json(const AssConfiguration& config, const Ambient& amb) {
  // Position = canonical slot, value = the input variable sitting there.
  Json out = Json::array();
  std::array<int, 4> inv = config.inverse();
  for (int c = 0; c < 4; ++c) out.push_back(amb.name(inv[static_cast<size_t>(c)]));
  return out;
}

/// {"spaces":[{"u":"y","free":["y","z","w"]}],"sdepth":3,"depth":3,"stanley_ok":true}
inline Json stanley_json(const StanleyDecomposition& sd, const StanleyReport& report) {
  const Ambient& amb = sd.ideal.ambient();
  Json out;
  out["spaces"] = Json::array();
  for (const StanleySpace& s : sd.spaces)
    out["spaces"].push_back(
        Json{{"u", s.u.to_string(amb)}, {"free", varset_json(s.free_vars, amb)}});
  out["sdepth"] = report.sdepth;
  out["depth"] = report.depth;
  out["stanley_ok"] = report.stanley_ok;
  return out;
}

inline Json campaign_json(const CampaignReport& report) {
  Json cfg;
  cfg["seed"] = report.config.seed;
  cfg["count"] = report.config.count;
  cfg["max_exp"] = report.config.max_exp;
  cfg["max_comps"] = report.config.max_comps;
  if (report.config.kinds) {
    Json kinds = Json::array();
    for (AssConfigKind k : *report.config.kinds) kinds.push_back(kind_name(k));
    cfg["kinds"] = std::move(kinds);
  } else {
    cfg["kinds"] = nullptr;
  }
  cfg["tmax"] = report.config.tmax;

  Json per_kind = Json::object();
  for (const auto& [kind, tally] : report.per_kind)
    per_kind[kind_name(kind)] = Json{{"samples", tally.samples},
                                     {"cm_true", tally.cm_true},
                                     {"condition_true", tally.condition_true},
                                     {"construction_ok", tally.construction_ok},
                                     {"mismatches", tally.mismatches}};

  Json out;
  out["config"] = std::move(cfg);
  out["samples"] = report.samples;
  out["per_kind"] = std::move(per_kind);
  out["kinds_covered"] = report.kinds_covered;
  out["scm"] = Json{{"scm_true", report.scm_true},
                    {"pretty_clean_ok", report.pretty_clean_ok},
                    {"stanley_ok", report.stanley_ok},
                    {"scm_mismatches", report.scm_mismatches},
                    {"stanley_mismatches", report.stanley_mismatches}};
  out["oracle_mismatches"] = report.oracle_mismatches;
  out["counterexamples"] = report.counterexamples;
  return out;
}

}  // namespace pclean
