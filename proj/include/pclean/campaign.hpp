#pragma once
// Randomized cross-validation: every equivalence the construction promises is
// checked against the homological oracle over seeded random ideals, and any
// disagreement is recorded as a reproducible counterexample candidate.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pclean/random.hpp"
#include "pclean/stanley.hpp"

namespace pclean {

struct CampaignConfig {
  uint64_t seed = 1;
  int count = 100;
  int max_exp = 3;
  int max_comps = 8;
  std::optional<std::vector<AssConfigKind>> kinds;  // restrict to these configurations
  int tmax = 8;                                     // Hilbert bound for consistency checks

  void validate() const {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    if (max_exp < 1) throw std::invalid_argument("max_exp must be at least 1");
    if (max_comps < 1) throw std::invalid_argument("max_comps must be at least 1");
  }
};

struct KindTally {
  long samples = 0;
  long cm_true = 0;
  long condition_true = 0;
  long construction_ok = 0;
  long mismatches = 0;
};

struct CampaignReport {
  CampaignConfig config;
  std::map<AssConfigKind, KindTally> per_kind;  // height-2-pure samples only
  long samples = 0;
  long scm_true = 0;
  long pretty_clean_ok = 0;
  long stanley_ok = 0;
  long scm_mismatches = 0;
  long stanley_mismatches = 0;
  long oracle_mismatches = 0;
  std::vector<std::string> counterexamples;
  int kinds_covered = 0;
};

namespace detail {

inline bool try_build_codim2(const MonomialIdeal& I, bool& clean_ok) {
  try {
    PrimeFiltration pf = build_codim2_clean(I);
    clean_ok = classify_filtration(pf).clean;
    return true;
  } catch (const NotCohenMacaulayError&) {
    return false;
  } catch (const InternalVerificationError&) {
    return false;
  }
}

}  // namespace detail

/// Runs the full equivalence suite over `count` seeded samples. Height-2-pure
/// samples additionally exercise the per-configuration triple
///   is_cm  <=>  condition satisfied  <=>  construction succeeds (verified clean),
/// and every sample exercises
///   is_scm <=>  pretty clean construction succeeds (verified),
/// plus sdepth >= depth on each successful decomposition and the
/// depth + pd = n consistency of the oracle itself. The report is a pure
/// function of the config.
inline CampaignReport fuzz_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  Ambient amb = Ambient::xyzw();
  SplitMix64 rng(cfg.seed);
  CampaignReport report;
  report.config = cfg;

  for (int item = 0; item < cfg.count; ++item) {
    MonomialIdeal I = MonomialIdeal::unit(amb);
    if (cfg.kinds && !cfg.kinds->empty()) {
      AssConfigKind want = (*cfg.kinds)[rng.below(cfg.kinds->size())];
      I = sample_kind_ideal(rng, amb, want, cfg.max_exp);
    } else {
      // Alternate between the general sampler and a height-2-pure sampler so
      // all ten configurations show up at small counts.
      I = rng.below(2) == 0 ? sample_mixed_ideal(rng, amb, cfg.max_exp, cfg.max_comps)
                            : sample_height2_ideal(rng, amb, cfg.max_exp);
    }
    if (I.is_unit() || I.is_zero()) continue;
    std::string text = I.to_string();
    ++report.samples;

    try {
      std::vector<VarSet> assp = ass_primes(I);
      // Oracle self-consistency: depth + pd = n by construction, and the
      // dimension bounds.
      int d = depth(I);
      int pd = projective_dimension(I);
      int dim = quotient_dim(I);
      if (d + pd != amb.size() || d < 0 || d > dim || dim > amb.size()) {
        ++report.oracle_mismatches;
        report.counterexamples.push_back("oracle: " + text);
      }

      bool ht2_pure = true;
      for (const VarSet& p : assp)
        if (height(p) != 2) ht2_pure = false;

      if (ht2_pure) {
        AssConfiguration config = classify_ass_config(assp);
        KindTally& tally = report.per_kind[config.kind];
        ++tally.samples;
        bool cm = is_cm(I);
        bool condition = cm_condition(config, primary_components(I)).satisfied;
        bool clean_ok = false;
        bool built = detail::try_build_codim2(I, clean_ok);
        if (cm) ++tally.cm_true;
        if (condition) ++tally.condition_true;
        if (built && clean_ok) ++tally.construction_ok;
        if (!(cm == condition && condition == (built && clean_ok))) {
          ++tally.mismatches;
          report.counterexamples.push_back("equivalence: " + text);
        }
      }

      bool scm = is_scm(I);
      bool pretty = false;
      bool stanley = false;
      try {
        PrimeFiltration pf = build_pretty_clean(I);
        pretty = classify_filtration(pf).pretty_clean;
        StanleyDecomposition sd = to_stanley(pf);
        stanley = verify_stanley(sd, standard_box(I)) && stanley_report(I, sd).stanley_ok;
      } catch (const NotSequentiallyCMError&) {
      } catch (const NotCohenMacaulayError&) {
      } catch (const SearchExhaustedError&) {
      } catch (const InternalVerificationError&) {
      }
      if (scm) ++report.scm_true;
      if (pretty) ++report.pretty_clean_ok;
      if (scm != pretty) {
        ++report.scm_mismatches;
        report.counterexamples.push_back("scm: " + text);
      }
      if (pretty) {
        if (stanley)
          ++report.stanley_ok;
        else {
          ++report.stanley_mismatches;
          report.counterexamples.push_back("stanley: " + text);
        }
      }
    } catch (const std::exception& e) {
      ++report.oracle_mismatches;
      report.counterexamples.push_back(std::string("exception(") + e.what() + "): " + text);
    }
  }
  report.kinds_covered = static_cast<int>(report.per_kind.size());
  return report;
}

}  // namespace pclean
