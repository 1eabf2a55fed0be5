#pragma once
// The dimension filtration, the prime-filtration data model with its verifier
// and clean / pretty-clean classification, and the sequentially
// Cohen-Macaulay test for four variables.

#include <optional>
#include <string>
#include <vector>

#include "pclean/decomposition.hpp"
#include "pclean/oracle.hpp"

namespace pclean {

/// The chain D_{-1} = I contained in D_0 in ... in D_{n-1} = S, where D_i is
/// the intersection of the primary components of dimension > i (an empty
/// intersection is S).
class DimensionFiltration {
 public:
  explicit DimensionFiltration(std::vector<MonomialIdeal> levels) : levels_(std::move(levels)) {}

  /// i ranges over -1 .. n-1.
  const MonomialIdeal& level(int i) const { return levels_.at(static_cast<size_t>(i + 1)); }
  int nvars() const { return static_cast<int>(levels_.size()) - 1; }

 private:
  std::vector<MonomialIdeal> levels_;
};

inline DimensionFiltration dimension_filtration(const MonomialIdeal& I) {
  if (I.is_unit() || I.is_zero())
    throw std::invalid_argument("dimension filtration needs a proper non-zero ideal");
  int n = I.ambient().size();
  std::vector<PrimaryComponent> comps = primary_components(I);
  std::vector<MonomialIdeal> levels;
  for (int i = -1; i < n; ++i) {
    MonomialIdeal level = MonomialIdeal::unit(I.ambient());
    for (const PrimaryComponent& c : comps)
      if (quotient_dim(c.radical, n) > i) level = intersect(level, c.ideal);
    levels.push_back(std::move(level));
  }
  return DimensionFiltration(std::move(levels));
}

/// In four variables D_2 is an intersection of height-one primary ideals, so
/// it is principal; returns its generator (the unit monomial when D_2 = S).
inline Monomial principal_part(const MonomialIdeal& I) {
  if (I.ambient().size() != 4)
    throw std::invalid_argument("principal_part is specific to four variables");
  MonomialIdeal d2 = dimension_filtration(I).level(2);
  if (d2.gens().size() != 1)
    throw std::logic_error("level-2 ideal of the dimension filtration is not principal");
  return d2.gens().front();
}

/// One link F -> F + (u) with (F : u) = prime.
struct FiltrationStep {
  Monomial u;
  VarSet prime;
};

/// Chain base = F_0 in F_1 in ... in F_r = S realized by F_i = F_{i-1} + (u_i)
/// with (F_{i-1} : u_i) prime.
struct PrimeFiltration {
  MonomialIdeal base;
  std::vector<FiltrationStep> steps;
};

struct FiltrationReport {
  bool ok = false;
  std::optional<size_t> failing_step;
  std::string reason;
};

/// Checks every step invariant and that the chain ends at the unit ideal.
/// Failures are data, not exceptions.
inline FiltrationReport verify_prime_filtration(const PrimeFiltration& pf) {
  MonomialIdeal f = pf.base;
  for (size_t i = 0; i < pf.steps.size(); ++i) {
    const FiltrationStep& step = pf.steps[i];
    if (step.prime.empty())
      return {false, i, "step prime is empty"};
    if (f.contains(step.u))
      return {false, i, "step monomial already lies in the chain ideal"};
    if (!(colon(f, step.u) == MonomialIdeal::from_prime(f.ambient(), step.prime)))
      return {false, i, "colon of the chain ideal by the step monomial is not the step prime"};
    f = sum(f, step.u);
  }
  if (!f.is_unit()) return {false, std::nullopt, "chain does not terminate at the unit ideal"};
  return {true, std::nullopt, ""};
}

struct FiltrationClass {
  bool clean = false;
  bool pretty_clean = false;
};

/// clean: every step prime is a minimal prime of the base ideal.
/// pretty clean: no step prime is strictly contained in a later one.
inline FiltrationClass classify_filtration(const PrimeFiltration& pf) {
  FiltrationReport report = verify_prime_filtration(pf);
  if (!report.ok)
    throw std::invalid_argument("classify_filtration needs a verified filtration: " + report.reason);
  std::vector<VarSet> ass = ass_primes(pf.base);
  std::vector<VarSet> minimal;
  for (const VarSet& p : ass) {
    bool is_min = true;
    for (const VarSet& q : ass)
      if (!(q == p) && q.subset_of(p)) is_min = false;
    if (is_min) minimal.push_back(p);
  }
  FiltrationClass out{true, true};
  for (const FiltrationStep& step : pf.steps) {
    bool found = false;
    for (const VarSet& p : minimal)
      if (p == step.prime) found = true;
    if (!found) out.clean = false;
  }
  for (size_t i = 0; i < pf.steps.size(); ++i)
    for (size_t j = i + 1; j < pf.steps.size(); ++j) {
      const VarSet& pi = pf.steps[i].prime;
      const VarSet& pj = pf.steps[j].prime;
      if (pi.subset_of(pj) && !(pi == pj)) out.pretty_clean = false;
    }
  return out;
}

/// Sequentially Cohen-Macaulay test for n = 4. The dimension-0 and
/// dimension-1 factors are Cohen-Macaulay outright (finite length,
/// respectively positive depth since the maximal ideal is not associated to
/// them), the top factor is a hypersurface, and D_2/D_1 is S/(D_1 : u)
/// shifted by u = principal_part, so only that colon needs the oracle.
inline bool is_scm(const MonomialIdeal& I) {
  if (I.ambient().size() != 4)
    throw std::invalid_argument("is_scm is specific to four variables");
  if (I.is_unit() || I.is_zero())
    throw std::invalid_argument("is_scm needs a proper non-zero ideal");
  DimensionFiltration df = dimension_filtration(I);
  const MonomialIdeal& d1 = df.level(1);
  const MonomialIdeal& d2 = df.level(2);
  if (d1 == d2) return true;  // zero factor
  Monomial u = principal_part(I);
  MonomialIdeal layer = colon(d1, u);
  for (const VarSet& p : ass_primes(layer))
    if (height(p) != 2)
      throw std::logic_error("dimension-2 layer of the dimension filtration is not pure");
  return is_cm(layer);
}

}  // namespace pclean
