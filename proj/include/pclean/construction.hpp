#pragma once
// Constructive core for height-two-pure ideals in four variables: classify
// the configuration of associated primes, test the Cohen-Macaulay condition
// attached to it, build clean filtrations by inductive peeling, and assemble
// pretty clean filtrations along the dimension filtration.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pclean/filtration.hpp"

namespace pclean {

// ---------------------------------------------------------------------------
// Configurations of height-2 associated primes (edges on the four variables)

enum class AssConfigKind {
  Single,       // one prime
  TwoShared,    // two primes sharing a variable
  TwoDisjoint,  // two primes with disjoint supports (never Cohen-Macaulay)
  Triangle,     // three primes on three variables
  Star3,        // three primes through one shared variable
  Path3,        // three primes forming a path on all four variables
  Paw4,         // triangle plus a pendant edge
  Cycle4,       // four primes forming a 4-cycle
  Five,         // five primes (one pair of variables missing)
  Six,          // all six height-2 primes
};

inline const std::vector<AssConfigKind>& all_config_kinds() {
  static const std::vector<AssConfigKind> kinds = {
      AssConfigKind::Single,   AssConfigKind::TwoShared, AssConfigKind::TwoDisjoint,
      AssConfigKind::Triangle, AssConfigKind::Star3,     AssConfigKind::Path3,
      AssConfigKind::Paw4,     AssConfigKind::Cycle4,    AssConfigKind::Five,
      AssConfigKind::Six};
  return kinds;
}

inline const char* kind_name(AssConfigKind k) {
  switch (k) {
    case AssConfigKind::Single: return "Single";
    case AssConfigKind::TwoShared: return "TwoShared";
    case AssConfigKind::TwoDisjoint: return "TwoDisjoint";
    case AssConfigKind::Triangle: return "Triangle";
    case AssConfigKind::Star3: return "Star3";
    case AssConfigKind::Path3: return "Path3";
    case AssConfigKind::Paw4: return "Paw4";
    case AssConfigKind::Cycle4: return "Cycle4";
    case AssConfigKind::Five: return "Five";
    case AssConfigKind::Six: return "Six";
  }
  return "?";
}

inline std::optional<AssConfigKind> kind_from_name(std::string_view name) {
  for (AssConfigKind k : all_config_kinds())
    if (name == kind_name(k)) return k;
  return std::nullopt;
}

/// Canonical prime list of a kind, in its fixed numbering P1, P2, ...
/// (variables 0,1,2,3 read x,y,z,w).
inline const std::vector<VarSet>& canonical_primes(AssConfigKind k) {
  static const auto e = [](int a, int b) { return VarSet::of({a, b}); };
  static const std::vector<VarSet> single = {e(0, 1)};
  static const std::vector<VarSet> two_shared = {e(0, 1), e(0, 2)};
  static const std::vector<VarSet> two_disjoint = {e(0, 1), e(2, 3)};
  static const std::vector<VarSet> triangle = {e(0, 1), e(0, 2), e(1, 2)};
  static const std::vector<VarSet> star3 = {e(0, 1), e(0, 2), e(0, 3)};
  static const std::vector<VarSet> path3 = {e(0, 1), e(0, 2), e(2, 3)};
  static const std::vector<VarSet> paw4 = {e(0, 1), e(0, 3), e(1, 3), e(0, 2)};
  static const std::vector<VarSet> cycle4 = {e(0, 1), e(0, 2), e(2, 3), e(1, 3)};
  static const std::vector<VarSet> five = {e(0, 1), e(0, 2), e(2, 3), e(1, 3), e(1, 2)};
  static const std::vector<VarSet> six = {e(0, 1), e(0, 2), e(2, 3), e(1, 3), e(1, 2), e(0, 3)};
  switch (k) {
    case AssConfigKind::Single: return single;
    case AssConfigKind::TwoShared: return two_shared;
    case AssConfigKind::TwoDisjoint: return two_disjoint;
    case AssConfigKind::Triangle: return triangle;
    case AssConfigKind::Star3: return star3;
    case AssConfigKind::Path3: return path3;
    case AssConfigKind::Paw4: return paw4;
    case AssConfigKind::Cycle4: return cycle4;
    case AssConfigKind::Five: return five;
    case AssConfigKind::Six: return six;
  }
  return single;
}

/// A matched configuration: perm[input variable] = canonical variable, so
/// that the input primes map exactly onto canonical_primes(kind).
struct AssConfiguration {
  AssConfigKind kind;
  std::array<int, 4> perm;

  std::array<int, 4> inverse() const {
    std::array<int, 4> inv{};
    for (int v = 0; v < 4; ++v) inv[static_cast<size_t>(perm[static_cast<size_t>(v)])] = v;
    return inv;
  }
};

namespace detail {

inline VarSet map_vars(const VarSet& s, const std::array<int, 4>& perm) {
  VarSet out;
  for (int v : s.vars()) out = out.with(perm[static_cast<size_t>(v)]);
  return out;
}

inline bool same_prime_set(std::vector<VarSet> a, std::vector<VarSet> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace detail

/// Searches the 24 variable permutations for the unique kind whose canonical
/// primes are the image of the input primes. The ten kinds exhaust all
/// non-empty sets of height-2 primes in four variables up to symmetry.
inline AssConfiguration classify_ass_config(const std::vector<VarSet>& primes) {
  if (primes.empty() || primes.size() > 6)
    throw std::invalid_argument("expected between 1 and 6 height-2 primes");
  for (const VarSet& p : primes) {
    if (height(p) != 2) throw std::invalid_argument("non-height-2 prime present");
    if (!p.subset_of(VarSet::all(4))) throw std::invalid_argument("prime outside four variables");
  }
  for (AssConfigKind kind : all_config_kinds()) {
    const std::vector<VarSet>& canon = canonical_primes(kind);
    if (canon.size() != primes.size()) continue;
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
      std::vector<VarSet> mapped;
      mapped.reserve(primes.size());
      for (const VarSet& p : primes) mapped.push_back(detail::map_vars(p, perm));
      if (detail::same_prime_set(mapped, canon)) return AssConfiguration{kind, perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  throw std::logic_error("height-2 prime set matches no configuration kind");
}

// ---------------------------------------------------------------------------
// The Cohen-Macaulay condition attached to a configuration

struct CmClause {
  std::string test;  // e.g. "P2 ⊆ P1+P3"
  bool holds;
};

struct CmConditionReport {
  AssConfigKind kind;
  std::vector<CmClause> clauses;
  bool satisfied;
};

namespace detail {

/// Primary components reordered to the canonical numbering of the config.
inline std::vector<PrimaryComponent> canonical_components(
    const AssConfiguration& config, const std::vector<PrimaryComponent>& comps) {
  const std::vector<VarSet>& canon = canonical_primes(config.kind);
  if (comps.size() != canon.size())
    throw std::invalid_argument("component list does not match the configuration");
  std::vector<PrimaryComponent> out;
  out.reserve(canon.size());
  for (const VarSet& target : canon) {
    const PrimaryComponent* found = nullptr;
    for (const PrimaryComponent& c : comps)
      if (map_vars(c.radical, config.perm) == target) found = &c;
    if (!found) throw std::invalid_argument("component list does not match the configuration");
    out.push_back(*found);
  }
  return out;
}

}  // namespace detail

/// Tests the Cohen-Macaulay condition of the configuration. For each pair of
/// disjoint-support primes P_j, P_k, removing one of them, say P_k, gives the
/// exact sequence 0 -> S/I -> S/J + S/P_k -> S/(J + P_k) -> 0 with
/// J + P_k = intersection of the (P_i + P_k); the quotient has depth 0 (which
/// forces depth(S/I) = 1, not Cohen-Macaulay) exactly when the maximal-height
/// piece P_j + P_k is irredundant in that intersection. `satisfied` is the
/// conjunction, over both removals of every disjoint pair, of those
/// redundancy tests.
///
/// The single inclusions P_i in P_j + P_k are reported as clauses too: any
/// one of them forces the pair's redundancies, and for configurations where a
/// removal leaves only one other component (Path3 in particular) they are
/// equivalent to them. With four or more components the intersection can lie
/// in P_j + P_k with no single factor doing so, so the disjunction of the
/// inclusion clauses is strictly stronger than `satisfied`.
///
/// Kinds without a disjoint pair are unconditional; TwoDisjoint has a pair
/// but nothing left after a removal, so it is never satisfied.
inline CmConditionReport cm_condition(const AssConfiguration& config,
                                      const std::vector<PrimaryComponent>& comps) {
  std::vector<PrimaryComponent> canon = detail::canonical_components(config, comps);
  size_t m = canon.size();
  auto label = [](size_t i) { return "P" + std::to_string(i + 1); };

  // Disjoint pairs (j, k), ordered as the conditions are usually displayed:
  // descending by the larger index.
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t j = 0; j < m; ++j)
    for (size_t k = j + 1; k < m; ++k)
      if (!canon[j].radical.intersects(canon[k].radical)) pairs.emplace_back(j, k);
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });

  CmConditionReport report{config.kind, {}, true};
  for (const auto& [j, k] : pairs) {
    MonomialIdeal pair_sum = sum(canon[j].ideal, canon[k].ideal);
    for (size_t i = 0; i < m; ++i) {
      if (i == j || i == k) continue;
      report.clauses.push_back(CmClause{label(i) + " ⊆ " + label(j) + "+" + label(k),
                                        pair_sum.contains(canon[i].ideal)});
    }
    // Redundancy of the maximal piece under removal of `removed`.
    auto redundant = [&](size_t partner, size_t removed) {
      MonomialIdeal rest = MonomialIdeal::unit(pair_sum.ambient());
      std::string name;
      for (size_t i = 0; i < m; ++i) {
        if (i == partner || i == removed) continue;
        rest = intersect(rest, sum(canon[i].ideal, canon[removed].ideal));
        if (!name.empty()) name += "∩";
        name += "(" + label(i) + "+" + label(removed) + ")";
      }
      if (name.empty()) name = "S";
      bool holds = pair_sum.contains(rest);
      report.clauses.push_back(
          CmClause{name + " ⊆ " + label(partner) + "+" + label(removed), holds});
      return holds;
    };
    bool ok_k = redundant(j, k);
    bool ok_j = redundant(k, j);
    if (!(ok_k && ok_j)) report.satisfied = false;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Errors

class NotCohenMacaulayError : public std::runtime_error {
 public:
  explicit NotCohenMacaulayError(CmConditionReport report)
      : std::runtime_error("the quotient is not Cohen-Macaulay"), report_(std::move(report)) {}
  const CmConditionReport& report() const { return report_; }

 private:
  CmConditionReport report_;
};

class NotSequentiallyCMError : public std::runtime_error {
 public:
  NotSequentiallyCMError() : std::runtime_error("the quotient is not sequentially Cohen-Macaulay") {}
};

class SearchExhaustedError : public std::runtime_error {
 public:
  explicit SearchExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

class InternalVerificationError : public std::logic_error {
 public:
  explicit InternalVerificationError(const std::string& what) : std::logic_error(what) {}
};

// ---------------------------------------------------------------------------
// Clean filtrations of the basic factors

/// Clean filtration of S/Q for Q primary over the prime P: peels the standard
/// monomials of Q in the variables of P in degree-descending order, so every
/// variable of P multiplies each peeled monomial into the current ideal and
/// every colon is exactly P.
inline PrimeFiltration clean_filtration_primary(const MonomialIdeal& Q, const VarSet& P) {
  if (Q.is_unit() || Q.is_zero())
    throw std::invalid_argument("clean_filtration_primary needs a proper non-zero ideal");
  std::optional<VarSet> rad = radical(Q).as_prime();
  if (!rad || !(*rad == P))
    throw std::invalid_argument("ideal is not primary over the given prime");
  for (const Monomial& g : Q.gens())
    if (!g.support().subset_of(P))
      throw std::invalid_argument("ideal is not primary over the given prime");

  int n = Q.ambient().size();
  std::vector<int> vars = P.vars();
  std::vector<Exponent> bounds;
  for (int v : vars) {
    Exponent b = 0;
    for (const Monomial& g : Q.gens())
      if (g.support() == VarSet::single(v)) b = g.exponent(v);
    if (b == 0) throw std::invalid_argument("ideal is not primary over the given prime");
    bounds.push_back(b);
  }

  std::vector<Monomial> standard;
  std::vector<Exponent> exps(static_cast<size_t>(n), 0);
  auto walk = [&](auto&& self, size_t i) -> void {
    if (i == vars.size()) {
      Monomial m{std::vector<Exponent>(exps)};
      if (!Q.contains(m)) standard.push_back(std::move(m));
      return;
    }
    for (Exponent e = 0; e < bounds[i]; ++e) {
      exps[static_cast<size_t>(vars[i])] = e;
      self(self, i + 1);
    }
    exps[static_cast<size_t>(vars[i])] = 0;
  };
  walk(walk, 0);
  std::sort(standard.begin(), standard.end(),
            [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });

  PrimeFiltration pf{Q, {}};
  for (Monomial& m : standard) pf.steps.push_back(FiltrationStep{std::move(m), P});
  FiltrationReport rep = verify_prime_filtration(pf);
  if (!rep.ok) throw InternalVerificationError("primary peel failed verification: " + rep.reason);
  return pf;
}

/// Clean filtration of S/(u): divide out one variable at a time, lowest
/// variable first; each step monomial is u with one exponent reduced and the
/// step prime is that variable.
inline PrimeFiltration clean_filtration_principal(const Ambient& amb, const Monomial& u) {
  if (u.is_unit())
    throw std::invalid_argument("clean_filtration_principal needs a non-unit monomial");
  PrimeFiltration pf{MonomialIdeal::principal(amb, u), {}};
  Monomial v = u;
  for (int j = 0; j < amb.size(); ++j) {
    while (v.exponent(j) > 0) {
      v = v / Monomial::variable(amb.size(), j);
      pf.steps.push_back(FiltrationStep{v, VarSet::single(j)});
    }
  }
  FiltrationReport rep = verify_prime_filtration(pf);
  if (!rep.ok) throw InternalVerificationError("principal peel failed verification: " + rep.reason);
  return pf;
}

// ---------------------------------------------------------------------------
// Clean filtrations for height-2-pure ideals

namespace detail {

inline Exponent comp_exponent(const IrreducibleComponent& c, int var) {
  for (const auto& [v, e] : c.entries)
    if (v == var) return e;
  return 0;
}

/// Candidate (edge, peeled variable) choices in canonical coordinates, the
/// documented case for the configuration first, then every remaining pair as
/// a fallback; the attempt loop validates each against the actual exponents.
inline std::vector<std::pair<VarSet, int>> candidate_peels(
    const AssConfiguration& config, const std::vector<PrimaryComponent>& canon) {
  auto incl = [&](size_t i, size_t j, size_t k) {
    return sum(canon[j].ideal, canon[k].ideal).contains(canon[i].ideal);
  };
  auto edge = [](int a, int b) { return VarSet::of({a, b}); };

  std::vector<std::pair<VarSet, int>> preferred;
  switch (config.kind) {
    case AssConfigKind::Single:
    case AssConfigKind::TwoDisjoint:
      break;
    case AssConfigKind::TwoShared:
    case AssConfigKind::Star3:
      preferred.push_back({edge(0, 1), 1});
      break;
    case AssConfigKind::Triangle:
      preferred.push_back({edge(0, 1), 1});
      preferred.push_back({edge(1, 2), 1});
      break;
    case AssConfigKind::Path3:
      preferred.push_back({edge(2, 3), 3});
      break;
    case AssConfigKind::Paw4:
      if (incl(0, 2, 3)) preferred.push_back({edge(0, 1), 1});
      if (incl(1, 2, 3)) preferred.push_back({edge(0, 3), 3});
      break;
    case AssConfigKind::Cycle4: {
      bool A = incl(0, 1, 3), B = incl(2, 1, 3), C = incl(1, 0, 2), D = incl(3, 0, 2);
      if (A && C) preferred.push_back({edge(0, 1), 1});
      if (A && D) preferred.push_back({edge(0, 1), 0});
      if (B && C) preferred.push_back({edge(2, 3), 3});
      if (B && D) preferred.push_back({edge(2, 3), 2});
      break;
    }
    case AssConfigKind::Five: {
      bool A = incl(0, 1, 3), B = incl(2, 1, 3), E = incl(4, 1, 3);
      bool C = incl(1, 0, 2), D = incl(3, 0, 2), F = incl(4, 0, 2);
      if (A && C) {
        preferred.push_back({edge(0, 1), 1});  // main branch
        preferred.push_back({edge(1, 2), 1});  // when the (y,z) component holds the top y power
      }
      if (A && (D || F)) preferred.push_back({edge(0, 1), 0});
      if (B && (C || F)) preferred.push_back({edge(2, 3), 3});
      if (B && D) {
        preferred.push_back({edge(2, 3), 2});
        preferred.push_back({edge(1, 2), 2});
      }
      if (E && C) preferred.push_back({edge(0, 2), 0});
      if (E && D) preferred.push_back({edge(1, 3), 3});
      if (E && F) {
        preferred.push_back({edge(1, 2), 1});
        preferred.push_back({edge(1, 2), 2});
      }
      break;
    }
    case AssConfigKind::Six:
      if (incl(0, 4, 5) && incl(0, 1, 3) && incl(1, 0, 2)) preferred.push_back({edge(0, 1), 1});
      break;
  }
  // Fallback: all (edge, variable) pairs in canonical order.
  for (const VarSet& e : canonical_primes(config.kind))
    for (int q : e.vars()) preferred.push_back({e, q});

  std::vector<std::pair<VarSet, int>> out;
  for (const auto& cand : preferred)
    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  return out;
}

PrimeFiltration codim2_recurse(const MonomialIdeal& I);  // forward

inline void append_lifted(std::vector<FiltrationStep>& out, const PrimeFiltration& sub,
                          const Monomial& multiplier) {
  for (const FiltrationStep& step : sub.steps)
    out.push_back(FiltrationStep{multiplier * step.u, step.prime});
}

/// One inductive layer: peel the component Q1 = (p^a, q^b) that holds the
/// maximal exponent b of the peeled variable q, through the chain
/// I in (I, p^a) in Q1 in S. The lower interval is the filtration of
/// S/(I : p^a) lifted by p^a, the middle one the filtration of
/// S/((I, p^a) : q^b) lifted by q^b, and the top the primary peel of Q1.
inline PrimeFiltration codim2_attempt(const MonomialIdeal& I,
                                      const std::vector<IrreducibleComponent>& irr,
                                      const VarSet& edge, int q) {
  int p = -1;
  for (int v : edge.vars())
    if (v != q) p = v;

  Exponent global_max = 0, edge_max = 0;
  for (const IrreducibleComponent& c : irr) {
    Exponent e = comp_exponent(c, q);
    global_max = std::max(global_max, e);
    if (c.radical() == edge) edge_max = std::max(edge_max, e);
  }
  if (edge_max == 0 || edge_max != global_max)
    throw InternalVerificationError("peeled variable does not attain its maximum on the edge");

  const IrreducibleComponent* q1 = nullptr;
  for (const IrreducibleComponent& c : irr)
    if (c.radical() == edge && comp_exponent(c, q) == edge_max) {
      q1 = &c;
      break;  // components are in canonical order; first match is the tie-break
    }
  Exponent a = comp_exponent(*q1, p);
  int n = I.ambient().size();
  Monomial g = Monomial::variable(n, p, a);
  Monomial h = Monomial::variable(n, q, edge_max);

  MonomialIdeal lower = colon(I, g);
  MonomialIdeal middle = colon(sum(I, g), h);

  std::vector<FiltrationStep> steps;
  if (!lower.is_unit()) append_lifted(steps, codim2_recurse(lower), g);
  if (!middle.is_unit()) append_lifted(steps, codim2_recurse(middle), h);
  PrimeFiltration top = clean_filtration_primary(q1->to_ideal(I.ambient()), edge);
  steps.insert(steps.end(), top.steps.begin(), top.steps.end());

  PrimeFiltration pf{I, std::move(steps)};
  FiltrationReport rep = verify_prime_filtration(pf);
  if (!rep.ok)
    throw InternalVerificationError("peel layer failed verification: " + rep.reason);
  return pf;
}

inline PrimeFiltration codim2_recurse(const MonomialIdeal& I) {
  std::vector<PrimaryComponent> comps = primary_components(I);
  for (const PrimaryComponent& c : comps)
    if (height(c.radical) != 2)
      throw InternalVerificationError("colon layer is not height-2 pure");
  if (comps.size() == 1) return clean_filtration_primary(I, comps.front().radical);

  std::vector<VarSet> primes;
  for (const PrimaryComponent& c : comps) primes.push_back(c.radical);
  AssConfiguration config = classify_ass_config(primes);
  CmConditionReport report = cm_condition(config, comps);
  if (!report.satisfied) throw NotCohenMacaulayError(std::move(report));

  std::vector<PrimaryComponent> canon = canonical_components(config, comps);
  std::vector<IrreducibleComponent> irr = irreducible_decomposition(I);
  std::array<int, 4> inv = config.inverse();

  for (const auto& [canon_edge, canon_q] : candidate_peels(config, canon)) {
    VarSet input_edge;
    for (int v : canon_edge.vars()) input_edge = input_edge.with(inv[static_cast<size_t>(v)]);
    int input_q = inv[static_cast<size_t>(canon_q)];
    try {
      return codim2_attempt(I, irr, input_edge, input_q);
    } catch (const NotCohenMacaulayError&) {
      continue;
    } catch (const InternalVerificationError&) {
      continue;
    }
  }
  throw InternalVerificationError("no peel choice produced a verified clean filtration");
}

}  // namespace detail

/// Clean filtration for an ideal all of whose associated primes have height
/// two. Throws NotCohenMacaulayError when the configuration's condition fails
/// (in particular always for TwoDisjoint), and InternalVerificationError if a
/// colon along the way is not what the construction expects.
inline PrimeFiltration build_codim2_clean(const MonomialIdeal& I) {
  if (I.is_unit() || I.is_zero())
    throw std::invalid_argument("build_codim2_clean needs a proper non-zero ideal");
  if (I.ambient().size() != 4)
    throw std::invalid_argument("build_codim2_clean is specific to four variables");
  for (const VarSet& p : ass_primes(I))
    if (height(p) != 2)
      throw std::invalid_argument("build_codim2_clean needs all associated primes of height 2");
  PrimeFiltration pf = detail::codim2_recurse(I);
  FiltrationClass cls = classify_filtration(pf);
  if (!cls.clean)
    throw InternalVerificationError("constructed filtration is not clean");
  return pf;
}

// ---------------------------------------------------------------------------
// Generic clean search between nested ideals

namespace detail {

inline bool prime_allowed(const VarSet& prime,
                          const std::optional<std::vector<VarSet>>& allowed) {
  return !allowed || std::find(allowed->begin(), allowed->end(), prime) != allowed->end();
}

/// (F : f^inf), saturation by one variable: colon by a stabilizing power.
inline MonomialIdeal saturate(const MonomialIdeal& F, int f) {
  Exponent top = 1;
  for (const Monomial& g : F.gens()) top = std::max(top, g.exponent(f) + 1);
  return colon(F, Monomial::variable(F.ambient().size(), f, top));
}

/// Box monomials of target outside f, capped by the generator exponents.
inline std::vector<Monomial> interval_monomials(const MonomialIdeal& f,
                                                const MonomialIdeal& target) {
  const Ambient& amb = f.ambient();
  int n = amb.size();
  Monomial bound = lcm(f.lcm_of_gens(), target.lcm_of_gens());
  std::vector<Monomial> out;
  std::vector<Exponent> exps(static_cast<size_t>(n), 0);
  auto walk = [&](auto&& self, int var) -> void {
    if (var == n) {
      Monomial m{std::vector<Exponent>(exps)};
      if (target.contains(m) && !f.contains(m)) out.push_back(std::move(m));
      return;
    }
    for (Exponent e = 0; e <= bound.exponent(var); ++e) {
      exps[static_cast<size_t>(var)] = e;
      self(self, var + 1);
    }
  };
  walk(walk, 0);
  return out;
}

/// Socle-first peel of a finite-length interval: every box monomial of
/// target \ f is a step with the maximal ideal as prime. Returns false
/// (leaving `f` and `steps` advanced as far as verified) if a colon check
/// fails, i.e. the factor was not actually of finite length.
inline bool peel_finite_interval(MonomialIdeal& f, const MonomialIdeal& target,
                                 std::vector<FiltrationStep>& steps) {
  const Ambient& amb = f.ambient();
  VarSet maximal = VarSet::all(amb.size());
  MonomialIdeal maximal_ideal = MonomialIdeal::from_prime(amb, maximal);
  std::vector<Monomial> pool = interval_monomials(f, target);
  std::sort(pool.begin(), pool.end(), [](const Monomial& a, const Monomial& b) {
    Exponent da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
  });
  for (const Monomial& u : pool) {
    if (!(colon(f, u) == maximal_ideal)) return false;
    steps.push_back(FiltrationStep{u, maximal});
    f = sum(f, u);
  }
  return f == target;
}

/// Peels the interval f -> target as rays along the variable `free`: the
/// factor must be a direct sum of shifted copies of S/P where P is generated
/// by the other variables. Ray bases are emitted with their non-free parts in
/// divisibility-descending order, which makes every colon exactly P.
inline bool peel_ray_interval(MonomialIdeal& f, const MonomialIdeal& target, int free,
                              std::vector<FiltrationStep>& steps) {
  const Ambient& amb = f.ambient();
  int n = amb.size();
  VarSet prime;
  for (int v = 0; v < n; ++v)
    if (v != free) prime = prime.with(v);
  MonomialIdeal prime_ideal = MonomialIdeal::from_prime(amb, prime);

  Monomial bound = lcm(f.lcm_of_gens(), target.lcm_of_gens());
  Exponent ftop = bound.exponent(free) + 1;
  std::vector<Monomial> bases;
  std::vector<Exponent> exps(static_cast<size_t>(n), 0);
  auto walk = [&](auto&& self, int var) -> void {
    if (var == n) {
      // first point of the column's ray inside target \ f, if any
      for (Exponent e = 0; e <= ftop; ++e) {
        exps[static_cast<size_t>(free)] = e;
        Monomial m{std::vector<Exponent>(exps)};
        if (target.contains(m) && !f.contains(m)) {
          bases.push_back(std::move(m));
          break;
        }
      }
      exps[static_cast<size_t>(free)] = 0;
      return;
    }
    if (var == free) {
      self(self, var + 1);
      return;
    }
    for (Exponent e = 0; e <= bound.exponent(var); ++e) {
      exps[static_cast<size_t>(var)] = e;
      self(self, var + 1);
    }
    exps[static_cast<size_t>(var)] = 0;
  };
  walk(walk, 0);
  std::sort(bases.begin(), bases.end(), [&](const Monomial& a, const Monomial& b) {
    Exponent da = a.total_degree() - a.exponent(free);
    Exponent db = b.total_degree() - b.exponent(free);
    if (da != db) return da > db;  // non-free degree descending
    return a.exponents() > b.exponents();
  });
  for (const Monomial& u : bases) {
    if (!(colon(f, u) == prime_ideal)) return false;
    steps.push_back(FiltrationStep{u, prime});
    f = sum(f, u);
  }
  return f == target;
}

/// Torsion phases: splits off the part of target/f killed by powers of each
/// variable in turn and peels what is left as rays along that variable.
inline bool peel_phases(MonomialIdeal& f, const MonomialIdeal& target,
                        const std::optional<std::vector<VarSet>>& allowed,
                        std::vector<FiltrationStep>& steps, int var) {
  if (f == target) return true;
  if (var == f.ambient().size()) return false;
  MonomialIdeal mid = intersect(saturate(f, var), target);
  if (!peel_phases(f, mid, allowed, steps, var + 1)) return false;
  VarSet prime;
  for (int v = 0; v < f.ambient().size(); ++v)
    if (v != var) prime = prime.with(v);
  if (!(f == target) && !prime_allowed(prime, allowed)) return false;
  return peel_ray_interval(f, target, var, steps);
}

}  // namespace detail

/// Prime filtration from base up to target, preferring bigger primes (the
/// finite-length part of the factor is peeled socle-first, then each
/// variable-torsion layer as rays along its free variable). Falls back to a
/// backtracking search over capped-exponent monomials u of the target with
/// (F : u) prime when the factor is not layered that way. Every step is
/// verified against the interval endpoints before returning.
inline PrimeFiltration generic_clean_search(
    const MonomialIdeal& base, const MonomialIdeal& target,
    const std::optional<std::vector<VarSet>>& allowed_primes = std::nullopt) {
  require_same_ambient(base.ambient(), target.ambient());
  if (!target.contains(base))
    throw std::invalid_argument("generic_clean_search needs base contained in target");
  const Ambient& amb = base.ambient();
  int n = amb.size();

  // Structured attempt: maximal-torsion part first, then one ray layer per
  // variable. Covers every factor whose associated primes have height >= n-1,
  // in particular the dimension filtration intervals.
  {
    MonomialIdeal f = base;
    std::vector<FiltrationStep> steps;
    bool ok = true;
    MonomialIdeal finite_top = target;
    for (int v = 0; v < n; ++v) finite_top = intersect(finite_top, detail::saturate(base, v));
    if (!(finite_top == base) && !detail::prime_allowed(VarSet::all(n), allowed_primes))
      ok = false;
    if (ok) ok = detail::peel_finite_interval(f, finite_top, steps);
    if (ok) ok = detail::peel_phases(f, target, allowed_primes, steps, 0);
    if (ok) return PrimeFiltration{base, std::move(steps)};
  }

  // Fallback: depth-first search, capped exponents, bigger primes first,
  // then socle first.
  std::vector<Monomial> pool = detail::interval_monomials(base, target);
  std::sort(pool.begin(), pool.end(), [](const Monomial& a, const Monomial& b) {
    Exponent da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents() < b.exponents();
  });

  std::vector<FiltrationStep> steps;
  std::unordered_set<std::string> dead_ends;
  auto dfs = [&](auto&& self, const MonomialIdeal& f) -> bool {
    if (f == target) return true;
    std::string key = f.to_string();
    if (dead_ends.count(key)) return false;
    std::vector<std::pair<FiltrationStep, int>> candidates;  // step, prime height
    for (const Monomial& u : pool) {
      if (f.contains(u)) continue;
      std::optional<VarSet> prime = colon(f, u).as_prime();
      if (!prime) continue;
      if (!detail::prime_allowed(*prime, allowed_primes)) continue;
      candidates.push_back({FiltrationStep{u, *prime}, height(*prime)});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    for (auto& [step, ht] : candidates) {
      MonomialIdeal next = sum(f, step.u);
      steps.push_back(step);
      if (self(self, next)) return true;
      steps.pop_back();
    }
    dead_ends.insert(std::move(key));
    return false;
  };
  if (!dfs(dfs, base))
    throw SearchExhaustedError("no prime filtration found from " + base.to_string() + " to " +
                               target.to_string());
  PrimeFiltration pf{base, std::move(steps)};
  // Re-verify against the interval endpoints.
  MonomialIdeal f = base;
  for (const FiltrationStep& step : pf.steps) {
    if (f.contains(step.u) ||
        !(colon(f, step.u) == MonomialIdeal::from_prime(amb, step.prime)))
      throw InternalVerificationError("interval search produced an invalid step");
    f = sum(f, step.u);
  }
  if (!(f == target))
    throw InternalVerificationError("interval search did not reach its target");
  return pf;
}

inline std::vector<VarSet> primes_of_height(int n, int h) {
  std::vector<VarSet> out;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    VarSet s;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) s = s.with(v);
    if (s.size() == h) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Pretty clean filtrations along the dimension filtration

/// Pretty clean filtration of S/I for sequentially Cohen-Macaulay I in four
/// variables: the finite-length interval I -> D_0 and the dimension-1
/// interval D_0 -> D_1 are found by search (their primes are forced to
/// heights 4 and 3), the dimension-2 interval is the lifted height-2
/// construction on (D_1 : u) with u the generator of D_2, and the top is the
/// principal peel of u. Bigger primes come first by construction; the result
/// is verified and classified before returning.
inline PrimeFiltration build_pretty_clean(const MonomialIdeal& I) {
  if (I.ambient().size() != 4)
    throw std::invalid_argument("build_pretty_clean is specific to four variables");
  if (I.is_unit() || I.is_zero())
    throw std::invalid_argument("build_pretty_clean needs a proper non-zero ideal");
  if (!is_scm(I)) throw NotSequentiallyCMError();

  DimensionFiltration df = dimension_filtration(I);
  const MonomialIdeal& d0 = df.level(0);
  const MonomialIdeal& d1 = df.level(1);
  const MonomialIdeal& d2 = df.level(2);
  int n = I.ambient().size();

  std::vector<FiltrationStep> steps;
  if (!(I == d0)) {
    PrimeFiltration sub = generic_clean_search(I, d0, primes_of_height(n, 4));
    steps.insert(steps.end(), sub.steps.begin(), sub.steps.end());
  }
  if (!(d0 == d1)) {
    PrimeFiltration sub = generic_clean_search(d0, d1, primes_of_height(n, 3));
    steps.insert(steps.end(), sub.steps.begin(), sub.steps.end());
  }
  Monomial u = principal_part(I);
  if (!(d1 == d2)) {
    PrimeFiltration sub = build_codim2_clean(colon(d1, u));
    detail::append_lifted(steps, sub, u);
  }
  if (!u.is_unit()) {
    PrimeFiltration top = clean_filtration_principal(I.ambient(), u);
    steps.insert(steps.end(), top.steps.begin(), top.steps.end());
  }

  PrimeFiltration pf{I, std::move(steps)};
  FiltrationClass cls = classify_filtration(pf);  // throws unless verified
  if (!cls.pretty_clean)
    throw InternalVerificationError("constructed filtration is not pretty clean");
  return pf;
}

}  // namespace pclean
