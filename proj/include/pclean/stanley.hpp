#pragma once
// Stanley decompositions read off prime filtrations, the disjoint-cover
// verifier, and the sdepth >= depth report.

#include <vector>

#include "pclean/construction.hpp"
#include "pclean/oracle.hpp"

namespace pclean {

/// u * K[Z]: the monomials divisible by u whose quotient by u only involves
/// the free variables Z.
struct StanleySpace {
  Monomial u;
  VarSet free_vars;

  bool contains(const Monomial& m) const {
    if (!u.divides(m)) return false;
    return (m / u).support().subset_of(free_vars);
  }
};

struct StanleyDecomposition {
  MonomialIdeal ideal;
  std::vector<StanleySpace> spaces;

  /// min |Z_i|; the ambient size for an empty decomposition (unit ideal).
  int sdepth() const {
    int out = ideal.ambient().size();
    for (const StanleySpace& s : spaces) out = std::min(out, s.free_vars.size());
    return out;
  }
};

/// One Stanley space per filtration step: the step monomial over the
/// complement of the step prime's variables.
inline StanleyDecomposition to_stanley(const PrimeFiltration& pf) {
  FiltrationReport rep = verify_prime_filtration(pf);
  if (!rep.ok)
    throw std::invalid_argument("to_stanley needs a verified filtration: " + rep.reason);
  int n = pf.base.ambient().size();
  StanleyDecomposition out{pf.base, {}};
  for (const FiltrationStep& step : pf.steps) {
    VarSet free;
    for (int v = 0; v < n; ++v)
      if (!step.prime.contains(v)) free = free.with(v);
    out.spaces.push_back(StanleySpace{step.u, free});
  }
  return out;
}

/// Checks on every monomial of the box that the spaces partition the standard
/// monomials: m outside the ideal iff m lies in exactly one space. The box
/// must dominate lcm(G(I)) + 1 in each coordinate.
inline bool verify_stanley(const StanleyDecomposition& sd, const Monomial& box) {
  const MonomialIdeal& I = sd.ideal;
  int n = I.ambient().size();
  Monomial need = I.lcm_of_gens() * Monomial(std::vector<Exponent>(static_cast<size_t>(n), 1));
  if (!box.nvars() || box.nvars() != n || !need.divides(box))
    throw std::invalid_argument("verification box is too small");
  std::vector<Exponent> exps(static_cast<size_t>(n), 0);
  auto walk = [&](auto&& self, int var) -> bool {
    if (var == n) {
      Monomial m{std::vector<Exponent>(exps)};
      int hits = 0;
      for (const StanleySpace& s : sd.spaces)
        if (s.contains(m)) ++hits;
      return I.contains(m) ? hits == 0 : hits == 1;
    }
    for (Exponent e = 0; e <= box.exponent(var); ++e) {
      exps[static_cast<size_t>(var)] = e;
      if (!self(self, var + 1)) return false;
    }
    return true;
  };
  return walk(walk, 0);
}

/// Default verification box for an ideal: lcm of the generators plus one in
/// each coordinate.
inline Monomial standard_box(const MonomialIdeal& I) {
  return I.lcm_of_gens() *
         Monomial(std::vector<Exponent>(static_cast<size_t>(I.ambient().size()), 1));
}

struct StanleyReport {
  int sdepth;
  int depth;
  bool stanley_ok;  // sdepth >= depth(S/I)
};

inline StanleyReport stanley_report(const MonomialIdeal& I, const StanleyDecomposition& sd) {
  StanleyReport out{};
  out.sdepth = sd.sdepth();
  out.depth = depth(I);
  out.stanley_ok = out.sdepth >= out.depth;
  return out;
}

}  // namespace pclean
