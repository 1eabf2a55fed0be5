#pragma once
// Irredundant irreducible decomposition by generator splitting, primary
// components grouped by radical, associated primes, and height/dimension
// bookkeeping.

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "pclean/ideal.hpp"

namespace pclean {

/// (x_i^{a_i} : i in A) for positive exponents a_i on a non-empty A.
struct IrreducibleComponent {
  std::vector<std::pair<int, Exponent>> entries;  // sorted by variable index

  VarSet radical() const {
    VarSet s;
    for (const auto& [v, e] : entries) s = s.with(v);
    return s;
  }
  MonomialIdeal to_ideal(const Ambient& amb) const {
    std::vector<Monomial> gens;
    for (const auto& [v, e] : entries) gens.push_back(Monomial::variable(amb.size(), v, e));
    return MonomialIdeal(amb, std::move(gens));
  }
  bool operator==(const IrreducibleComponent&) const = default;
  bool operator<(const IrreducibleComponent& o) const { return entries < o.entries; }
};

struct PrimaryComponent {
  MonomialIdeal ideal;
  VarSet radical;
};

namespace detail {

inline IrreducibleComponent component_from_pure_powers(const MonomialIdeal& I) {
  IrreducibleComponent c;
  for (const Monomial& g : I.gens()) {
    std::vector<int> supp = g.support().vars();
    c.entries.emplace_back(supp.at(0), g.exponent(supp.at(0)));
  }
  std::sort(c.entries.begin(), c.entries.end());
  return c;
}

inline std::vector<IrreducibleComponent> decompose_uncached(const MonomialIdeal& I) {
  std::vector<IrreducibleComponent> raw;
  std::vector<MonomialIdeal> work{I};
  while (!work.empty()) {
    MonomialIdeal J = std::move(work.back());
    work.pop_back();
    // First generator in canonical order that is not a pure power.
    const Monomial* mixed = nullptr;
    for (const Monomial& g : J.gens())
      if (g.support().size() >= 2) {
        mixed = &g;
        break;
      }
    if (!mixed) {
      raw.push_back(component_from_pure_powers(J));
      continue;
    }
    int v = mixed->support().vars().front();
    Monomial power = Monomial::variable(J.ambient().size(), v, mixed->exponent(v));
    Monomial rest = *mixed / power;
    work.push_back(sum(J, power));
    work.push_back(sum(J, rest));
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  // Greedy irredundancy reduction in canonical order. The irredundant
  // irreducible decomposition of a monomial ideal is unique, so the greedy
  // pass recovers it.
  const Ambient& amb = I.ambient();
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(raw.size());
  for (const auto& c : raw) ideals.push_back(c.to_ideal(amb));
  std::vector<bool> kept(raw.size(), true);
  for (size_t i = 0; i < raw.size(); ++i) {
    MonomialIdeal rest = MonomialIdeal::unit(amb);
    for (size_t j = 0; j < raw.size(); ++j)
      if (j != i && kept[j]) rest = intersect(rest, ideals[j]);
    if (ideals[i].contains(rest)) kept[i] = false;
  }
  std::vector<IrreducibleComponent> out;
  for (size_t i = 0; i < raw.size(); ++i)
    if (kept[i]) out.push_back(raw[i]);
  return out;
}

inline std::string cache_key(const MonomialIdeal& I) {
  std::string key;
  for (const std::string& n : I.ambient().names()) key += n + ",";
  key += "|" + I.to_string();
  return key;
}

}  // namespace detail

/// Irredundant decomposition into irreducible monomial ideals, in a
/// deterministic order. Results are memoized per canonical generator list;
/// the construction layer revisits the same colon ideals repeatedly.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_unit() || I.is_zero())
    throw std::invalid_argument("irreducible decomposition needs a proper non-zero ideal");
  using Cache = std::map<std::string, std::shared_ptr<const std::vector<IrreducibleComponent>>>;
  static std::mutex mutex;
  static Cache cache;
  std::string key = detail::cache_key(I);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto result = std::make_shared<const std::vector<IrreducibleComponent>>(
      detail::decompose_uncached(I));
  {
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, result);
    if (cache.size() > 100000) cache.clear();
  }
  return *result;
}

/// Irreducible components grouped by radical and intersected: the irredundant
/// primary decomposition, with pairwise distinct radicals.
inline std::vector<PrimaryComponent> primary_components(const MonomialIdeal& I) {
  std::map<VarSet, std::vector<IrreducibleComponent>> groups;
  for (const IrreducibleComponent& c : irreducible_decomposition(I))
    groups[c.radical()].push_back(c);
  std::vector<PrimaryComponent> out;
  for (const auto& [rad, comps] : groups) {
    MonomialIdeal q = MonomialIdeal::unit(I.ambient());
    for (const IrreducibleComponent& c : comps) q = intersect(q, c.to_ideal(I.ambient()));
    out.push_back(PrimaryComponent{std::move(q), rad});
  }
  return out;
}

inline std::vector<VarSet> ass_primes(const MonomialIdeal& I) {
  std::vector<VarSet> out;
  for (const PrimaryComponent& c : primary_components(I)) out.push_back(c.radical);
  return out;
}

/// dim(S/I) = n - min height over the associated primes; n for the zero ideal.
inline int quotient_dim(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("the unit ideal has no quotient dimension");
  int n = I.ambient().size();
  if (I.is_zero()) return n;
  int best = 0;
  for (const VarSet& p : ass_primes(I)) best = std::max(best, n - height(p));
  return best;
}

inline int quotient_dim(const VarSet& prime, int nvars) { return nvars - height(prime); }

}  // namespace pclean
