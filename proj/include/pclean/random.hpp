#pragma once
// Deterministic pseudorandom sampling of monomial ideals.
//
// The generator is splitmix64 written out in full so that ports in other
// languages can reproduce streams exactly:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
// Bounded draws are next() % n.

#include <cstdint>
#include <vector>

#include "pclean/construction.hpp"

namespace pclean {

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }

 private:
  uint64_t state_;
};

namespace detail {

inline VarSet random_nonempty_subset(SplitMix64& rng, int n) {
  while (true) {
    uint64_t mask = rng.below(uint64_t{1} << n);
    if (mask == 0) continue;
    VarSet s;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) s = s.with(v);
    return s;
  }
}

inline MonomialIdeal random_irreducible(SplitMix64& rng, const Ambient& amb, const VarSet& support,
                                        int max_exp) {
  std::vector<Monomial> gens;
  for (int v : support.vars())
    gens.push_back(Monomial::variable(amb.size(), v,
                                      static_cast<Exponent>(1 + rng.below(static_cast<uint64_t>(max_exp)))));
  return MonomialIdeal(amb, std::move(gens));
}

inline std::vector<VarSet> random_permuted_edges(SplitMix64& rng, const std::vector<VarSet>& edges) {
  std::array<int, 4> perm = {0, 1, 2, 3};
  for (int i = 3; i > 0; --i)
    std::swap(perm[static_cast<size_t>(i)], perm[rng.below(static_cast<uint64_t>(i) + 1)]);
  std::vector<VarSet> out;
  for (const VarSet& e : edges) {
    VarSet s;
    for (int v : e.vars()) s = s.with(perm[static_cast<size_t>(v)]);
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

/// Intersection of 1..max_comps random irreducible ideals on arbitrary
/// non-empty supports, exponents in [1, max_exp].
inline MonomialIdeal sample_mixed_ideal(SplitMix64& rng, const Ambient& amb, int max_exp,
                                        int max_comps) {
  int count = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_comps)));
  MonomialIdeal out = MonomialIdeal::unit(amb);
  for (int i = 0; i < count; ++i)
    out = intersect(out, detail::random_irreducible(
                             rng, amb, detail::random_nonempty_subset(rng, amb.size()), max_exp));
  return out;
}

/// Height-2-pure ideal whose associated primes realize exactly the given
/// configuration kind under a random variable permutation: one or two
/// irreducible components per edge, exponents in [1, max_exp].
inline MonomialIdeal sample_kind_ideal(SplitMix64& rng, const Ambient& amb, AssConfigKind kind,
                                       int max_exp) {
  std::vector<VarSet> edges = detail::random_permuted_edges(rng, canonical_primes(kind));
  MonomialIdeal out = MonomialIdeal::unit(amb);
  for (const VarSet& e : edges) {
    int comps = rng.below(4) == 0 ? 2 : 1;
    for (int i = 0; i < comps; ++i)
      out = intersect(out, detail::random_irreducible(rng, amb, e, max_exp));
  }
  return out;
}

/// Height-2-pure ideal with a uniformly chosen edge count; used to keep every
/// configuration kind reachable within small sample counts.
inline MonomialIdeal sample_height2_ideal(SplitMix64& rng, const Ambient& amb, int max_exp) {
  const std::vector<VarSet>& all = canonical_primes(AssConfigKind::Six);
  int count = 1 + static_cast<int>(rng.below(6));
  std::vector<VarSet> chosen;
  std::vector<VarSet> remaining = all;
  for (int i = 0; i < count; ++i) {
    size_t at = rng.below(remaining.size());
    chosen.push_back(remaining[at]);
    remaining.erase(remaining.begin() + static_cast<long>(at));
  }
  chosen = detail::random_permuted_edges(rng, chosen);
  MonomialIdeal out = MonomialIdeal::unit(amb);
  for (const VarSet& e : chosen) {
    int comps = rng.below(4) == 0 ? 2 : 1;
    for (int i = 0; i < comps; ++i)
      out = intersect(out, detail::random_irreducible(rng, amb, e, max_exp));
  }
  return out;
}

}  // namespace pclean
