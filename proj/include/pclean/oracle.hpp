#pragma once
// Homological ground truth for quotients by monomial ideals: multigraded Betti
// numbers from upper-Koszul complexes, depth via depth + pd = n, the
// Cohen-Macaulay test, Hilbert functions, and the short-exact-sequence
// additivity identity.
//
// For a multidegree b, the complex K^b has the subsets t of supp(b) with
// x^(b-t) in I as faces; the reduced homology rank of K^b in dimension i-2,
// taken over the rationals, is the Betti number of S/I at (i, b). Non-zero
// multidegrees divide the lcm of the generators, and with at most a handful of
// vertices the homology is torsion-free, so exact characteristic-zero ranks
// are the right answer in every characteristic.

#include <vector>

#include "pclean/decomposition.hpp"
#include "pclean/homology.hpp"
#include "pclean/ideal.hpp"

namespace pclean {

struct BettiEntry {
  int index;         // homological index i
  Monomial degree;   // multidegree b
  int rank;
};

class BettiTable {
 public:
  explicit BettiTable(std::vector<BettiEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<BettiEntry>& entries() const { return entries_; }

  int max_index() const {
    int out = 0;
    for (const BettiEntry& e : entries_) out = std::max(out, e.index);
    return out;
  }
  long long total_rank(int index) const {
    long long out = 0;
    for (const BettiEntry& e : entries_)
      if (e.index == index) out += e.rank;
    return out;
  }
  int rank_at(int index, const Monomial& degree) const {
    for (const BettiEntry& e : entries_)
      if (e.index == index && e.degree == degree) return e.rank;
    return 0;
  }

 private:
  std::vector<BettiEntry> entries_;
};

inline BettiTable betti_table(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("betti_table needs a proper ideal");
  const Ambient& amb = I.ambient();
  int n = amb.size();
  std::vector<BettiEntry> entries;
  entries.push_back(BettiEntry{0, Monomial::unit(n), 1});

  Monomial bound = I.lcm_of_gens();
  std::vector<Exponent> b(static_cast<size_t>(n), 0);
  while (true) {
    Monomial deg{std::vector<Exponent>(b)};
    if (I.contains(deg)) {
      std::vector<int> supp = deg.support().vars();
      int m = static_cast<int>(supp.size());
      std::vector<uint32_t> faces;
      for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        std::vector<Exponent> e(b);
        for (int j = 0; j < m; ++j)
          if ((mask >> j) & 1) e[static_cast<size_t>(supp[static_cast<size_t>(j)])] -= 1;
        if (I.contains(Monomial(std::move(e)))) faces.push_back(mask);
      }
      std::vector<int> h = reduced_betti_ranks(m, faces);
      for (size_t k = 0; k < h.size(); ++k)
        if (h[k] > 0)
          entries.push_back(BettiEntry{static_cast<int>(k) + 1, deg, h[k]});
    }
    // componentwise odometer over 0..lcm exponent
    int i = 0;
    for (; i < n; ++i) {
      if (b[static_cast<size_t>(i)] < bound.exponent(i)) {
        ++b[static_cast<size_t>(i)];
        break;
      }
      b[static_cast<size_t>(i)] = 0;
    }
    if (i == n) break;
  }

  std::sort(entries.begin(), entries.end(), [](const BettiEntry& a, const BettiEntry& b2) {
    if (a.index != b2.index) return a.index < b2.index;
    return grlex_less(a.degree, b2.degree);
  });
  return BettiTable(std::move(entries));
}

inline int projective_dimension(const MonomialIdeal& I) { return betti_table(I).max_index(); }

/// depth(S/I) = n - pd(S/I).
inline int depth(const MonomialIdeal& I) {
  return I.ambient().size() - projective_dimension(I);
}

inline bool is_cm(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("is_cm needs a proper ideal");
  return depth(I) == quotient_dim(I);
}

/// Counts of standard monomials of S/I per total degree, t = 0..tmax.
inline std::vector<long long> hilbert_function(const MonomialIdeal& I, int tmax) {
  if (tmax < 0) throw std::invalid_argument("tmax must be non-negative");
  int n = I.ambient().size();
  std::vector<long long> out(static_cast<size_t>(tmax) + 1, 0);
  std::vector<Exponent> exps(static_cast<size_t>(n), 0);
  // enumerate all exponent vectors of total degree <= tmax
  auto walk = [&](auto&& self, int var, Exponent remaining) -> void {
    if (var == n - 1) {
      exps[static_cast<size_t>(var)] = remaining;
      Monomial m{std::vector<Exponent>(exps)};
      if (!I.contains(m)) ++out[static_cast<size_t>(m.total_degree())];
      return;
    }
    for (Exponent e = 0; e <= remaining; ++e) {
      exps[static_cast<size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
  };
  for (int t = 0; t <= tmax; ++t) walk(walk, 0, t);
  return out;
}

/// Hilbert-function identity of 0 -> S/(J cap P) -> S/J + S/P -> S/(J+P) -> 0:
/// HF(S/(J cap P)) + HF(S/(J+P)) = HF(S/J) + HF(S/P), degree by degree. Always
/// true; a false return flags an arithmetic bug.
inline bool ses_additivity_check(const MonomialIdeal& J, const MonomialIdeal& P, int tmax) {
  std::vector<long long> lhs1 = hilbert_function(intersect(J, P), tmax);
  std::vector<long long> lhs2 = hilbert_function(sum(J, P), tmax);
  std::vector<long long> rhs1 = hilbert_function(J, tmax);
  std::vector<long long> rhs2 = hilbert_function(P, tmax);
  for (size_t t = 0; t < lhs1.size(); ++t)
    if (lhs1[t] + lhs2[t] != rhs1[t] + rhs2[t]) return false;
  return true;
}

}  // namespace pclean
