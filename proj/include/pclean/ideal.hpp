#pragma once
// Monomial ideals in canonical minimal form, and their exact arithmetic.
//
// Canonical form: the unique minimal generating set, sorted in graded
// lexicographic order. The zero ideal has no generators; the unit ideal is
// generated by the unit monomial.

#include <string>
#include <vector>

#include "pclean/monomial.hpp"

namespace pclean {

namespace detail {

/// Removes generators divisible by another generator (and duplicates), then
/// sorts grlex. The generated ideal is unchanged and the output is the unique
/// minimal generating set.
inline std::vector<Monomial> minimal_gens(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), grlex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace detail

class MonomialIdeal {
 public:
  MonomialIdeal(Ambient ambient, std::vector<Monomial> gens)
      : amb_(std::move(ambient)), gens_(detail::minimal_gens(std::move(gens))) {
    for (const Monomial& g : gens_)
      if (g.nvars() != amb_.size())
        throw AmbientMismatchError("generator does not match the ambient");
  }

  static MonomialIdeal zero(Ambient amb) { return MonomialIdeal(std::move(amb), {}); }
  static MonomialIdeal unit(Ambient amb) {
    int n = amb.size();
    return MonomialIdeal(std::move(amb), {Monomial::unit(n)});
  }
  static MonomialIdeal principal(Ambient amb, Monomial m) {
    return MonomialIdeal(std::move(amb), {std::move(m)});
  }
  static MonomialIdeal from_prime(Ambient amb, const VarSet& prime) {
    std::vector<Monomial> gens;
    for (int v : prime.vars()) gens.push_back(Monomial::variable(amb.size(), v));
    return MonomialIdeal(std::move(amb), std::move(gens));
  }

  const Ambient& ambient() const { return amb_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool is_proper() const { return !is_unit(); }

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }
  /// Ideal containment: this ⊇ other.
  bool contains(const MonomialIdeal& other) const {
    require_same_ambient(amb_, other.amb_);
    for (const Monomial& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  /// Canonical forms are unique, so equality is generator-list equality.
  bool operator==(const MonomialIdeal& other) const {
    return amb_ == other.amb_ && gens_ == other.gens_;
  }

  /// (x_i : i in P) when every generator is a single variable.
  std::optional<VarSet> as_prime() const {
    VarSet s;
    for (const Monomial& g : gens_) {
      if (g.total_degree() != 1) return std::nullopt;
      s = s.united(g.support());
    }
    if (s.empty()) return std::nullopt;
    return s;
  }

  /// Componentwise lcm of the generators; the unit monomial for the zero ideal.
  Monomial lcm_of_gens() const {
    Monomial out = Monomial::unit(amb_.size());
    for (const Monomial& g : gens_) out = lcm(out, g);
    return out;
  }

  std::string to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
      if (i) out += ", ";
      out += gens_[i].to_string(amb_);
    }
    return out + ")";
  }

 private:
  Ambient amb_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(Ambient amb, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(amb), std::move(gens));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient());
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> gens = a.gens();
  gens.push_back(m);
  return MonomialIdeal(a.ambient(), std::move(gens));
}

/// Pairwise lcms of generators; membership-equivalent to the set intersection.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient());
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& g : a.gens())
    for (const Monomial& h : b.gens()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.ambient(), std::move(gens));
}

/// (I : u) = { m : m*u in I }, generated by g / gcd(g, u) over generators g.
inline MonomialIdeal colon(const MonomialIdeal& a, const Monomial& u) {
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const Monomial& g : a.gens()) gens.push_back(colon_quotient(g, u));
  return MonomialIdeal(a.ambient(), std::move(gens));
}

/// Squarefree supports of the generators.
inline MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const Monomial& g : a.gens()) gens.push_back(g.squarefree_part());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

inline bool membership(const MonomialIdeal& a, const Monomial& m) { return a.contains(m); }

inline bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient());
  return a == b;
}

}  // namespace pclean
