#pragma once
// Exact monomial arithmetic over a fixed, named variable set.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pclean {

using Exponent = long long;

class AmbientMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ambient polynomial ring: a count of variables and their print names.
class Ambient {
 public:
  explicit Ambient(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
      throw std::invalid_argument("ambient needs at least one variable");
    if (names_.size() > 64)
      throw std::invalid_argument("at most 64 variables supported");
    for (size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty())
        throw std::invalid_argument("variable names must be non-empty");
      for (size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("variable names must be distinct: " + names_[i]);
    }
  }

  static Ambient xyzw() { return Ambient({"x", "y", "z", "w"}); }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }
  bool operator==(const Ambient&) const = default;

 private:
  std::vector<std::string> names_;
};

inline void require_same_ambient(const Ambient& a, const Ambient& b) {
  if (!(a == b)) throw AmbientMismatchError("ambient mismatch");
}

/// A set of variables. Doubles as the monomial prime ideal generated by those
/// variables; its height is the set size.
class VarSet {
 public:
  VarSet() = default;

  static VarSet single(int var) { return VarSet(uint64_t{1} << var); }
  static VarSet of(std::initializer_list<int> vars) {
    VarSet s;
    for (int v : vars) s = s.with(v);
    return s;
  }
  static VarSet all(int nvars) {
    return VarSet(nvars == 64 ? ~uint64_t{0} : (uint64_t{1} << nvars) - 1);
  }

  VarSet with(int var) const { return VarSet(bits_ | (uint64_t{1} << var)); }
  bool contains(int var) const { return (bits_ >> var) & 1; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  bool subset_of(const VarSet& other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(const VarSet& other) const { return (bits_ & other.bits_) != 0; }
  VarSet united(const VarSet& other) const { return VarSet(bits_ | other.bits_); }
  uint64_t bits() const { return bits_; }

  std::vector<int> vars() const {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  bool operator==(const VarSet&) const = default;
  /// Deterministic order: lexicographic on the sorted variable sequence.
  bool operator<(const VarSet& other) const { return vars() < other.vars(); }

  std::string to_string(const Ambient& amb) const {
    std::string out = "(";
    bool first = true;
    for (int v : vars()) {
      if (!first) out += ",";
      out += amb.name(v);
      first = false;
    }
    return out + ")";
  }

 private:
  explicit VarSet(uint64_t bits) : bits_(bits) {}
  uint64_t bits_ = 0;
};

inline int height(const VarSet& prime) { return prime.size(); }

/// An exponent vector; the unit monomial is all zeros.
class Monomial {
 public:
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
    for (Exponent e : exps_)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }

  static Monomial unit(int nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
  static Monomial variable(int nvars, int var, Exponent e = 1) {
    std::vector<Exponent> exps(nvars, 0);
    exps[static_cast<size_t>(var)] = e;
    return Monomial(std::move(exps));
  }

  int nvars() const { return static_cast<int>(exps_.size()); }
  Exponent exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  Exponent total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), Exponent{0});
  }
  bool is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }
  VarSet support() const {
    VarSet s;
    for (int i = 0; i < nvars(); ++i)
      if (exps_[static_cast<size_t>(i)] > 0) s = s.with(i);
    return s;
  }
  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }
  Monomial squarefree_part() const {
    std::vector<Exponent> out(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i] > 0 ? 1 : 0;
    return Monomial(std::move(out));
  }

  bool divides(const Monomial& m) const {
    check_same(m);
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    std::vector<Exponent> out(a.exps_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(out));
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    std::vector<Exponent> out(a.exps_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = std::min(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(out));
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    std::vector<Exponent> out(a.exps_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.exps_[i] + b.exps_[i];
    return Monomial(std::move(out));
  }
  /// Exact division; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    std::vector<Exponent> out(a.exps_.size());
    for (size_t i = 0; i < out.size(); ++i) {
      if (b.exps_[i] > a.exps_[i]) throw std::invalid_argument("monomial division is not exact");
      out[i] = a.exps_[i] - b.exps_[i];
    }
    return Monomial(std::move(out));
  }
  /// m / gcd(m, u): the generator image under the colon by u.
  friend Monomial colon_quotient(const Monomial& m, const Monomial& u) {
    m.check_same(u);
    std::vector<Exponent> out(m.exps_.size());
    for (size_t i = 0; i < out.size(); ++i)
      out[i] = std::max(Exponent{0}, m.exps_[i] - u.exps_[i]);
    return Monomial(std::move(out));
  }

  bool operator==(const Monomial&) const = default;

  std::string to_string(const Ambient& amb) const {
    if (is_unit()) return "1";
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
      Exponent e = exps_[static_cast<size_t>(i)];
      if (e == 0) continue;
      if (!out.empty()) out += "*";
      out += amb.name(i);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<Exponent> exps_;
  void check_same(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
      throw AmbientMismatchError("monomials live in different ambients");
  }
};

/// Graded lexicographic: total degree first, then the exponent vector.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  Exponent da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

}  // namespace pclean
