#include <doctest.h>

#include "pclean/parser.hpp"
#include "pclean/random.hpp"
#include "pclean/stanley.hpp"

using namespace pclean;

namespace {

long long count_box_monomials(const Monomial& box, const std::function<bool(const Monomial&)>& f) {
  int n = box.nvars();
  long long count = 0;
  std::vector<Exponent> exps(static_cast<size_t>(n), 0);
  auto walk = [&](auto&& self, int var) -> void {
    if (var == n) {
      if (f(Monomial{std::vector<Exponent>(exps)})) ++count;
      return;
    }
    for (Exponent e = 0; e <= box.exponent(var); ++e) {
      exps[static_cast<size_t>(var)] = e;
      self(self, var + 1);
    }
  };
  walk(walk, 0);
  return count;
}

}  // namespace

TEST_CASE("to_stanley") {
  Ambient amb = Ambient::xyzw();
  auto m = [&](const char* s) { return parse_monomial(s, amb); };

  SUBCASE("hypersurface splits by divisibility") {
    PrimeFiltration pf{parse_ideal("(x*y)", amb),
                       {FiltrationStep{m("y"), VarSet::of({0})},
                        FiltrationStep{m("1"), VarSet::of({1})}}};
    StanleyDecomposition sd = to_stanley(pf);
    REQUIRE(sd.spaces.size() == 2);
    CHECK(sd.spaces[0].u == m("y"));
    CHECK(sd.spaces[0].free_vars == VarSet::of({1, 2, 3}));
    CHECK(sd.spaces[1].u == m("1"));
    CHECK(sd.spaces[1].free_vars == VarSet::of({0, 2, 3}));
    CHECK(sd.sdepth() == 3);
    CHECK(verify_stanley(sd, standard_box(pf.base)));
    StanleyReport rep = stanley_report(pf.base, sd);
    CHECK(rep.sdepth == 3);
    CHECK(rep.depth == 3);
    CHECK(rep.stanley_ok);
  }
  SUBCASE("a prime gives a single free space") {
    PrimeFiltration pf{parse_ideal("(x,y)", amb), {FiltrationStep{m("1"), VarSet::of({0, 1})}}};
    StanleyDecomposition sd = to_stanley(pf);
    REQUIRE(sd.spaces.size() == 1);
    CHECK(sd.spaces[0].free_vars == VarSet::of({2, 3}));
    StanleyReport rep = stanley_report(pf.base, sd);
    CHECK(rep.sdepth == 2);
    CHECK(rep.depth == 2);
    CHECK(rep.stanley_ok);
  }
  SUBCASE("rejects unverified input") {
    PrimeFiltration bad{parse_ideal("(x*y)", amb), {FiltrationStep{m("x"), VarSet::of({0})}}};
    CHECK_THROWS_AS(to_stanley(bad), std::invalid_argument);
  }
  SUBCASE("pretty clean output of a two-layer ideal") {
    MonomialIdeal I = parse_ideal("(x^2, x*y)", amb);
    StanleyDecomposition sd = to_stanley(build_pretty_clean(I));
    CHECK(verify_stanley(sd, standard_box(I)));
    for (const StanleySpace& s : sd.spaces) CHECK(s.free_vars.size() >= 2);
    CHECK(stanley_report(I, sd).stanley_ok);
  }
}

TEST_CASE("verify_stanley rejects broken decompositions") {
  Ambient amb = Ambient::xyzw();
  MonomialIdeal I = parse_ideal("(x)", amb);

  SUBCASE("a space covering monomials inside the ideal") {
    StanleyDecomposition sd{I, {StanleySpace{Monomial::unit(4), VarSet::all(4)}}};
    CHECK(!verify_stanley(sd, standard_box(I)));
  }
  SUBCASE("no spaces leaves the unit uncovered") {
    StanleyDecomposition sd{I, {}};
    CHECK(!verify_stanley(sd, standard_box(I)));
  }
  SUBCASE("overlapping spaces") {
    StanleyDecomposition sd{I,
                            {StanleySpace{parse_monomial("y", amb), VarSet::of({1, 2, 3})},
                             StanleySpace{parse_monomial("y", amb), VarSet::of({1, 2, 3})},
                             StanleySpace{Monomial::unit(4), VarSet::of({2, 3})}}};
    CHECK(!verify_stanley(sd, standard_box(I)));
  }
  SUBCASE("the box must dominate the generators") {
    StanleyDecomposition sd{parse_ideal("(x^3)", amb), {}};
    CHECK_THROWS_AS(verify_stanley(sd, parse_monomial("x*y*z*w", amb)), std::invalid_argument);
  }
}

TEST_CASE("unit ideal conventions") {
  Ambient amb = Ambient::xyzw();
  StanleyDecomposition sd{MonomialIdeal::unit(amb), {}};
  CHECK(sd.sdepth() == 4);
  CHECK(verify_stanley(sd, parse_monomial("x*y*z*w", amb)));
}

TEST_CASE("counting identity on random pretty clean decompositions") {
  Ambient amb = Ambient::xyzw();
  SplitMix64 rng(808);
  int built = 0;
  for (int trial = 0; trial < 50 && built < 25; ++trial) {
    MonomialIdeal I = sample_mixed_ideal(rng, amb, 3, 5);
    if (!is_scm(I)) continue;
    ++built;
    StanleyDecomposition sd = to_stanley(build_pretty_clean(I));
    Monomial box = standard_box(I);
    CHECK(verify_stanley(sd, box));
    long long outside = count_box_monomials(box, [&](const Monomial& m) { return !I.contains(m); });
    long long covered = 0;
    for (const StanleySpace& s : sd.spaces)
      covered += count_box_monomials(box, [&](const Monomial& m) { return s.contains(m); });
    CHECK(outside == covered);
  }
  CHECK(built >= 15);
}

TEST_CASE("sdepth is invariant under simultaneous variable permutations") {
  Ambient amb = Ambient::xyzw();
  SplitMix64 rng(909);
  std::array<int, 4> perm = {0, 1, 2, 3};
  int built = 0;
  do {
    MonomialIdeal I = sample_mixed_ideal(rng, amb, 3, 4);
    if (!is_scm(I)) continue;
    ++built;
    StanleyDecomposition sd = to_stanley(build_pretty_clean(I));

    auto map_monomial = [&](const Monomial& m) {
      std::vector<Exponent> exps(4, 0);
      for (int v = 0; v < 4; ++v) exps[static_cast<size_t>(perm[static_cast<size_t>(v)])] = m.exponent(v);
      return Monomial(std::move(exps));
    };
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens()) gens.push_back(map_monomial(g));
    MonomialIdeal J(amb, std::move(gens));
    StanleyDecomposition mapped{J, {}};
    for (const StanleySpace& s : sd.spaces) {
      VarSet free;
      for (int v : s.free_vars.vars()) free = free.with(perm[static_cast<size_t>(v)]);
      mapped.spaces.push_back(StanleySpace{map_monomial(s.u), free});
    }
    CHECK(verify_stanley(mapped, standard_box(J)));
    CHECK(mapped.sdepth() == sd.sdepth());
  } while (std::next_permutation(perm.begin(), perm.end()) && built < 24);
}
