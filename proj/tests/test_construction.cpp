#include <doctest.h>

#include "pclean/construction.hpp"
#include "pclean/parser.hpp"
#include "pclean/random.hpp"

using namespace pclean;

TEST_CASE("classify_ass_config") {
  SUBCASE("canonical representatives") {
    CHECK(classify_ass_config({VarSet::of({0, 1})}).kind == AssConfigKind::Single);
    CHECK(classify_ass_config({VarSet::of({0, 1}), VarSet::of({0, 2})}).kind ==
          AssConfigKind::TwoShared);
    CHECK(classify_ass_config({VarSet::of({0, 1}), VarSet::of({2, 3})}).kind ==
          AssConfigKind::TwoDisjoint);
    CHECK(classify_ass_config({VarSet::of({0, 1}), VarSet::of({0, 2}), VarSet::of({1, 2})}).kind ==
          AssConfigKind::Triangle);
    CHECK(classify_ass_config({VarSet::of({0, 1}), VarSet::of({0, 2}), VarSet::of({0, 3})}).kind ==
          AssConfigKind::Star3);
    CHECK(classify_ass_config({VarSet::of({0, 1}), VarSet::of({0, 2}), VarSet::of({2, 3})}).kind ==
          AssConfigKind::Path3);
  }
  SUBCASE("a permuted path") {
    // {(x,z),(y,z),(y,w)} is a path through z and y
    AssConfiguration config =
        classify_ass_config({VarSet::of({0, 2}), VarSet::of({1, 2}), VarSet::of({1, 3})});
    CHECK(config.kind == AssConfigKind::Path3);
    // applying the permutation to the input primes gives the canonical set
    std::vector<VarSet> mapped;
    for (VarSet p : {VarSet::of({0, 2}), VarSet::of({1, 2}), VarSet::of({1, 3})}) {
      VarSet image;
      for (int v : p.vars()) image = image.with(config.perm[static_cast<size_t>(v)]);
      mapped.push_back(image);
    }
    std::sort(mapped.begin(), mapped.end());
    std::vector<VarSet> canon = canonical_primes(AssConfigKind::Path3);
    std::sort(canon.begin(), canon.end());
    CHECK(mapped == canon);
  }
  SUBCASE("every edge subset classifies to exactly one kind") {
    const std::vector<VarSet>& edges = canonical_primes(AssConfigKind::Six);
    std::map<AssConfigKind, int> counts;
    for (uint32_t mask = 1; mask < 64; ++mask) {
      std::vector<VarSet> primes;
      for (int e = 0; e < 6; ++e)
        if ((mask >> e) & 1) primes.push_back(edges[static_cast<size_t>(e)]);
      counts[classify_ass_config(primes).kind]++;
    }
    CHECK(counts.size() == 10);
    CHECK(counts[AssConfigKind::Single] == 6);
    CHECK(counts[AssConfigKind::TwoShared] == 12);
    CHECK(counts[AssConfigKind::TwoDisjoint] == 3);
    CHECK(counts[AssConfigKind::Triangle] == 4);
    CHECK(counts[AssConfigKind::Star3] == 4);
    CHECK(counts[AssConfigKind::Path3] == 12);
    CHECK(counts[AssConfigKind::Paw4] == 12);
    CHECK(counts[AssConfigKind::Cycle4] == 3);
    CHECK(counts[AssConfigKind::Five] == 6);
    CHECK(counts[AssConfigKind::Six] == 1);
  }
  SUBCASE("rejects non-height-2 primes") {
    CHECK_THROWS_AS(classify_ass_config({VarSet::of({0})}), std::invalid_argument);
    CHECK_THROWS_AS(classify_ass_config({VarSet::of({0, 1, 2})}), std::invalid_argument);
  }
}

TEST_CASE("cm_condition") {
  Ambient amb = Ambient::xyzw();

  SUBCASE("the worked example fails its inclusion") {
    MonomialIdeal I = parse_ideal("intersect((x^2,y),(x,z),(z,w))", amb);
    AssConfiguration config = classify_ass_config(ass_primes(I));
    REQUIRE(config.kind == AssConfigKind::Path3);
    CmConditionReport report = cm_condition(config, primary_components(I));
    CHECK(!report.satisfied);
    bool found = false;
    for (const CmClause& c : report.clauses)
      if (c.test == "P2 ⊆ P1+P3") {
        found = true;
        CHECK(!c.holds);
      }
    CHECK(found);
  }
  SUBCASE("the radical satisfies it") {
    MonomialIdeal I = radical(parse_ideal("intersect((x^2,y),(x,z),(z,w))", amb));
    AssConfiguration config = classify_ass_config(ass_primes(I));
    CmConditionReport report = cm_condition(config, primary_components(I));
    CHECK(report.satisfied);
  }
  SUBCASE("squarefree four-cycle") {
    MonomialIdeal I = parse_ideal("intersect((x,y),(x,z),(z,w),(y,w))", amb);
    AssConfiguration config = classify_ass_config(ass_primes(I));
    REQUIRE(config.kind == AssConfigKind::Cycle4);
    CHECK(cm_condition(config, primary_components(I)).satisfied);
  }
  SUBCASE("two disjoint primes can never satisfy it") {
    MonomialIdeal I = parse_ideal("intersect((x,y),(z,w))", amb);
    AssConfiguration config = classify_ass_config(ass_primes(I));
    CHECK(!cm_condition(config, primary_components(I)).satisfied);
  }
  SUBCASE("component list must match the configuration") {
    MonomialIdeal I = parse_ideal("intersect((x,y),(x,z))", amb);
    AssConfiguration config = classify_ass_config(ass_primes(I));
    MonomialIdeal other = parse_ideal("intersect((x,y),(z,w))", amb);
    CHECK_THROWS_AS(cm_condition(config, primary_components(other)), std::invalid_argument);
  }
}

TEST_CASE("clean_filtration_primary") {
  Ambient amb = Ambient::xyzw();
  auto m = [&](const char* s) { return parse_monomial(s, amb); };

  SUBCASE("socle-first peel of (x^2, y)") {
    PrimeFiltration pf = clean_filtration_primary(parse_ideal("(x^2,y)", amb), VarSet::of({0, 1}));
    REQUIRE(pf.steps.size() == 2);
    CHECK(pf.steps[0].u == m("x"));
    CHECK(pf.steps[1].u == m("1"));
    CHECK(pf.steps[0].prime == VarSet::of({0, 1}));
    CHECK(verify_prime_filtration(pf).ok);
  }
  SUBCASE("a prime peels in one step") {
    PrimeFiltration pf = clean_filtration_primary(parse_ideal("(x,y)", amb), VarSet::of({0, 1}));
    REQUIRE(pf.steps.size() == 1);
    CHECK(pf.steps[0].u.is_unit());
  }
  SUBCASE("one step per standard monomial") {
    PrimeFiltration pf = clean_filtration_primary(parse_ideal("(x^3,y^2)", amb), VarSet::of({0, 1}));
    CHECK(pf.steps.size() == 6);
    for (size_t i = 1; i < pf.steps.size(); ++i)
      CHECK(pf.steps[i - 1].u.total_degree() >= pf.steps[i].u.total_degree());
    CHECK(verify_prime_filtration(pf).ok);
  }
  SUBCASE("rejects non-primary input") {
    CHECK_THROWS_AS(clean_filtration_primary(parse_ideal("(x*y)", amb), VarSet::of({0, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(clean_filtration_primary(parse_ideal("(x^2,y)", amb), VarSet::of({0, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(clean_filtration_primary(parse_ideal("(x^2,y*z)", amb), VarSet::of({0, 1, 2})),
                    std::invalid_argument);
  }
}

TEST_CASE("clean_filtration_principal") {
  Ambient amb = Ambient::xyzw();
  auto m = [&](const char* s) { return parse_monomial(s, amb); };

  SUBCASE("x*y") {
    PrimeFiltration pf = clean_filtration_principal(amb, m("x*y"));
    REQUIRE(pf.steps.size() == 2);
    CHECK(pf.steps[0].u == m("y"));
    CHECK(pf.steps[0].prime == VarSet::of({0}));
    CHECK(pf.steps[1].u == m("1"));
    CHECK(pf.steps[1].prime == VarSet::of({1}));
  }
  SUBCASE("x^2") {
    PrimeFiltration pf = clean_filtration_principal(amb, m("x^2"));
    REQUIRE(pf.steps.size() == 2);
    CHECK(pf.steps[0].u == m("x"));
    CHECK(pf.steps[1].u == m("1"));
  }
  SUBCASE("x^2*z has three steps with primes (x),(x),(z)") {
    PrimeFiltration pf = clean_filtration_principal(amb, m("x^2*z"));
    REQUIRE(pf.steps.size() == 3);
    CHECK(pf.steps[0].prime == VarSet::of({0}));
    CHECK(pf.steps[1].prime == VarSet::of({0}));
    CHECK(pf.steps[2].prime == VarSet::of({2}));
    CHECK(verify_prime_filtration(pf).ok);
  }
  SUBCASE("the unit monomial is rejected") {
    CHECK_THROWS_AS(clean_filtration_principal(amb, m("1")), std::invalid_argument);
  }
}

TEST_CASE("build_codim2_clean") {
  Ambient amb = Ambient::xyzw();

  SUBCASE("two primes sharing a variable") {
    MonomialIdeal I = parse_ideal("intersect((x^2,y),(x,z))", amb);
    CHECK(I == parse_ideal("(x^2, x*y, y*z)", amb));
    PrimeFiltration pf = build_codim2_clean(I);
    CHECK(verify_prime_filtration(pf).ok);
    CHECK(classify_filtration(pf).clean);
  }
  SUBCASE("the radical of the worked example") {
    MonomialIdeal I = radical(parse_ideal("intersect((x^2,y),(x,z),(z,w))", amb));
    PrimeFiltration pf = build_codim2_clean(I);
    CHECK(classify_filtration(pf).clean);
    std::vector<VarSet> allowed = {VarSet::of({0, 1}), VarSet::of({0, 2}), VarSet::of({2, 3})};
    for (const FiltrationStep& s : pf.steps)
      CHECK(std::find(allowed.begin(), allowed.end(), s.prime) != allowed.end());
  }
  SUBCASE("the worked example itself is rejected") {
    MonomialIdeal I = parse_ideal("intersect((x^2,y),(x,z),(z,w))", amb);
    CHECK_THROWS_AS(build_codim2_clean(I), NotCohenMacaulayError);
    try {
      build_codim2_clean(I);
    } catch (const NotCohenMacaulayError& e) {
      CHECK(e.report().kind == AssConfigKind::Path3);
      CHECK(!e.report().satisfied);
    }
  }
  SUBCASE("disjoint supports are rejected") {
    CHECK_THROWS_AS(build_codim2_clean(parse_ideal("intersect((x,y^2),(z^3,w))", amb)),
                    NotCohenMacaulayError);
  }
  SUBCASE("a six-prime ideal satisfying only the redundancy form of the condition") {
    // Cohen-Macaulay although no single component lies in P1+P3.
    MonomialIdeal I = parse_ideal(
        "intersect((y,x^2),(z^2,x^3),(w^3,z^3,z^2*w^2),(y,w^2),(z,y^2),(w,x^3))", amb);
    AssConfiguration config = classify_ass_config(ass_primes(I));
    REQUIRE(config.kind == AssConfigKind::Six);
    CHECK(cm_condition(config, primary_components(I)).satisfied);
    PrimeFiltration pf = build_codim2_clean(I);
    CHECK(classify_filtration(pf).clean);
  }
  SUBCASE("mixed heights are rejected") {
    CHECK_THROWS_AS(build_codim2_clean(parse_ideal("(x^2, x*y)", amb)), std::invalid_argument);
  }
}

TEST_CASE("generic_clean_search") {
  Ambient amb = Ambient::xyzw();

  SUBCASE("finite length to the unit ideal") {
    MonomialIdeal base = parse_ideal("(x^2,y,z,w)", amb);
    PrimeFiltration pf = generic_clean_search(base, MonomialIdeal::unit(amb));
    REQUIRE(pf.steps.size() == 2);
    CHECK(pf.steps[0].u == parse_monomial("x", amb));
    CHECK(pf.steps[1].u.is_unit());
    for (const FiltrationStep& s : pf.steps) CHECK(s.prime == VarSet::all(4));
    CHECK(verify_prime_filtration(pf).ok);
  }
  SUBCASE("dimension-1 interval uses height-3 primes") {
    MonomialIdeal I = parse_ideal("(z^3, x^3*z, x^3*y, y^3*w^3)", amb);
    DimensionFiltration df = dimension_filtration(I);
    PrimeFiltration pf = generic_clean_search(df.level(0), df.level(1),
                                              primes_of_height(4, 3));
    CHECK(!pf.steps.empty());
    for (const FiltrationStep& s : pf.steps) CHECK(height(s.prime) == 3);
    // steps land exactly on the target
    MonomialIdeal f = df.level(0);
    for (const FiltrationStep& s : pf.steps) {
      CHECK(colon(f, s.u) == MonomialIdeal::from_prime(amb, s.prime));
      f = sum(f, s.u);
    }
    CHECK(f == df.level(1));
  }
  SUBCASE("empty interval") {
    MonomialIdeal I = parse_ideal("(x,y)", amb);
    CHECK(generic_clean_search(I, I).steps.empty());
  }
  SUBCASE("an impossible prime restriction exhausts") {
    CHECK_THROWS_AS(generic_clean_search(parse_ideal("(x)", amb), parse_ideal("(x,y)", amb),
                                         std::vector<VarSet>{VarSet::of({2, 3})}),
                    SearchExhaustedError);
  }
  SUBCASE("base must lie inside the target") {
    CHECK_THROWS_AS(generic_clean_search(parse_ideal("(x)", amb), parse_ideal("(y)", amb)),
                    std::invalid_argument);
  }
}

TEST_CASE("build_pretty_clean") {
  Ambient amb = Ambient::xyzw();

  SUBCASE("two-layer ideal") {
    MonomialIdeal I = parse_ideal("(x^2, x*y)", amb);
    PrimeFiltration pf = build_pretty_clean(I);
    FiltrationClass cls = classify_filtration(pf);
    CHECK(cls.pretty_clean);
    REQUIRE(pf.steps.size() == 2);
    CHECK(pf.steps[0].prime == VarSet::of({0, 1}));  // lifted height-2 layer
    CHECK(pf.steps[1].prime == VarSet::of({0}));     // principal layer for u = x
  }
  SUBCASE("equidimensional Cohen-Macaulay ideal gives a clean filtration") {
    PrimeFiltration pf = build_pretty_clean(parse_ideal("(x^2, y^3)", amb));
    FiltrationClass cls = classify_filtration(pf);
    CHECK(cls.clean);
    CHECK(cls.pretty_clean);
  }
  SUBCASE("the worked example is not sequentially Cohen-Macaulay") {
    CHECK_THROWS_AS(build_pretty_clean(parse_ideal("intersect((x^2,y),(x,z),(z,w))", amb)),
                    NotSequentiallyCMError);
  }
  SUBCASE("heights never increase along the steps") {
    SplitMix64 rng(5150);
    int built = 0;
    for (int trial = 0; trial < 60; ++trial) {
      MonomialIdeal I = sample_mixed_ideal(rng, amb, 3, 6);
      if (!is_scm(I)) continue;
      PrimeFiltration pf = build_pretty_clean(I);
      ++built;
      for (size_t i = 1; i < pf.steps.size(); ++i)
        CHECK(height(pf.steps[i - 1].prime) >= height(pf.steps[i].prime));
    }
    CHECK(built >= 20);
  }
}

TEST_CASE("emitted steps stay within the standard box") {
  // Chains grow strictly, end at the unit ideal, and never need more steps
  // than there are standard monomials under the box bound; the step
  // monomials themselves stay under it.
  Ambient amb = Ambient::xyzw();
  SplitMix64 rng(616);
  int built = 0;
  for (int trial = 0; trial < 60 && built < 30; ++trial) {
    MonomialIdeal I = sample_mixed_ideal(rng, amb, 3, 6);
    if (!is_scm(I)) continue;
    ++built;
    PrimeFiltration pf = build_pretty_clean(I);
    Monomial box = I.lcm_of_gens() * Monomial(std::vector<Exponent>(4, 1));
    long long standard_count = 0;
    std::vector<Exponent> exps(4, 0);
    auto walk = [&](auto&& self, int var) -> void {
      if (var == 4) {
        if (!I.contains(Monomial{std::vector<Exponent>(exps)})) ++standard_count;
        return;
      }
      for (Exponent e = 0; e <= box.exponent(var); ++e) {
        exps[static_cast<size_t>(var)] = e;
        self(self, var + 1);
      }
    };
    walk(walk, 0);
    CHECK(static_cast<long long>(pf.steps.size()) <= standard_count);
    for (const FiltrationStep& s : pf.steps) CHECK(s.u.divides(box));
  }
  CHECK(built >= 20);
}

TEST_CASE("per-kind equivalences on small random batches") {
  Ambient amb = Ambient::xyzw();
  for (AssConfigKind kind : all_config_kinds()) {
    SplitMix64 rng(static_cast<uint64_t>(kind) + 1000);
    for (int trial = 0; trial < 25; ++trial) {
      MonomialIdeal I = sample_kind_ideal(rng, amb, kind, 3);
      AssConfiguration config = classify_ass_config(ass_primes(I));
      REQUIRE(config.kind == kind);
      bool cm = is_cm(I);
      bool cond = cm_condition(config, primary_components(I)).satisfied;
      bool built = false;
      try {
        built = classify_filtration(build_codim2_clean(I)).clean;
      } catch (const NotCohenMacaulayError&) {
      }
      CHECK(cm == cond);
      CHECK(cond == built);
      switch (kind) {
        case AssConfigKind::Single:
        case AssConfigKind::TwoShared:
        case AssConfigKind::Triangle:
        case AssConfigKind::Star3:
          CHECK(cm);
          break;
        case AssConfigKind::TwoDisjoint:
          CHECK(!cm);
          break;
        default:
          break;
      }
    }
  }
}
