#include <doctest.h>

#include "dissect/orbits.hpp"
#include "oracles.hpp"
#include "sweeps.hpp"

using namespace dissect;

namespace {

Rational q(long long p, long long d = 1) { return Rational(p, d); }

std::string first_or_empty(const sweep::Failures& f) { return f.empty() ? "" : f.front(); }

}  // namespace

TEST_CASE("burnside counts") {
  CHECK(cyclic_burnside(6, 3) == 4);
  CHECK(cyclic_burnside(6, 2) == 4);
  CHECK(cyclic_burnside(6, 1) == 2);
  CHECK(dihedral_burnside(6, 3) == 3);
  CHECK(dihedral_burnside(6, 2) == 3);
  CHECK(dihedral_burnside(5, 2) == 1);
  CHECK(burnside(4, 1, Group::dihedral) == 1);
  CHECK(burnside(4, 1, Group::cyclic) == 1);
  CHECK_THROWS_AS(burnside(6, 4, Group::cyclic), std::invalid_argument);
  CHECK_THROWS_AS(burnside(2, 0, Group::cyclic), std::invalid_argument);
}

TEST_CASE("closed forms: printed versus corrected") {
  CHECK(cyclic_formula(6, 3, FormulaMode::printed) == 3);
  CHECK(cyclic_formula(6, 3, FormulaMode::corrected) == 4);
  CHECK(cyclic_formula(6, 2, FormulaMode::printed) == 4);
  CHECK(dihedral_formula(6, 3, FormulaMode::corrected) == 3);
  CHECK(dihedral_formula(6, 3, FormulaMode::printed) == 4);
  CHECK(dihedral_formula(5, 2, FormulaMode::corrected) == 1);
  CHECK(dihedral_formula(5, 2, FormulaMode::printed) == q(1, 2));
  CHECK(cyclic_formula(8, 2, FormulaMode::printed) == q(33, 2));
  CHECK(cyclic_formula(8, 2, FormulaMode::corrected) == 16);
  for (int n = 3; n <= 9; ++n) {
    CHECK(cyclic_formula(n, 0, FormulaMode::printed) == 1);
    CHECK(dihedral_formula(n, 0, FormulaMode::corrected) == 1);
  }
}

TEST_CASE("formula terms carry labels and sum to the formula") {
  const auto terms = cyclic_formula_terms(6, 3, FormulaMode::corrected);
  Rational total = 0;
  bool saw_bordered_two = false;
  for (const auto& t : terms) {
    total += t.value;
    if (t.label == "bordered d=2") saw_bordered_two = t.value == q(1);
  }
  CHECK(saw_bordered_two);
  CHECK(total == 4);
}

TEST_CASE("three-way agreement for n <= 10") {
  for (int n = 3; n <= 10; ++n)
    for (int k = 0; k <= n - 3; ++k) {
      const auto cyc = oracle::orbit_count(n, k, false);
      const auto dih = oracle::orbit_count(n, k, true);
      CHECK(cyclic_burnside(n, k) == cyc);
      CHECK(dihedral_burnside(n, k) == dih);
      CHECK(canonical_orbit_count(n, k, Group::cyclic) == cyc);
      CHECK(canonical_orbit_count(n, k, Group::dihedral) == dih);
      CHECK(cyclic_formula(n, k, FormulaMode::corrected) == Rational(cyc));
      CHECK(dihedral_formula(n, k, FormulaMode::corrected) == Rational(dih));
    }
}

TEST_CASE("corrected formulas equal burnside for n <= 40") {
  for (int n = 3; n <= 40; ++n)
    for (int k = 0; k <= n - 3; ++k)
      for (const Group g : {Group::cyclic, Group::dihedral}) {
        const Integer b = burnside(n, k, g);
        CHECK(formula(n, k, g, FormulaMode::corrected) == Rational(b));
        if (g == Group::dihedral) {
          const Integer c = burnside(n, k, Group::cyclic);
          CHECK(b <= c);
          CHECK(c <= 2 * b);
        }
      }
}

TEST_CASE("special cases") {
  CHECK(special_case(6, 3, Group::dihedral)->value == 3);
  CHECK(special_case(6, 3, Group::dihedral)->theorem == "k=n-3");
  CHECK(special_case(6, 2, Group::cyclic)->value == 4);
  CHECK(special_case(8, 4, Group::cyclic)->value == 43);
  CHECK(special_case(8, 4, Group::cyclic)->theorem == "k=n-4");
  CHECK_FALSE(special_case(12, 3, Group::cyclic).has_value());
  CHECK_FALSE(special_case(12, 6, Group::dihedral).has_value());
  CHECK(special_case(12, 6, Group::cyclic)->theorem == "k=n-6");
  // (5, 2) is covered by k=n-3 and k=2; both are reported.
  CHECK(special_cases(5, 2, Group::cyclic).size() == 2);
}

TEST_CASE("odd k=n-4 dihedral closed form carries the published value separately") {
  const auto sc = special_case(7, 3, Group::dihedral);
  REQUIRE(sc.has_value());
  CHECK(sc->value == 7);
  REQUIRE(sc->printed.has_value());
  CHECK(*sc->printed == q(13, 2));
  CHECK_FALSE(special_case(8, 4, Group::dihedral)->printed.has_value());
}

TEST_CASE("special cases equal burnside") {
  for (int n = 3; n <= 24; ++n)
    for (int k = 0; k <= n - 3; ++k)
      for (const Group g : {Group::cyclic, Group::dihedral})
        for (const auto& sc : special_cases(n, k, g)) {
          INFO("n=" << n << " k=" << k << " " << sc.theorem);
          CHECK(sc.value == Rational(burnside(n, k, g)));
        }
}

TEST_CASE("k = 2 is a quasi-polynomial in n") {
  for (int n = 5; n <= 40; ++n) {
    const Rational c = n % 2 == 0 ? q(n * (n - 2) * (n - 4), 12) : q((n + 1) * (n - 3) * (n - 4), 12);
    const Rational d = n % 2 == 0 ? q((n - 4) * (n - 2) * (n + 3), 24) : q((n - 3) * (n * n - 13), 24);
    CHECK(Rational(cyclic_burnside(n, 2)) == c);
    CHECK(Rational(dihedral_burnside(n, 2)) == d);
  }
}

TEST_CASE("k = n-5 term identities for even n") {
  const auto f = sweep::k_minus_5_terms(8, 24);
  CHECK_MESSAGE(f.empty(), first_or_empty(f));
}

TEST_CASE("canonical counts") {
  CHECK(canonical_orbit_count(6, 3, Group::dihedral) == 3);
  CHECK(canonical_orbit_count(6, 3, Group::cyclic) == 4);
  CHECK(canonical_orbit_count(4, 1, Group::dihedral) == 1);
  const auto reps = orbit_representatives(6, 3, Group::dihedral);
  CHECK(reps.size() == 3);
  CHECK(std::is_sorted(reps.begin(), reps.end()));
  for (const auto& r : reps) CHECK(canonical_form(r, Group::dihedral) == r);
  CHECK_THROWS_AS(canonical_orbit_count(40, 2, Group::cyclic), CapacityError);
}

TEST_CASE("reconcile") {
  SUBCASE("hexagon triangulations flag the printed cyclic form") {
    const auto reports = reconcile(6, 3);
    REQUIRE(reports.size() == 2);
    const auto& cyc = reports[0];
    CHECK(cyc.group == Group::cyclic);
    CHECK(cyc.find(CountMethod::burnside)->value == 4);
    CHECK(cyc.find(CountMethod::canonical)->value == 4);
    CHECK(cyc.find(CountMethod::formula_corrected)->value == 4);
    const auto* printed = cyc.find(CountMethod::formula_printed);
    CHECK(printed->value == 3);
    CHECK_FALSE(printed->agrees);
    CHECK(printed->note.find("bordered d=2") != std::string::npos);
    CHECK(cyc.consistent());
    CHECK(reports[1].find(CountMethod::formula_printed)->value == 4);
  }
  SUBCASE("k = 1 gives n/2 - 1 for every mandatory method") {
    for (const auto& report : reconcile(6, 1)) {
      CHECK(report.consistent());
      for (const auto& v : report.values) {
        if (v.method == CountMethod::formula_printed) continue;
        CHECK(v.value == 2);
        CHECK(v.agrees);
      }
    }
    // The printed cyclic form omits the central-diameter term (1/2) A(4, 0).
    const auto* printed = reconcile(6, 1)[0].find(CountMethod::formula_printed);
    CHECK(printed->value == Rational(3, 2));
    CHECK_FALSE(printed->agrees);
  }
  SUBCASE("heptagon triangulations") {
    for (const auto& report : reconcile(7, 4)) {
      CHECK(report.consistent());
      const auto* sc = report.find(CountMethod::special_case);
      REQUIRE(sc != nullptr);
      CHECK(sc->note == "k=n-3");
      CHECK(sc->value == report.find(CountMethod::burnside)->value);
    }
  }
  SUBCASE("the odd almost-triangulation erratum is noted") {
    const auto dih = reconcile(7, 3)[1];
    const auto* sc = dih.find(CountMethod::special_case);
    CHECK(sc->agrees);
    CHECK(sc->note.find("13/2") != std::string::npos);
  }
  SUBCASE("no canonical count beyond the brute-force bound") {
    const auto reports = reconcile(14, 2);
    CHECK(reports[0].find(CountMethod::canonical) == nullptr);
    CHECK(reports[0].consistent());
  }
}

TEST_CASE("group names") {
  CHECK(parse_group("cyclic") == Group::cyclic);
  CHECK(parse_group("dihedral") == Group::dihedral);
  CHECK_THROWS_AS(parse_group("affine"), std::invalid_argument);
  CHECK(to_string(CountMethod::formula_printed) == "formula_printed");
}
