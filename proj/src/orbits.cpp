#include "dissect/orbits.hpp"

#include <map>
#include <set>

namespace dissect {

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::burnside: return "burnside";
    case CountMethod::formula_printed: return "formula_printed";
    case CountMethod::formula_corrected: return "formula_corrected";
    case CountMethod::canonical: return "canonical";
    case CountMethod::special_case: return "special_case";
  }
  return "unknown";
}

std::string_view to_string(Group g) { return g == Group::cyclic ? "cyclic" : "dihedral"; }

Group parse_group(std::string_view s) {
  if (s == "cyclic") return Group::cyclic;
  if (s == "dihedral") return Group::dihedral;
  throw std::invalid_argument("unknown group '" + std::string(s) + "' (expected cyclic or dihedral)");
}

namespace {

Rational A(const Rational& n, const Rational& k) { return Rational(cayley_count(n, k)); }
Rational C(const Rational& q) { return Rational(catalan(q)); }
Rational phi(int d) { return Rational(euler_totient(d)); }
Rational q(std::int64_t p, std::int64_t r = 1) { return Rational(p, r); }

void require_range(int n, int k) {
  if (n < 3 || k < 0 || k > n - 3)
    throw std::invalid_argument("need n >= 3 and 0 <= k <= n-3 (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                ")");
}

Integer exact_quotient(const Integer& sum, int divisor, const char* what) {
  if (sum % divisor != 0)
    throw ReconciliationError(std::string(what) + ": fixed-point sum " + sum.str() + " is not divisible by " +
                              std::to_string(divisor));
  return sum / divisor;
}

Integer rotation_sum(int n, int k) {
  Integer sum = 0;
  for (const auto d : divisors_of(n)) sum += euler_totient(d) * rotation_fixed(n, k, static_cast<int>(d));
  return sum;
}

// Terms shared by both groups; `scale` is 1 for the cyclic and 1/2 for the
// dihedral display.
void rotation_terms(int n, int k, FormulaMode mode, const Rational& scale, std::vector<FormulaTerm>& out) {
  Rational bordered = 0;
  for (const auto d : divisors_of(n))
    if (d >= 3) bordered += phi(static_cast<int>(d)) / d * A(q(n, d) + 1, q(k, d) - 1);
  out.push_back({"bordered d>=3", scale * bordered});

  Rational unbordered2 = 0;
  for (int d = 2; 3 * d <= n; ++d) unbordered2 += phi(d) * (n + k - d) / q(d * n) * A(q(n, d), q(k, d) - 1);
  out.push_back({"unbordered r=2", scale * unbordered2});

  Rational unbordered3 = 0;
  for (const auto d : divisors_of(n)) {
    if (d < 2 || k % d != 0) continue;
    const auto j = n / d;
    for (std::int64_t r = 3; r <= j; ++r) {
      const Rational weight = mode == FormulaMode::printed ? phi(static_cast<int>(d)) / r
                                                           : phi(static_cast<int>(d)) / (d * r);
      unbordered3 += weight * Rational(marked_composition_sum(j, r, k / d));
    }
  }
  out.push_back({"unbordered r>=3", scale * unbordered3});
}

// Sum over t in [t_from, k] with k - t even of the axial composition sums over
// `total`; a fractional total has no compositions.
Rational axial_sum(const Rational& total, int t_from, int k, FormulaMode mode) {
  if (!is_integral(total)) return 0;
  const auto tot = static_cast<std::int64_t>(numerator(total));
  Integer sum = 0;
  for (int t = t_from; t <= k; ++t)
    if ((k - t) % 2 == 0) sum += axial_composition_sum(tot, t + 1, (k - t) / 2, mode);
  return Rational(sum);
}

Rational total(const std::vector<FormulaTerm>& terms) {
  Rational sum = 0;
  for (const auto& t : terms) sum += t.value;
  return sum;
}

}  // namespace

Integer cyclic_burnside(int n, int k) {
  require_range(n, k);
  return exact_quotient(rotation_sum(n, k), n, "cyclic_burnside");
}

Integer dihedral_burnside(int n, int k) {
  require_range(n, k);
  Integer sum = rotation_sum(n, k);
  if (n % 2 == 0)
    sum += (n / 2) * (axial_fixed(n, k, AxisClass::vertex_axis) + axial_fixed(n, k, AxisClass::edge_axis));
  else
    sum += n * axial_fixed(n, k, AxisClass::vertex_axis);
  return exact_quotient(sum, 2 * n, "dihedral_burnside");
}

Integer burnside(int n, int k, Group group) {
  return group == Group::cyclic ? cyclic_burnside(n, k) : dihedral_burnside(n, k);
}

std::vector<FormulaTerm> cyclic_formula_terms(int n, int k, FormulaMode mode) {
  require_range(n, k);
  if (k == 0) return {{"empty dissection", 1}};
  std::vector<FormulaTerm> terms;
  terms.push_back({"identity", A(n, k) / n});
  if (mode == FormulaMode::corrected && n % 2 == 0)
    terms.push_back({"bordered d=2", q(1, 2) * A(n / 2 + 1, q(k - 1, 2))});
  rotation_terms(n, k, mode, 1, terms);
  return terms;
}

std::vector<FormulaTerm> dihedral_formula_terms(int n, int k, FormulaMode mode) {
  require_range(n, k);
  if (k == 0) return {{"empty dissection", 1}};
  std::vector<FormulaTerm> terms;
  terms.push_back({"identity", A(n, k) / (2 * n)});
  if (n % 2 == 0) {
    terms.push_back({"axis diameter", q(1, 2) * A(n / 2 + 1, q(k - 1, 2))});
    terms.push_back({"axis no perpendicular", q(1, 4) * A(n / 2 + 1, q(k, 2))});
    rotation_terms(n, k, mode, q(1, 2), terms);
    terms.push_back({"vertex axis t>=1", q(1, 4) * axial_sum(q(n, 2), 1, k, mode)});
    terms.push_back({"edge axis", q(1, 4) * axial_sum(q(n, 2) - 1, 0, k, mode)});
  } else {
    rotation_terms(n, k, mode, q(1, 2), terms);
    if (mode == FormulaMode::printed)
      terms.push_back({"vertex axis", q(1, 2) * axial_sum(q(n, 2), 1, k, mode)});
    else
      terms.push_back({"vertex axis", q(1, 2) * axial_sum(q(n - 1, 2), 0, k, mode)});
  }
  return terms;
}

Rational cyclic_formula(int n, int k, FormulaMode mode) { return total(cyclic_formula_terms(n, k, mode)); }

Rational dihedral_formula(int n, int k, FormulaMode mode) { return total(dihedral_formula_terms(n, k, mode)); }

Rational formula(int n, int k, Group group, FormulaMode mode) {
  return group == Group::cyclic ? cyclic_formula(n, k, mode) : dihedral_formula(n, k, mode);
}

std::vector<SpecialCase> special_cases(int n, int k, Group group) {
  require_range(n, k);
  const bool even = n % 2 == 0;
  const bool cyclic = group == Group::cyclic;
  std::vector<SpecialCase> out;

  if (k == n - 3) {
    Rational v = cyclic ? C(n - 2) / n + q(1, 2) * C(q(n, 2) - 1) + q(2, 3) * C(q(n, 3) - 1)
                        : C(n - 2) / (2 * n) + q(1, 3) * C(q(n, 3) - 1) +
                              (even ? q(3, 4) * C(q(n, 2) - 1) : q(1, 2) * C(q(n - 3, 2)));
    out.push_back({"k=n-3", v});
  }
  if (k == n - 4 && n >= 4) {
    const Rational lead = (q(1, 4) - q(3, 4 * n)) * C(n - 2);
    if (cyclic)
      out.push_back({"k=n-4", q(n - 3, 2 * n) * C(n - 2) + q(1, 2) * C(q(n, 4) - 1) + q(1, 4) * C(q(n, 2) - 1)});
    else if (even)
      out.push_back({"k=n-4", lead + q(3, 8) * C(q(n, 2) - 1) + (1 - q(3, n)) * C(q(n, 2) - 2) +
                                  q(1, 4) * C(q(n, 4) - 1)});
    else
      out.push_back({"k=n-4", lead + q(1, 2) * C(q(n - 3, 2)), lead + q(1, 4) * C(q(n - 3, 2))});
  }
  if (k == n - 5 && n >= 5) {
    const Rational lead = q((n - 3) * (n - 3) * (n - 4), n * (2 * n - 5)) * C(n - 2);
    Rational v;
    if (cyclic)
      v = lead / 4 + q(n - 4, 8) * C(q(n, 2) - 1) + q(4, 5) * C(q(n, 5) - 1);
    else if (even)
      v = lead / 8 + q(2, 5) * C(q(n, 5) - 1) + q(3 * (n - 4) * (n - 1), 16 * (n - 3)) * C(q(n, 2) - 1);
    else
      v = lead / 8 + q(2, 5) * C(q(n, 5) - 1) + q(n * n - 2 * n - 11, 8 * (n - 4)) * C(q(n - 3, 2));
    out.push_back({"k=n-5", v});
  }
  if (k == n - 6 && n >= 6 && cyclic) {
    Rational v = q((n - 3) * (n - 4) * (n - 4) * (n - 5), 24 * n * (2 * n - 5)) * C(n - 2) +
                 q((n - 4) * (n - 4), 4 * n) * C(q(n, 2) - 2) + q(n - 3, 9) * C(q(n, 3) - 1) +
                 q(1, 3) * C(q(n, 6) - 1);
    out.push_back({"k=n-6", v});
  }
  if (k == 2) {
    Rational v;
    if (cyclic)
      v = even ? q(n * (n - 2) * (n - 4), 12) : q((n + 1) * (n - 3) * (n - 4), 12);
    else
      v = even ? q((n - 4) * (n - 2) * (n + 3), 24) : q((n - 3) * (n * n - 13), 24);
    out.push_back({"k=2", v});
  }
  if (k == 1) out.push_back({"k=1", even ? q(n, 2) - 1 : q(n - 3, 2)});
  return out;
}

std::optional<SpecialCase> special_case(int n, int k, Group group) {
  auto all = special_cases(n, k, group);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<Dissection> orbit_representatives(int n, int k, Group group) {
  require_range(n, k);
  require_brute_capacity(n);
  std::set<Dissection> forms;
  DissectionEnumerator e(n, k);
  while (auto d = e.next()) forms.insert(canonical_form(*d, group));
  return {forms.begin(), forms.end()};
}

Integer canonical_orbit_count(int n, int k, Group group) {
  return static_cast<std::int64_t>(orbit_representatives(n, k, group).size());
}

// -- reconciliation ----------------------------------------------------------

const MethodValue* CountReport::find(CountMethod m) const {
  for (const auto& v : values)
    if (v.method == m) return &v;
  return nullptr;
}

bool CountReport::consistent() const {
  for (const auto& v : values)
    if (v.method != CountMethod::formula_printed && !v.agrees) return false;
  return true;
}

namespace {

std::string term_difference(int n, int k, Group group) {
  const auto printed = group == Group::cyclic ? cyclic_formula_terms(n, k, FormulaMode::printed)
                                              : dihedral_formula_terms(n, k, FormulaMode::printed);
  const auto corrected = group == Group::cyclic ? cyclic_formula_terms(n, k, FormulaMode::corrected)
                                                : dihedral_formula_terms(n, k, FormulaMode::corrected);
  std::map<std::string, std::pair<Rational, Rational>> by_label;
  for (const auto& t : printed) by_label[t.label].first = t.value;
  for (const auto& t : corrected) by_label[t.label].second = t.value;
  std::string note;
  for (const auto& [label, values] : by_label) {
    if (values.first == values.second) continue;
    if (!note.empty()) note += "; ";
    note += label + ": printed " + to_string(values.first) + ", corrected " + to_string(values.second);
  }
  return note;
}

CountReport reconcile_group(int n, int k, Group group) {
  CountReport report{n, k, group, {}};
  const Rational truth(burnside(n, k, group));
  report.values.push_back({CountMethod::burnside, truth, true, ""});

  const Rational corrected = formula(n, k, group, FormulaMode::corrected);
  report.values.push_back({CountMethod::formula_corrected, corrected, corrected == truth, ""});

  if (n <= brute_force_bound()) {
    const Rational canonical(canonical_orbit_count(n, k, group));
    report.values.push_back({CountMethod::canonical, canonical, canonical == truth, ""});
  }

  const Rational printed = formula(n, k, group, FormulaMode::printed);
  std::string printed_note;
  if (printed != truth) printed_note = "printed erratum: " + term_difference(n, k, group);
  report.values.push_back({CountMethod::formula_printed, printed, printed == truth, printed_note});

  for (const auto& sc : special_cases(n, k, group))
    report.values.push_back({CountMethod::special_case, sc.value, sc.value == truth,
                             sc.printed && *sc.printed != sc.value
                                 ? sc.theorem + " (printed erratum: " + to_string(*sc.printed) + ")"
                                 : sc.theorem});

  for (const auto& v : report.values) {
    const bool mandatory = v.method == CountMethod::formula_corrected || v.method == CountMethod::canonical;
    if (mandatory && !v.agrees)
      throw ReconciliationError(std::string(to_string(group)) + " n=" + std::to_string(n) + " k=" +
                                std::to_string(k) + ": " + std::string(to_string(v.method)) + " = " +
                                to_string(v.value) + " but burnside = " + to_string(truth));
  }
  return report;
}

}  // namespace

std::vector<CountReport> reconcile(int n, int k) {
  return {reconcile_group(n, k, Group::cyclic), reconcile_group(n, k, Group::dihedral)};
}

}  // namespace dissect
