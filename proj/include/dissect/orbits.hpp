#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dissect/census.hpp"
#include "dissect/exact.hpp"
#include "dissect/model.hpp"

namespace dissect {

enum class CountMethod { burnside, formula_printed, formula_corrected, canonical, special_case };

std::string_view to_string(CountMethod m);
std::string_view to_string(Group g);
Group parse_group(std::string_view s);

// Raised when methods that must agree (burnside, canonical, corrected formula)
// produce different values, or a cardinality is not an integer.
class ReconciliationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Orbit counts by averaging fixed-point counts over conjugacy classes.
Integer cyclic_burnside(int n, int k);
Integer dihedral_burnside(int n, int k);
Integer burnside(int n, int k, Group group);

struct FormulaTerm {
  std::string label;
  Rational value;
};

// Term-by-term evaluation of the closed forms. Printed mode transcribes the
// published displays literally, errors included; corrected mode restores the
// d = 2 centrally bordered term (cyclic), guards the axial factor, sums the
// odd-n axial compositions over (n-1)/2 with t >= 0 and weights the r >= 3
// marked sums by phi(d)/(d r). For k = 0 both modes give the single term 1.
std::vector<FormulaTerm> cyclic_formula_terms(int n, int k, FormulaMode mode);
std::vector<FormulaTerm> dihedral_formula_terms(int n, int k, FormulaMode mode);

Rational cyclic_formula(int n, int k, FormulaMode mode);
Rational dihedral_formula(int n, int k, FormulaMode mode);
Rational formula(int n, int k, Group group, FormulaMode mode);

struct SpecialCase {
  std::string theorem;  // "k=n-3", "k=n-4", "k=n-5", "k=n-6", "k=2", "k=1"
  Rational value;
  // Set only where the published display differs from the orbit count:
  // the odd-n dihedral k=n-4 case, whose C_{(n-3)/2} coefficient is 1/2.
  std::optional<Rational> printed{};
};

// Every closed form that covers (n, k, group), in the order listed above.
std::vector<SpecialCase> special_cases(int n, int k, Group group);
std::optional<SpecialCase> special_case(int n, int k, Group group);

// Independent count: number of distinct canonical forms. Brute force only.
Integer canonical_orbit_count(int n, int k, Group group);

// Canonical representatives in increasing order.
std::vector<Dissection> orbit_representatives(int n, int k, Group group);

struct MethodValue {
  CountMethod method;
  Rational value;
  bool agrees = true;
  std::string note;
};

struct CountReport {
  int n = 0;
  int k = 0;
  Group group = Group::cyclic;
  std::vector<MethodValue> values;

  const MethodValue* find(CountMethod m) const;
  // True when every method other than formula_printed agrees.
  bool consistent() const;
};

// Evaluates every applicable method for both groups (cyclic first). The
// canonical count is included when n is within the brute-force bound.
// Throws ReconciliationError when burnside, canonical and the corrected
// formula disagree.
std::vector<CountReport> reconcile(int n, int k);

}  // namespace dissect
