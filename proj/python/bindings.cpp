#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dissect/census.hpp"
#include "dissect/exact.hpp"
#include "dissect/furl.hpp"
#include "dissect/model.hpp"
#include "dissect/orbits.hpp"

namespace py = pybind11;
using namespace dissect;

namespace {

py::object to_py(const Integer& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_py(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(v)), to_py(denominator(v)));
}

// Accepts int or fractions.Fraction (anything with numerator/denominator).
Rational to_rational(const py::handle& obj) {
  const auto num = py::str(obj.attr("numerator")).cast<std::string>();
  const auto den = py::str(obj.attr("denominator")).cast<std::string>();
  return Rational(Integer(num), Integer(den));
}

Group group_of(const std::string& name) { return parse_group(name); }

FormulaMode mode_of(const std::string& name) {
  if (name == "corrected") return FormulaMode::corrected;
  if (name == "printed") return FormulaMode::printed;
  throw std::invalid_argument("mode must be 'corrected' or 'printed'");
}

AxisClass axis_of(const std::string& name) {
  if (name == "vertex") return AxisClass::vertex_axis;
  if (name == "edge") return AxisClass::edge_axis;
  throw std::invalid_argument("axis must be 'vertex' or 'edge'");
}

std::vector<Chord> chords_of(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Chord> out;
  for (const auto& [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> pairs_of(const std::vector<Chord>& chords) {
  std::vector<std::pair<int, int>> out;
  for (const Chord c : chords) out.emplace_back(c.a, c.b);
  return out;
}

py::list pairs_of(const std::set<Chord>& chords) {
  py::list out;
  for (const Chord c : chords) out.append(py::make_tuple(c.a, c.b));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counting of polygon dissections modulo rotations and reflections.";

  py::register_exception<CapacityError>(m, "CapacityError");
  py::register_exception<ReconciliationError>(m, "ReconciliationError");

  // -- exact
  m.def("binomial", [](py::int_ n, py::int_ k) { return to_py(binomial(Integer(py::str(n).cast<std::string>()),
                                                                        Integer(py::str(k).cast<std::string>()))); });
  m.def("catalan", [](py::object q) { return to_py(catalan(to_rational(q))); }, py::arg("q"));
  m.def("cayley_count", [](py::object n, py::object k) { return to_py(cayley_count(to_rational(n), to_rational(k))); },
        py::arg("n"), py::arg("k"));
  m.def("euler_totient", [](std::int64_t n) { return to_py(euler_totient(n)); });
  m.def("divisors_of", &divisors_of);
  m.def("compositions", &all_compositions, py::arg("total"), py::arg("parts"), py::arg("min_part"));
  m.def(
      "catalan_convolution",
      [](std::int64_t n, std::int64_t parts, const std::string& method) {
        if (method != "sum" && method != "closed") throw std::invalid_argument("method must be 'sum' or 'closed'");
        return to_py(catalan_convolution(n, parts, method == "sum" ? ConvolutionMethod::sum : ConvolutionMethod::closed));
      },
      py::arg("n"), py::arg("m"), py::arg("method") = "sum");

  // -- model
  py::class_<Dissection>(m, "Dissection")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& diagonals) {
             return make_dissection(n, chords_of(diagonals));
           }),
           py::arg("n"), py::arg("diagonals") = std::vector<std::pair<int, int>>{})
      .def_readonly("n", &Dissection::n)
      .def_property_readonly("diagonals", [](const Dissection& d) { return pairs_of(d.diagonals); })
      .def_property_readonly("k", &Dissection::k)
      .def(py::self == py::self)
      .def("__hash__", [](const Dissection& d) { return py::hash(py::make_tuple(d.n, pairs_of(d.diagonals))); })
      .def("__repr__", [](const Dissection& d) {
        std::string s = "Dissection(" + std::to_string(d.n) + ", [";
        for (std::size_t i = 0; i < d.diagonals.size(); ++i)
          s += (i ? ", (" : "(") + std::to_string(d.diagonals[i].a) + ", " + std::to_string(d.diagonals[i].b) + ")";
        return s + "])";
      });

  py::class_<GroupElement>(m, "GroupElement")
      .def_static("rotation", &GroupElement::rotation)
      .def_static("reflection", &GroupElement::reflection)
      .def_property_readonly("kind",
                             [](const GroupElement& g) {
                               return g.kind == GroupElement::Kind::rotation ? "rotation" : "reflection";
                             })
      .def_readonly("shift", &GroupElement::shift)
      .def(py::self == py::self)
      .def("__repr__", [](const GroupElement& g) {
        return std::string(g.kind == GroupElement::Kind::rotation ? "rot:" : "refl:") + std::to_string(g.shift);
      });

  m.def("crosses", [](std::pair<int, int> e1, std::pair<int, int> e2) {
    return crosses(Chord(e1.first, e1.second), Chord(e2.first, e2.second));
  });
  m.def(
      "validate",
      [](int n, const std::vector<std::pair<int, int>>& diagonals) -> std::optional<std::string> {
        auto chords = chords_of(diagonals);
        std::sort(chords.begin(), chords.end());
        if (auto v = validate(Dissection{n, chords})) return v->message;
        return std::nullopt;
      },
      py::arg("n"), py::arg("diagonals"));
  m.def("enumerate_dissections", &enumerate_dissections, py::arg("n"), py::arg("k"));
  m.def("apply", &apply);
  m.def("is_fixed", &is_fixed);
  m.def("reduce", &reduce);
  m.def("components", [](const Dissection& d) {
    std::vector<std::vector<int>> out;
    for (const auto& c : components(d)) out.push_back(c.vertices);
    return out;
  });
  m.def("central_polygon", [](const Dissection& d) { return central_polygon(d).vertices; });
  m.def("is_outer", [](int v, std::pair<int, int> e, int n) { return is_outer(v, Chord(e.first, e.second), n); });
  m.def("canonical_form", [](const Dissection& d, const std::string& group) { return canonical_form(d, group_of(group)); });

  // -- census
  m.def(
      "axial_factor",
      [](std::int64_t ns, std::int64_t ks, const std::string& mode) { return to_py(axial_factor(ns, ks, mode_of(mode))); },
      py::arg("n_s"), py::arg("k_s"), py::arg("mode") = "corrected");
  m.def(
      "axial_fixed",
      [](int n, int k, const std::string& axis, const std::string& mode) {
        return to_py(axial_fixed(n, k, axis_of(axis), mode_of(mode)));
      },
      py::arg("n"), py::arg("k"), py::arg("axis") = "vertex", py::arg("mode") = "corrected");
  m.def("marked_count", [](std::int64_t j, std::int64_t k, std::int64_t r) { return to_py(marked_count(j, k, r)); });
  m.def("bordered_fixed", [](int n, int k, int d) { return to_py(bordered_fixed(n, k, d)); });
  m.def("unbordered_fixed", [](int n, int k, int d) { return to_py(unbordered_fixed(n, k, d)); });
  m.def("rotation_fixed", [](int n, int k, int d) { return to_py(rotation_fixed(n, k, d)); });
  m.def("brute_fixed", [](int n, int k, const GroupElement& g) { return to_py(brute_fixed(n, k, g)); });

  // -- furl
  m.def("expand_orbit", [](std::pair<int, int> ab, int d, int n) { return pairs_of(expand_orbit(ab.first, ab.second, d, n)); });
  m.def("furl", &furl, py::arg("dissection"), py::arg("d"));
  m.def(
      "furl_marked",
      [](const Dissection& d, int fold) {
        auto marked = furl_marked(d, fold);
        return py::make_tuple(marked.base, marked.mark.vertices);
      },
      py::arg("dissection"), py::arg("d"));
  m.def(
      "unfurl",
      [](const Dissection& base, std::vector<int> mark, int fold) {
        std::sort(mark.begin(), mark.end());
        return unfurl(MarkedDissection{base, Component{std::move(mark)}}, fold);
      },
      py::arg("base"), py::arg("mark"), py::arg("d"));

  // -- orbits
  m.def("cyclic_burnside", [](int n, int k) { return to_py(cyclic_burnside(n, k)); });
  m.def("dihedral_burnside", [](int n, int k) { return to_py(dihedral_burnside(n, k)); });
  m.def(
      "cyclic_formula", [](int n, int k, const std::string& mode) { return to_py(cyclic_formula(n, k, mode_of(mode))); },
      py::arg("n"), py::arg("k"), py::arg("mode") = "corrected");
  m.def(
      "dihedral_formula",
      [](int n, int k, const std::string& mode) { return to_py(dihedral_formula(n, k, mode_of(mode))); }, py::arg("n"),
      py::arg("k"), py::arg("mode") = "corrected");
  m.def("special_case", [](int n, int k, const std::string& group) -> py::object {
    const auto sc = special_case(n, k, group_of(group));
    if (!sc) return py::none();
    return py::make_tuple(sc->theorem, to_py(sc->value));
  });
  m.def("canonical_orbit_count",
        [](int n, int k, const std::string& group) { return to_py(canonical_orbit_count(n, k, group_of(group))); });
  m.def("reconcile", [](int n, int k) {
    py::list out;
    for (const auto& report : reconcile(n, k))
      for (const auto& v : report.values) {
        py::dict rec;
        rec["n"] = report.n;
        rec["k"] = report.k;
        rec["group"] = std::string(to_string(report.group));
        rec["method"] = std::string(to_string(v.method));
        rec["value"] = to_py(v.value);
        rec["agrees"] = v.agrees;
        rec["note"] = v.note;
        out.append(rec);
      }
    return out;
  });
}
