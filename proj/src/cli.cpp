#include "dissect/cli.hpp"

#include <algorithm>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dissect/census.hpp"
#include "dissect/furl.hpp"
#include "dissect/orbits.hpp"
#include "dissect/serialize.hpp"

namespace dissect::cli {

namespace {

// Bad flag values found after parsing; reported like parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_cell(int n, int k) {
  if (n < 3) throw UsageError("--n must be at least 3");
  if (k < 0 || k > n - 3) throw UsageError("--k must satisfy 0 <= k <= n-3");
}

GroupElement parse_element(const std::string& text, int n) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--element must look like rot:I or refl:I");
  const std::string kind = text.substr(0, colon);
  int shift = 0;
  try {
    std::size_t used = 0;
    shift = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw UsageError("--element index must be an integer");
  }
  shift = ((shift % n) + n) % n;
  if (kind == "rot") return GroupElement::rotation(shift);
  if (kind == "refl") return GroupElement::reflection(shift);
  throw UsageError("--element kind must be rot or refl");
}

struct CellLine {
  std::string text;
  bool ok = true;
};

CellLine verify_cell(int n, int k) {
  std::ostringstream line;
  line << "n=" << n << " k=" << k;
  bool ok = true;
  try {
    for (const auto& report : reconcile(n, k)) {
      line << " | " << to_string(report.group) << ":";
      for (const auto& v : report.values) {
        line << ' ';
        switch (v.method) {
          case CountMethod::burnside: line << "burnside"; break;
          case CountMethod::formula_corrected: line << "formula"; break;
          case CountMethod::canonical: line << "canonical"; break;
          case CountMethod::formula_printed: line << "printed"; break;
          case CountMethod::special_case: line << "special[" << v.note << "]"; break;
        }
        line << '=' << to_string(v.value);
        if (v.method == CountMethod::formula_printed && !v.agrees) line << "(erratum)";
        if (v.method == CountMethod::special_case && !v.agrees) {
          line << "(MISMATCH)";
          ok = false;
        }
      }
    }
  } catch (const ReconciliationError& e) {
    return {line.str() + " | FAIL: " + e.what(), false};
  }
  line << (ok ? " | ok" : " | FAIL");
  return {line.str(), ok};
}

int run_verify(int max_n, std::ostream& out) {
  // Rows are computed concurrently and printed in (n, k) order.
  std::vector<std::future<std::vector<CellLine>>> rows;
  for (int n = 3; n <= max_n; ++n)
    rows.push_back(std::async(std::launch::async, [n] {
      std::vector<CellLine> lines;
      for (int k = 0; k <= n - 3; ++k) lines.push_back(verify_cell(n, k));
      return lines;
    }));
  std::size_t cells = 0;
  std::size_t failures = 0;
  for (auto& row : rows)
    for (const auto& line : row.get()) {
      out << line.text << '\n';
      ++cells;
      if (!line.ok) ++failures;
    }
  if (max_n > brute_force_bound())
    out << "note: canonical counts skipped for n > " << brute_force_bound() << '\n';
  if (failures == 0) {
    out << "verified " << cells << " cells: all mandatory agreements hold\n";
    return ok;
  }
  out << "verification FAILED in " << failures << " of " << cells << " cells\n";
  return verification_failed;
}

int run_table(Group group, int max_n, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << "n";
    for (int k = 0; k <= max_n - 3; ++k) out << ',' << k;
    out << '\n';
    for (int n = 3; n <= max_n; ++n) {
      out << n;
      for (int k = 0; k <= max_n - 3; ++k) {
        out << ',';
        if (k <= n - 3) out << burnside(n, k, group).str();
      }
      out << '\n';
    }
    return ok;
  }
  Json records = Json::array();
  for (int n = 3; n <= max_n; ++n)
    for (int k = 0; k <= n - 3; ++k) {
      CountReport report{n, k, group, {{CountMethod::burnside, Rational(burnside(n, k, group)), true, ""}}};
      for (auto& r : to_json(report)) records.push_back(std::move(r));
    }
  out << dump_line(records) << '\n';
  return ok;
}

// Applies `convert` to every non-empty input line (one JSON record each).
template <typename F>
int transform_lines(std::istream& in, std::ostream& out, std::ostream& err, bool skip_invalid, F convert) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    try {
      out << dump_line(convert(Json::parse(line))) << '\n';
    } catch (const std::exception& e) {
      if (skip_invalid) continue;
      err << "dissect: line " << number << ": " << e.what() << '\n';
      return usage_error;
    }
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of polygon dissections up to rotation and reflection", "dissect"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  int max_n = 0;
  int fold = 0;
  std::string group_name;
  std::string method = "burnside";
  std::string element;
  std::string format = "csv";
  bool orbits = false;
  bool skip_invalid = false;
  const auto groups = CLI::IsMember({"cyclic", "dihedral"});

  auto* count = app.add_subcommand("count", "Number of orbits of k-dissections of the n-gon");
  count->add_option("--n", n, "Polygon size")->required();
  count->add_option("--k", k, "Number of diagonals")->required();
  count->add_option("--group", group_name, "cyclic or dihedral")->required()->check(groups);
  count->add_option("--method", method, "burnside, formula, formula-printed, canonical or special")
      ->check(CLI::IsMember({"burnside", "formula", "formula-printed", "canonical", "special"}));

  auto* fixed = app.add_subcommand("fixed", "Number of k-dissections fixed by one group element");
  fixed->add_option("--n", n, "Polygon size")->required();
  fixed->add_option("--k", k, "Number of diagonals")->required();
  fixed->add_option("--element", element, "rot:I or refl:I")->required();
  std::string fixed_method = "formula";
  fixed->add_option("--method", fixed_method, "formula or brute")->check(CLI::IsMember({"formula", "brute"}));

  auto* enumerate = app.add_subcommand("enumerate", "List k-dissections of the n-gon as JSON lines");
  enumerate->add_option("--n", n, "Polygon size")->required();
  enumerate->add_option("--k", k, "Number of diagonals")->required();
  auto* orbits_flag = enumerate->add_flag("--orbits", orbits, "Only canonical orbit representatives");
  enumerate->add_option("--group", group_name, "cyclic or dihedral")->check(groups)->needs(orbits_flag);

  auto* table = app.add_subcommand("table", "Triangular table of orbit counts for 3 <= n <= max-n");
  table->add_option("--group", group_name, "cyclic or dihedral")->required()->check(groups);
  table->add_option("--max-n", max_n, "Largest polygon size")->required();
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Reconcile every counting method for 3 <= n <= max-n");
  verify->add_option("--max-n", max_n, "Largest polygon size")->required();

  auto* furl_cmd = app.add_subcommand("furl", "Fold symmetric dissections (JSON lines on stdin)");
  furl_cmd->add_option("--d", fold, "Fold order")->required();
  furl_cmd->add_flag("--skip-invalid", skip_invalid, "Drop records that fail the preconditions");

  auto* unfurl_cmd = app.add_subcommand("unfurl", "Unfold marked dissections (JSON lines on stdin)");
  unfurl_cmd->add_option("--d", fold, "Fold order")->required();
  unfurl_cmd->add_flag("--skip-invalid", skip_invalid, "Drop records that fail the preconditions");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "dissect: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (count->parsed()) {
      require_cell(n, k);
      const Group group = parse_group(group_name);
      if (method == "burnside") {
        out << burnside(n, k, group).str() << '\n';
      } else if (method == "formula") {
        out << to_string(formula(n, k, group, FormulaMode::corrected)) << '\n';
      } else if (method == "formula-printed") {
        const Rational printed = formula(n, k, group, FormulaMode::printed);
        const Integer truth = burnside(n, k, group);
        out << to_string(printed) << '\n';
        if (printed != Rational(truth))
          err << "warning: printed closed form gives " << to_string(printed) << " but the orbit count is "
              << truth.str() << " (printed erratum)\n";
      } else if (method == "canonical") {
        out << canonical_orbit_count(n, k, group).str() << '\n';
      } else {
        const auto sc = special_case(n, k, group);
        if (!sc) throw UsageError("no special-case closed form covers this (n, k, group)");
        out << to_string(sc->value) << '\n';
      }
    } else if (fixed->parsed()) {
      require_cell(n, k);
      const GroupElement g = parse_element(element, n);
      Integer value;
      if (fixed_method == "brute") {
        value = brute_fixed(n, k, g);
      } else if (const auto rep = reduce(g, n); rep.kind == GroupElement::Kind::rotation) {
        value = rotation_fixed(n, k, rep.shift == 0 ? 1 : n / rep.shift);
      } else {
        value = axial_fixed(n, k, rep.shift == 0 ? AxisClass::vertex_axis : AxisClass::edge_axis);
      }
      out << value.str() << '\n';
    } else if (enumerate->parsed()) {
      require_cell(n, k);
      require_brute_capacity(n);
      if (orbits) {
        if (group_name.empty()) throw UsageError("--orbits requires --group");
        for (const auto& d : orbit_representatives(n, k, parse_group(group_name))) out << dump_line(to_json(d)) << '\n';
      } else {
        DissectionEnumerator e(n, k);
        while (auto d = e.next()) out << dump_line(to_json(*d)) << '\n';
      }
    } else if (table->parsed()) {
      if (max_n < 3) throw UsageError("--max-n must be at least 3");
      return run_table(parse_group(group_name), max_n, format, out);
    } else if (verify->parsed()) {
      if (max_n < 3) throw UsageError("--max-n must be at least 3");
      return run_verify(max_n, out);
    } else if (furl_cmd->parsed()) {
      return transform_lines(in, out, err, skip_invalid,
                             [&](const Json& j) { return to_json(furl_marked(dissection_from_json(j), fold)); });
    } else if (unfurl_cmd->parsed()) {
      return transform_lines(in, out, err, skip_invalid,
                             [&](const Json& j) { return to_json(unfurl(marked_from_json(j), fold)); });
    }
  } catch (const UsageError& e) {
    err << "dissect: " << e.what() << '\n';
    return usage_error;
  } catch (const CapacityError& e) {
    err << "dissect: " << e.what() << '\n';
    return capacity_exceeded;
  } catch (const ReconciliationError& e) {
    err << "dissect: " << e.what() << '\n';
    return verification_failed;
  } catch (const std::invalid_argument& e) {
    err << "dissect: " << e.what() << '\n';
    return usage_error;
  }
  return ok;
}

}  // namespace dissect::cli
