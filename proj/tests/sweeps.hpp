#pragma once

// Exhaustive sweeps shared by the unit tests (small bounds) and the acceptance
// binary (full bounds). Each returns a list of human-readable failures.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dissect/census.hpp"
#include "dissect/exact.hpp"
#include "dissect/furl.hpp"
#include "dissect/model.hpp"

namespace sweep {

using Failures = std::vector<std::string>;

template <typename... Args>
std::string describe(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

inline std::string show(const dissect::Dissection& d) {
  std::ostringstream out;
  out << "n=" << d.n << " {";
  for (const auto c : d.diagonals) out << ' ' << c.a << '-' << c.b;
  out << " }";
  return out.str();
}

// furl_marked(unfurl(m, d), d) == m for every marked dissection of the j-gon
// (3 <= j, d * j <= max_n) whose unfurling has at least one diagonal.
inline Failures furl_after_unfurl(int max_n, std::size_t* checked = nullptr) {
  using namespace dissect;
  Failures fails;
  std::size_t count = 0;
  for (int j = 3; 2 * j <= max_n; ++j)
    for (int d = 2; d * j <= max_n; ++d)
      for (int kb = 0; kb <= j - 3; ++kb)
        for (const auto& base : enumerate_dissections(j, kb))
          for (const auto& mark : components(base)) {
            if (static_cast<int>(mark.arity()) == j) continue;  // unfurls to the empty dissection
            const MarkedDissection m{base, mark};
            ++count;
            try {
              const Dissection up = unfurl(m, d);
              const int r = static_cast<int>(mark.arity());
              if (static_cast<int>(up.k()) != d * (kb + (r == 2 ? 1 : 0)))
                fails.push_back(describe("unfurl diagonal count for ", show(base), " d=", d));
              if (!is_fixed(up, GroupElement::rotation(j)))
                fails.push_back(describe("unfurl not rotation-fixed for ", show(base), " d=", d));
              if (static_cast<int>(central_polygon(up).arity()) != r * d)
                fails.push_back(describe("unfurl central arity for ", show(base), " d=", d));
              if (furl_marked(up, d) != m) fails.push_back(describe("furl(unfurl) != id for ", show(base), " d=", d));
            } catch (const std::exception& e) {
              fails.push_back(describe(show(base), " d=", d, ": ", e.what()));
            }
          }
  if (checked) *checked = count;
  return fails;
}

// unfurl(furl_marked(phi, d), d) == phi for every centrally unbordered phi
// fixed by rotation n/d, and the brute cardinalities of G_{rd}(n,k;rho^{n/d})
// equal marked_count(n/d, k/d - [r=2], r).
inline Failures unfurl_after_furl(int max_n, std::size_t* checked = nullptr) {
  using namespace dissect;
  Failures fails;
  std::size_t count = 0;
  for (int n = 6; n <= max_n; ++n)
    for (auto d64 : divisors_of(n)) {
      const int d = static_cast<int>(d64);
      if (d < 2 || 3 * d > n) continue;
      const int j = n / d;
      for (int k = 1; k <= n - 3; ++k) {
        std::map<int, std::int64_t> by_r;
        DissectionEnumerator e(n, k);
        while (auto phi = e.next()) {
          if (!is_fixed(*phi, GroupElement::rotation(j))) continue;
          const int arity = static_cast<int>(central_polygon(*phi).arity());
          if (arity == d) continue;  // centrally bordered
          ++by_r[arity / d];
          ++count;
          try {
            if (unfurl(furl_marked(*phi, d), d) != *phi) fails.push_back(describe("unfurl(furl) != id for ", show(*phi)));
          } catch (const std::exception& ex) {
            fails.push_back(describe(show(*phi), " d=", d, ": ", ex.what()));
          }
        }
        for (int r = 2; r <= j; ++r) {
          const Integer expected = k % d == 0 ? marked_count(j, k / d - (r == 2 ? 1 : 0), r) : Integer(0);
          if (expected != by_r[r])
            fails.push_back(describe("|G_", r * d, "(", n, ",", k, ")| = ", by_r[r], " but marked count = ", expected));
        }
      }
    }
  if (checked) *checked = count;
  return fails;
}

inline dissect::Integer A(std::int64_t n, const dissect::Rational& k) { return dissect::cayley_count(n, k); }
inline dissect::Integer C(const dissect::Rational& q) { return dissect::catalan(q); }

// Catalan convolution: direct sum versus closed form.
inline Failures catalan_convolutions(int max_n, int max_m) {
  using namespace dissect;
  Failures fails;
  for (int n = 0; n <= max_n; ++n)
    for (int m = 1; m <= max_m; ++m) {
      const Integer sum = catalan_convolution(n, m, ConvolutionMethod::sum);
      const Integer closed = catalan_convolution(n, m, ConvolutionMethod::closed);
      if (sum != closed) fails.push_back(describe("catcon n=", n, " m=", m, ": ", sum, " vs ", closed));
    }
  return fails;
}

// The four dissection convolution identities.
inline Failures dissection_identities(int max_n) {
  using namespace dissect;
  Failures fails;
  for (int n = 2; n <= max_n; ++n) {
    if (A(n, n - 3) + A(n, n - 2) != C(n - 2)) fails.push_back(describe("NCT n=", n));
    for (int p = 2; p <= n; ++p) {
      Integer sum = 0;
      for (int i = 0; i <= n; ++i) sum += A(i + 1, i - 1) * A(n - i + 1, n - i + 1 - p);
      if (sum != A(n, n - p)) fails.push_back(describe("delta n=", n, " q=", p));
    }
    if (n < 3) continue;
    Integer one = 0;
    Integer two = 0;
    for (int i = 0; i <= n; ++i) {
      one += A(i + 1, i - 2) * A(n - i + 1, n - i - 2);
      two += A(i + 1, i - 2) * A(n - i + 1, n - i - 3);
    }
    if (one != C(n - 1) - 2 * C(n - 2)) fails.push_back(describe("disscon1 n=", n));
    if (Rational(two) != Rational((n - 3) * (n - 4), 2 * n) * Rational(C(n - 2)))
      fails.push_back(describe("disscon2 n=", n));
  }
  return fails;
}

// Term identities for k = n-5, even n. The axial sums use the guarded factor
// and the marked sums the phi(d)/(2dr) weight.
inline Failures k_minus_5_terms(int min_n, int max_n) {
  using namespace dissect;
  Failures fails;
  using Q = Rational;
  for (int n = min_n; n <= max_n; n += 2) {
    const int k = n - 5;
    std::vector<std::pair<Q, Q>> ids;
    ids.push_back({Q(A(n, k)) / (2 * n), Q((n - 3) * (n - 3) * (n - 4), 8 * n * (2 * n - 5)) * Q(C(n - 2))});
    ids.push_back({Q(A(n / 2 + 1, Q(k - 1, 2))) / 2, Q(n - 4, 8) * Q(C(n / 2 - 1))});
    ids.push_back({Q(A(n / 2 + 1, Q(k, 2))) / 4, Q(0)});
    Q bdd = 0;
    Q ub2 = 0;
    Q ub = 0;
    for (auto d : divisors_of(n)) {
      const Q phi(euler_totient(d));
      if (d >= 3) bdd += phi / (2 * d) * Q(A(n / d + 1, Q(k, d) - 1));
      if (d >= 2 && 3 * d <= n) ub2 += phi * (n + k - static_cast<int>(d)) / (2 * d * n) * Q(A(n / d, Q(k, d) - 1));
      if (d >= 2 && k % d == 0)
        for (std::int64_t r = 3; r <= n / d; ++r) ub += phi / (2 * d * r) * Q(marked_composition_sum(n / d, r, k / d));
    }
    ids.push_back({bdd, Q(2, 5) * Q(C(Q(n, 5) - 1))});
    ids.push_back({ub2, Q(0)});
    ids.push_back({ub, Q(0)});
    Q t_sum = 0;
    Q tr_sum = 0;
    for (int t = 0; t <= k; ++t) {
      if ((k - t) % 2 != 0) continue;
      if (t >= 1) t_sum += Q(axial_composition_sum(n / 2, t + 1, (k - t) / 2));
      tr_sum += Q(axial_composition_sum(n / 2 - 1, t + 1, (k - t) / 2));
    }
    ids.push_back({t_sum / 4, Q(n * n - 2 * n - 12, 16 * (n - 3)) * Q(C(n / 2 - 1))});
    ids.push_back({tr_sum / 4, Q(n, 16 * (n - 3)) * Q(C(n / 2 - 1))});
    static const char* names[] = {"E", "T0D", "T0", "bdd", "ub2", "ub", "T", "TR"};
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i].first != ids[i].second)
        fails.push_back(describe("n=", n, " ", names[i], ": ", to_string(ids[i].first), " vs ", to_string(ids[i].second)));
  }
  return fails;
}

}  // namespace sweep
