#include "dissect/furl.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dissect {

namespace {

std::vector<Chord> sides(int n) {
  std::vector<Chord> out;
  for (int v = 0; v + 1 < n; ++v) out.emplace_back(v, v + 1);
  if (n >= 3) out.emplace_back(0, n - 1);
  return out;
}

void require_fold(int n, int fold) {
  if (fold < 2 || n % fold != 0 || n / fold < 2)
    throw std::invalid_argument("fold order d=" + std::to_string(fold) + " must divide n=" + std::to_string(n) +
                                " with d >= 2 and n/d >= 2");
}

}  // namespace

FurlContext FurlContext::make(int n, int d, std::vector<int> center) {
  require_fold(n, d);
  const int j = n / d;
  if (center.size() < 2 || !std::is_sorted(center.begin(), center.end()) ||
      std::adjacent_find(center.begin(), center.end()) != center.end() || center.front() < 0 || center.back() >= j)
    throw std::invalid_argument("center must be an increasing list of at least 2 vertices in 0..j-1");
  return FurlContext{n, d, j, std::move(center)};
}

std::set<Chord> expand_orbit(int a, int b, int d, int n) {
  const int j = n / d;
  std::set<Chord> out;
  for (int i = 0; i < d; ++i) out.emplace((a + i * j) % n, (b + i * j) % n);
  return out;
}

// The printed cases overlap when r >= 3 (ab = v_0 v_1 also has b < v_{r-1});
// they are tried in order, so the last case only applies for r = 2.
std::set<Chord> edge_preimage(Chord ab, const FurlContext& ctx) {
  const int v0 = ctx.center.front();
  const int v1 = ctx.center[1];
  const int vlast = ctx.center.back();
  if (ab.a > v0 || ab.b < vlast) return expand_orbit(ab.a, ab.b, ctx.d, ctx.n);
  auto wrapped = expand_orbit(ab.b, ab.a + ctx.j, ctx.d, ctx.n);
  if (!(ab.a == v0 && ab.b == v1)) return wrapped;
  auto direct = expand_orbit(ab.a, ab.b, ctx.d, ctx.n);
  direct.insert(wrapped.begin(), wrapped.end());
  return direct;
}

Dissection furl(const Dissection& d, int fold) { return furl_marked(d, fold).base; }

MarkedDissection furl_marked(const Dissection& d, int fold) {
  require_fold(d.n, fold);
  if (auto v = validate(d)) throw std::invalid_argument("furl: invalid dissection: " + v->message);
  if (d.k() == 0) throw std::invalid_argument("furl: the dissection needs at least one diagonal");
  const int j = d.n / fold;
  if (!is_fixed(d, GroupElement::rotation(j)))
    throw std::invalid_argument("furl: dissection is not fixed by rotation " + std::to_string(j));
  const Component center = central_polygon(d);
  const auto m = static_cast<int>(center.arity());
  if (m % fold != 0 || m / fold < 2)
    throw std::invalid_argument("furl: central polygon has " + std::to_string(m) +
                                " vertices; need a multiple r*d with r >= 2 (centrally unbordered)");

  std::set<Chord> folded;
  auto fold_edge = [&](Chord c) {
    const int x = c.a % j;
    const int y = c.b % j;
    if (x == y) throw std::logic_error("furl: edge folds onto a single vertex");
    folded.emplace(x, y);
  };
  for (const Chord c : sides(d.n)) fold_edge(c);
  for (const Chord c : d.diagonals) fold_edge(c);

  std::vector<Chord> diagonals;
  for (const Chord c : folded)
    if (!is_side(c, j)) diagonals.push_back(c);

  std::vector<int> mark;
  for (const int v : center.vertices) mark.push_back(v % j);
  std::sort(mark.begin(), mark.end());
  mark.erase(std::unique(mark.begin(), mark.end()), mark.end());
  if (static_cast<int>(mark.size()) != m / fold) throw std::logic_error("furl: central polygon is not symmetric");

  return MarkedDissection{make_dissection(j, std::move(diagonals)), Component{std::move(mark)}};
}

Dissection unfurl(const MarkedDissection& m, int fold) {
  const int j = m.base.n;
  if (j < 2 || fold < 2) throw std::invalid_argument("unfurl: need j >= 2 and d >= 2");
  if (auto v = validate(m.base)) throw std::invalid_argument("unfurl: invalid base: " + v->message);
  if (j >= 3 ? !is_component(m.base, m.mark) : m.mark.vertices != std::vector<int>{0, 1})
    throw std::invalid_argument("unfurl: mark is not a component of the base dissection");

  const int n = fold * j;
  const auto ctx = FurlContext::make(n, fold, m.mark.vertices);
  std::set<Chord> edges;
  auto add = [&](Chord c) {
    const auto pre = edge_preimage(c, ctx);
    edges.insert(pre.begin(), pre.end());
  };
  for (const Chord c : sides(j)) add(c);
  for (const Chord c : m.base.diagonals) add(c);

  std::vector<Chord> diagonals;
  for (const Chord c : edges)
    if (!is_side(c, n)) diagonals.push_back(c);
  if (diagonals.empty()) throw std::invalid_argument("unfurl: result has no diagonals (k >= 1 required)");
  return make_dissection(n, std::move(diagonals));
}

}  // namespace dissect
