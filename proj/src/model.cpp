#include "dissect/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dissect {

namespace {

int mod(int x, int n) {
  const int r = x % n;
  return r < 0 ? r + n : r;
}

std::string chord_str(Chord c) { return "{" + std::to_string(c.a) + "," + std::to_string(c.b) + "}"; }

}  // namespace

bool Dissection::has_edge(Chord c) const {
  return is_side(c, n) || std::binary_search(diagonals.begin(), diagonals.end(), c);
}

bool is_side(Chord c, int n) { return c.b - c.a == 1 || (c.a == 0 && c.b == n - 1); }

bool crosses(Chord e1, Chord e2) {
  return (e1.a < e2.a && e2.a < e1.b && e1.b < e2.b) || (e2.a < e1.a && e1.a < e2.b && e2.b < e1.b);
}

std::optional<Violation> validate(const Dissection& d) {
  using K = Violation::Kind;
  if (d.n < 2) return Violation{K::bad_size, "polygon needs at least 2 vertices"};
  for (std::size_t i = 0; i < d.diagonals.size(); ++i) {
    const Chord c = d.diagonals[i];
    if (c.a < 0 || c.b >= d.n) return Violation{K::out_of_range, "vertex out of range in " + chord_str(c)};
    if (c.a >= c.b) return Violation{K::degenerate, "degenerate or unordered pair " + chord_str(c)};
    if (is_side(c, d.n)) return Violation{K::side_as_diagonal, "side given as diagonal " + chord_str(c)};
    if (i > 0 && d.diagonals[i - 1] == c) return Violation{K::duplicate, "duplicate diagonal " + chord_str(c)};
    if (i > 0 && d.diagonals[i - 1] > c) return Violation{K::unsorted, "diagonals not sorted at " + chord_str(c)};
  }
  for (std::size_t i = 0; i < d.diagonals.size(); ++i)
    for (std::size_t j = i + 1; j < d.diagonals.size(); ++j)
      if (crosses(d.diagonals[i], d.diagonals[j]))
        return Violation{K::crossing,
                         "crossing pair " + chord_str(d.diagonals[i]) + " " + chord_str(d.diagonals[j])};
  return std::nullopt;
}

Dissection make_dissection(int n, std::vector<Chord> diagonals) {
  std::sort(diagonals.begin(), diagonals.end());
  diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
  Dissection d{n, std::move(diagonals)};
  if (auto v = validate(d)) throw std::invalid_argument(v->message);
  return d;
}

// -- group action ------------------------------------------------------------

int GroupElement::act(int v, int n) const {
  return kind == Kind::rotation ? mod(v + shift, n) : mod(shift - v, n);
}

GroupElement compose(const GroupElement& outer, const GroupElement& inner, int n) {
  using K = GroupElement::Kind;
  if (outer.kind == K::rotation && inner.kind == K::rotation)
    return GroupElement::rotation(mod(outer.shift + inner.shift, n));
  if (outer.kind == K::rotation) return GroupElement::reflection(mod(outer.shift + inner.shift, n));
  if (inner.kind == K::rotation) return GroupElement::reflection(mod(outer.shift - inner.shift, n));
  return GroupElement::rotation(mod(outer.shift - inner.shift, n));
}

Dissection apply(const GroupElement& g, const Dissection& d) {
  Dissection out{d.n, {}};
  out.diagonals.reserve(d.diagonals.size());
  for (const Chord c : d.diagonals) out.diagonals.emplace_back(g.act(c.a, d.n), g.act(c.b, d.n));
  std::sort(out.diagonals.begin(), out.diagonals.end());
  return out;
}

bool is_fixed(const Dissection& d, const GroupElement& g) {
  for (const Chord c : d.diagonals) {
    const Chord image(g.act(c.a, d.n), g.act(c.b, d.n));
    if (!std::binary_search(d.diagonals.begin(), d.diagonals.end(), image)) return false;
  }
  return true;
}

GroupElement reduce(const GroupElement& g, int n) {
  if (g.kind == GroupElement::Kind::rotation) {
    const int step = std::gcd(n, mod(g.shift, n));
    return GroupElement::rotation(step == n ? 0 : step);
  }
  const bool edge_axis = n % 2 == 0 && mod(g.shift, n) % 2 == 1;
  return GroupElement::reflection(edge_axis ? 1 : 0);
}

std::vector<GroupElement> group_elements(Group group, int n) {
  std::vector<GroupElement> out;
  for (int i = 0; i < n; ++i) out.push_back(GroupElement::rotation(i));
  if (group == Group::dihedral)
    for (int i = 0; i < n; ++i) out.push_back(GroupElement::reflection(i));
  return out;
}

Dissection canonical_form(const Dissection& d, Group group) {
  Dissection best = d;
  for (const auto& g : group_elements(group, d.n)) {
    Dissection image = apply(g, d);
    if (image.diagonals < best.diagonals) best = std::move(image);
  }
  return best;
}

// -- enumeration -------------------------------------------------------------

std::vector<Chord> all_diagonals(int n) {
  std::vector<Chord> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (!(a == 0 && b == n - 1)) out.emplace_back(a, b);
  return out;
}

DissectionEnumerator::DissectionEnumerator(int n, int k) : n_(n), k_(k), diagonals_(all_diagonals(n)) {
  if (n < 3) throw std::invalid_argument("enumerate_dissections: n must be at least 3");
  if (k < 0) throw std::invalid_argument("enumerate_dissections: k must be nonnegative");
  const auto m = diagonals_.size();
  crossing_.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) crossing_[i][j] = crosses(diagonals_[i], diagonals_[j]);
}

DissectionEnumerator::DissectionEnumerator(int n, int k, int first_diagonal) : DissectionEnumerator(n, k) {
  if (k < 1) throw std::invalid_argument("prefix partition needs k >= 1");
  if (first_diagonal < 0 || first_diagonal >= static_cast<int>(diagonals_.size()))
    throw std::out_of_range("first_diagonal index out of range");
  first_ = first_diagonal;
}

void DissectionEnumerator::reset() {
  stack_.clear();
  started_ = false;
  done_ = false;
}

bool DissectionEnumerator::compatible(int candidate) const {
  for (const int chosen : stack_)
    if (crossing_[static_cast<std::size_t>(chosen)][static_cast<std::size_t>(candidate)]) return false;
  return true;
}

// Extends the stack to k entries, taking the smallest admissible index at each
// depth and backtracking when a depth runs dry.
bool DissectionEnumerator::fill(int from) {
  const int m = static_cast<int>(diagonals_.size());
  while (static_cast<int>(stack_.size()) < k_) {
    int found = -1;
    const bool pinned = first_ >= 0 && stack_.empty();
    if (pinned) {
      if (from <= first_) found = first_;
    } else {
      for (int c = from; c < m; ++c)
        if (compatible(c)) {
          found = c;
          break;
        }
    }
    if (found < 0) {
      if (stack_.empty()) return false;
      from = stack_.back() + 1;
      stack_.pop_back();
      continue;
    }
    stack_.push_back(found);
    from = found + 1;
  }
  return true;
}

std::optional<Dissection> DissectionEnumerator::next() {
  if (done_) return std::nullopt;
  bool ok = false;
  if (!started_) {
    started_ = true;
    ok = k_ <= n_ - 3 && fill(0);
  } else if (k_ > 0) {
    const int from = stack_.back() + 1;
    stack_.pop_back();
    ok = fill(from);
  }
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  Dissection d{n_, {}};
  d.diagonals.reserve(stack_.size());
  for (const int i : stack_) d.diagonals.push_back(diagonals_[static_cast<std::size_t>(i)]);
  return d;
}

std::vector<Dissection> enumerate_dissections(int n, int k) {
  std::vector<Dissection> out;
  DissectionEnumerator e(n, k);
  while (auto d = e.next()) out.push_back(std::move(*d));
  return out;
}

// -- components ----------------------------------------------------------------

namespace {

// Splits `region` (increasing vertex list) on the first diagonal that joins two
// non-adjacent region vertices; regions without such a diagonal are faces.
void split_region(const std::vector<int>& region, const std::vector<Chord>& diagonals,
                  std::vector<Component>& out) {
  const auto r = region.size();
  for (const Chord c : diagonals) {
    const auto ia = std::lower_bound(region.begin(), region.end(), c.a);
    const auto ib = std::lower_bound(region.begin(), region.end(), c.b);
    if (ia == region.end() || *ia != c.a || ib == region.end() || *ib != c.b) continue;
    const auto pa = static_cast<std::size_t>(ia - region.begin());
    const auto pb = static_cast<std::size_t>(ib - region.begin());
    if (pb - pa == 1 || (pa == 0 && pb == r - 1)) continue;
    std::vector<int> inner(ia, ib + 1);
    std::vector<int> outer(region.begin(), ia + 1);
    outer.insert(outer.end(), ib, region.end());
    split_region(inner, diagonals, out);
    split_region(outer, diagonals, out);
    return;
  }
  out.push_back(Component{region});
}

}  // namespace

std::vector<Component> faces(const Dissection& d) {
  std::vector<int> all(static_cast<std::size_t>(d.n));
  std::iota(all.begin(), all.end(), 0);
  std::vector<Component> out;
  split_region(all, d.diagonals, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Component> components(const Dissection& d) {
  std::vector<Component> out;
  for (int v = 0; v + 1 < d.n; ++v) out.push_back(Component{{v, v + 1}});
  out.push_back(Component{{0, d.n - 1}});
  for (const Chord c : d.diagonals) out.push_back(Component{{c.a, c.b}});
  for (auto& f : faces(d)) out.push_back(std::move(f));
  std::sort(out.begin(), out.end(), [](const Component& x, const Component& y) {
    if (x.arity() != y.arity()) return x.arity() < y.arity();
    return x.vertices < y.vertices;
  });
  return out;
}

bool is_component(const Dissection& d, const Component& c) {
  const auto r = c.vertices.size();
  if (r < 2 || !std::is_sorted(c.vertices.begin(), c.vertices.end())) return false;
  if (std::adjacent_find(c.vertices.begin(), c.vertices.end()) != c.vertices.end()) return false;
  if (c.vertices.front() < 0 || c.vertices.back() >= d.n) return false;
  if (r == 2) return d.has_edge(Chord(c.vertices[0], c.vertices[1]));
  // Boundary edges must be present and no other chord of the dissection may
  // join two of its vertices.
  for (std::size_t i = 0; i < r; ++i)
    if (!d.has_edge(Chord(c.vertices[i], c.vertices[(i + 1) % r]))) return false;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 2; j < r; ++j) {
      if (i == 0 && j == r - 1) continue;
      if (d.has_edge(Chord(c.vertices[i], c.vertices[j]))) return false;
    }
  return true;
}

Component central_polygon(const Dissection& d) {
  if (d.n < 3) throw std::invalid_argument("central_polygon: n must be at least 3");
  for (const Chord c : d.diagonals)
    if (2 * (c.b - c.a) == d.n) return Component{{c.a, c.b}};
  std::optional<Component> found;
  for (auto& f : faces(d)) {
    const auto& v = f.vertices;
    bool contains = 2 * (v.front() + d.n - v.back()) < d.n;
    for (std::size_t i = 0; contains && i + 1 < v.size(); ++i) contains = 2 * (v[i + 1] - v[i]) < d.n;
    if (!contains) continue;
    if (found) throw std::logic_error("central_polygon: two faces contain the centre");
    found = std::move(f);
  }
  if (!found) throw std::logic_error("central_polygon: no face contains the centre");
  return *found;
}

bool is_outer(int v, Chord e, int n) {
  const int len = e.b - e.a;
  if (2 * len == n) throw std::invalid_argument("is_outer: shorter path is ambiguous for a diameter");
  if (2 * len < n) return e.a < v && v < e.b;
  return v > e.b || v < e.a;
}

}  // namespace dissect
