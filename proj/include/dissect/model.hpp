#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dissect {

// An unordered vertex pair stored with a < b.
struct Chord {
  int a = 0;
  int b = 0;

  Chord() = default;
  Chord(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

// A dissection of the convex n-gon on vertices 0..n-1. Sides are implicit;
// `diagonals` is sorted and duplicate-free.
struct Dissection {
  int n = 0;
  std::vector<Chord> diagonals;

  std::size_t k() const { return diagonals.size(); }
  bool has_edge(Chord c) const;

  friend bool operator==(const Dissection&, const Dissection&) = default;
  friend auto operator<=>(const Dissection&, const Dissection&) = default;
};

// Sorts and deduplicates, then validates; throws std::invalid_argument.
Dissection make_dissection(int n, std::vector<Chord> diagonals);

bool is_side(Chord c, int n);

// True iff the chords cross in the interior: a<c<b<d or c<a<d<b.
bool crosses(Chord e1, Chord e2);

struct Violation {
  enum class Kind { bad_size, out_of_range, degenerate, side_as_diagonal, duplicate, unsorted, crossing };
  Kind kind;
  std::string message;
};

// Checks every Dissection invariant, including normalized ordering.
std::optional<Violation> validate(const Dissection& d);

// -- group action ------------------------------------------------------------

struct GroupElement {
  enum class Kind { rotation, reflection };
  Kind kind = Kind::rotation;
  int shift = 0;

  static GroupElement rotation(int i) { return {Kind::rotation, i}; }
  static GroupElement reflection(int i) { return {Kind::reflection, i}; }

  // rotation: v -> v + i, reflection: v -> i - v (mod n)
  int act(int v, int n) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Composition `outer * inner` (apply inner first).
GroupElement compose(const GroupElement& outer, const GroupElement& inner, int n);

Dissection apply(const GroupElement& g, const Dissection& d);

bool is_fixed(const Dissection& d, const GroupElement& g);

// Representative with the same number of fixed points: rotation i becomes
// rotation gcd(n, i) (identity when that is n); reflections map to
// reflection 0 (vertex axis) or reflection 1 (edge axis, n even and i odd).
GroupElement reduce(const GroupElement& g, int n);

enum class Group { cyclic, dihedral };

std::vector<GroupElement> group_elements(Group group, int n);

Dissection canonical_form(const Dissection& d, Group group);

// -- enumeration -------------------------------------------------------------

// Streams G(n, k) in lexicographic order of the sorted diagonal lists.
//
//     DissectionEnumerator e(6, 3);
//     while (auto d = e.next()) ...
//
// Construct with `first_diagonal` to restrict the stream to dissections whose
// smallest diagonal has that index in `all_diagonals(n)`; the streams for all
// indices partition G(n, k) for k >= 1.
class DissectionEnumerator {
 public:
  DissectionEnumerator(int n, int k);
  DissectionEnumerator(int n, int k, int first_diagonal);

  std::optional<Dissection> next();
  void reset();

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  bool fill(int from);
  bool compatible(int candidate) const;

  int n_;
  int k_;
  int first_ = -1;
  std::vector<Chord> diagonals_;
  std::vector<std::vector<bool>> crossing_;
  std::vector<int> stack_;
  bool started_ = false;
  bool done_ = false;
};

// Diagonals of the n-gon in lexicographic order.
std::vector<Chord> all_diagonals(int n);

std::vector<Dissection> enumerate_dissections(int n, int k);

// -- components ----------------------------------------------------------------

// Vertices in increasing order; size 2 is an edge, size >= 3 a face.
struct Component {
  std::vector<int> vertices;

  std::size_t arity() const { return vertices.size(); }
  friend auto operator<=>(const Component&, const Component&) = default;
};

// Every edge (sides and diagonals) as a 2-component plus every face, sorted by
// (arity, vertices).
std::vector<Component> components(const Dissection& d);

std::vector<Component> faces(const Dissection& d);

bool is_component(const Dissection& d, const Component& c);

// The component whose closed region contains the centre: a diameter digon if
// one exists, otherwise the face whose boundary arcs are all shorter than n/2.
Component central_polygon(const Dissection& d);

// True iff v lies strictly inside the shorter boundary arc between the
// endpoints of e. Throws std::invalid_argument for a diameter.
bool is_outer(int v, Chord e, int n);

struct MarkedDissection {
  Dissection base;
  Component mark;

  friend bool operator==(const MarkedDissection&, const MarkedDissection&) = default;
};

}  // namespace dissect
