#pragma once

#include <set>
#include <vector>

#include "dissect/model.hpp"

namespace dissect {

// Fold data shared by both directions of the bijection: the n-gon folds d
// times onto the j-gon, and `center` lists v_0 < ... < v_{r-1} in 0..j-1.
struct FurlContext {
  int n = 0;
  int d = 0;
  int j = 0;
  std::vector<int> center;

  static FurlContext make(int n, int d, std::vector<int> center);
};

// {(a + i j) mod n, (b + i j) mod n} for 0 <= i < d, as a set.
std::set<Chord> expand_orbit(int a, int b, int d, int n);

// Edges of the n-gon that fold onto the edge ab (a < b) of the j-gon.
std::set<Chord> edge_preimage(Chord ab, const FurlContext& ctx);

// Folds a dissection fixed by rotation n/d with an rd-gon centre (r >= 2)
// onto n/d vertices. Throws std::invalid_argument when the preconditions fail.
Dissection furl(const Dissection& d, int fold);

// As furl, with the folded central polygon as the mark.
MarkedDissection furl_marked(const Dissection& d, int fold);

// Inverse of furl_marked. Throws std::invalid_argument when the mark is not a
// component or the result would have no diagonals.
Dissection unfurl(const MarkedDissection& m, int fold);

}  // namespace dissect
