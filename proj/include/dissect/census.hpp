#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dissect/exact.hpp"
#include "dissect/model.hpp"

namespace dissect {

enum class AxisClass { vertex_axis, edge_axis };

// `printed` evaluates the axial factor without the n_s >= 2 guard; it exists
// only to reproduce the unguarded closed forms.
enum class FormulaMode { printed, corrected };

// Raised when a brute-force request exceeds the configured polygon size.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest n accepted by brute-force routines: DISSECT_BRUTE_MAX_N, default 12.
int brute_force_bound();
void require_brute_capacity(int n);

// Dissections of the region between consecutive perpendiculars: the branch
// containing the chord v_s v_{s+1} is only counted when that chord is a
// diagonal, i.e. n_s >= 2 (in corrected mode).
Integer axial_factor(std::int64_t n_s, std::int64_t k_s, FormulaMode mode = FormulaMode::corrected);

// Sum over compositions n_0 + ... + n_{parts-1} = total (parts >= 1) and
// k_0 + ... = half_pairs (parts >= 0) of the product of axial factors.
Integer axial_composition_sum(std::int64_t total, std::int64_t parts, std::int64_t half_pairs,
                              FormulaMode mode = FormulaMode::corrected);

// Sum over compositions n_1 + ... + n_r = total (parts >= 1) and
// k_1 + ... + k_r + #{i : n_i >= 2} = k of prod A(n_i + 1, k_i).
Integer marked_composition_sum(std::int64_t total, std::int64_t parts, std::int64_t k);

struct AxialTerm {
  int t;  // number of perpendiculars
  Integer value;
};

// Contributions to the axially fixed count split by perpendicular count t.
std::vector<AxialTerm> axial_terms(int n, int k, AxisClass axis, FormulaMode mode = FormulaMode::corrected);

// |G(n,k;tau)| (vertex axis) or |G(n,k;tau rho)| (edge axis, even n only).
Integer axial_fixed(int n, int k, AxisClass axis, FormulaMode mode = FormulaMode::corrected);

// Number of dissections of the j-gon with k diagonals and one marked
// r-component; r = 2 marks an edge.
Integer marked_count(std::int64_t j, std::int64_t k, std::int64_t r);

// Dissections fixed by rotation n/d whose central polygon is a d-gon.
Integer bordered_fixed(int n, int k, int d);

// Dissections fixed by rotation n/d whose central polygon is an rd-gon, r >= 2.
Integer unbordered_fixed(int n, int k, int d);

// |G(n,k;rho^{n/d})| for a divisor d of n.
Integer rotation_fixed(int n, int k, int d);

Integer brute_fixed(int n, int k, const GroupElement& g);

}  // namespace dissect
