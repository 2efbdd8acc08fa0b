#include "dissect/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>

namespace dissect {

int brute_force_bound() {
  if (const char* env = std::getenv("DISSECT_BRUTE_MAX_N")) {
    try {
      const int v = std::stoi(env);
      if (v >= 3) return v;
    } catch (const std::exception&) {
    }
  }
  return 12;
}

void require_brute_capacity(int n) {
  const int bound = brute_force_bound();
  if (n > bound)
    throw CapacityError("n=" + std::to_string(n) + " exceeds the brute-force bound " + std::to_string(bound) +
                        " (set DISSECT_BRUTE_MAX_N to raise it)");
}

Integer axial_factor(std::int64_t n_s, std::int64_t k_s, FormulaMode mode) {
  const bool chord_is_diagonal = mode == FormulaMode::printed || n_s >= 2;
  Integer v = cayley_count(n_s + 1, k_s);
  if (chord_is_diagonal) v += cayley_count(n_s + 1, k_s - 1);
  return v;
}

namespace {

// table[p][a][b]: sum over p-part compositions (x_i >= 1) of a, and second
// coordinates (y_i >= 0) summing to b, of prod weight(x_i, y_i). Both
// weights used here vanish unless y <= x, so b <= a throughout.
class CompositionTable {
 public:
  using Weight = std::function<Integer(std::int64_t, std::int64_t)>;

  explicit CompositionTable(Weight weight) : weight_(std::move(weight)) {}

  Integer get(std::int64_t total, std::int64_t parts, std::int64_t second) {
    if (total < 0 || parts < 1 || second < 0 || second > total || parts > total) return 0;
    std::lock_guard lock(mutex_);
    if (total > size_) grow(std::max<std::int64_t>(total, 2 * size_));
    return table_[idx(parts)][idx(total)][idx(second)];
  }

 private:
  static std::size_t idx(std::int64_t v) { return static_cast<std::size_t>(v); }

  struct Entry {
    std::int64_t x, y;
    Integer w;
  };

  void grow(std::int64_t size) {
    size = std::max<std::int64_t>(size, 24);
    std::vector<Entry> weights;
    for (std::int64_t x = 1; x <= size; ++x)
      for (std::int64_t y = 0; y <= x; ++y)
        if (Integer w = weight_(x, y); w != 0) weights.push_back({x, y, std::move(w)});

    const auto dim = idx(size + 1);
    table_.assign(dim, std::vector<std::vector<Integer>>(dim, std::vector<Integer>(dim, 0)));
    for (const auto& e : weights) table_[1][idx(e.x)][idx(e.y)] = e.w;
    for (std::int64_t p = 2; p <= size; ++p) {
      auto& cur = table_[idx(p)];
      const auto& prev = table_[idx(p - 1)];
      for (std::int64_t a = p - 1; a <= size; ++a)
        for (std::int64_t b = 0; b <= a; ++b) {
          const Integer& base = prev[idx(a)][idx(b)];
          if (base == 0) continue;
          for (const auto& e : weights) {
            if (a + e.x > size) continue;
            cur[idx(a + e.x)][idx(b + e.y)] += base * e.w;
          }
        }
    }
    size_ = size;
  }

  Weight weight_;
  std::mutex mutex_;
  std::int64_t size_ = 0;
  std::vector<std::vector<std::vector<Integer>>> table_;
};

CompositionTable& axial_table(FormulaMode mode) {
  static CompositionTable corrected([](std::int64_t x, std::int64_t y) {
    return axial_factor(x, y, FormulaMode::corrected);
  });
  static CompositionTable printed([](std::int64_t x, std::int64_t y) {
    return axial_factor(x, y, FormulaMode::printed);
  });
  return mode == FormulaMode::corrected ? corrected : printed;
}

// Second coordinate is k_i + [n_i >= 2], so the side count folds into the sum.
CompositionTable& marked_table() {
  static CompositionTable table([](std::int64_t x, std::int64_t y) {
    return cayley_count(x + 1, y - (x >= 2 ? 1 : 0));
  });
  return table;
}

void require_range(int n, int k, const char* what) {
  if (n < 3 || k < 0 || k > n - 3)
    throw std::invalid_argument(std::string(what) + ": need n >= 3 and 0 <= k <= n-3 (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
}

void require_divisor(int n, int d, int min_d, const char* what) {
  if (d < min_d || n % d != 0)
    throw std::invalid_argument(std::string(what) + ": d=" + std::to_string(d) + " must be a divisor of n=" +
                                std::to_string(n) + " with d >= " + std::to_string(min_d));
}

}  // namespace

Integer axial_composition_sum(std::int64_t total, std::int64_t parts, std::int64_t half_pairs, FormulaMode mode) {
  return axial_table(mode).get(total, parts, half_pairs);
}

Integer marked_composition_sum(std::int64_t total, std::int64_t parts, std::int64_t k) {
  return marked_table().get(total, parts, k);
}

std::vector<AxialTerm> axial_terms(int n, int k, AxisClass axis, FormulaMode mode) {
  require_range(n, k, "axial_fixed");
  const bool even = n % 2 == 0;
  if (axis == AxisClass::edge_axis && !even)
    throw std::invalid_argument("axial_fixed: the edge axis exists only for even n");

  std::vector<AxialTerm> terms;
  std::int64_t total = 0;
  int first_t = 0;
  if (even && axis == AxisClass::vertex_axis) {
    // No perpendiculars: the axis is either the diameter 0 n/2 or not an edge.
    const Integer t0 = cayley_count(Rational(n / 2 + 1), Rational(k - 1, 2)) +
                       cayley_count(Rational(n / 2 + 1), Rational(k, 2));
    terms.push_back({0, t0});
    total = n / 2;
    first_t = 1;
  } else {
    total = even ? n / 2 - 1 : (n - 1) / 2;
  }
  for (int t = first_t; t <= k; ++t) {
    if ((k - t) % 2 != 0) continue;
    terms.push_back({t, axial_composition_sum(total, t + 1, (k - t) / 2, mode)});
  }
  if (mode == FormulaMode::corrected)
    for (const auto& term : terms)
      if (term.value != 0 && term.t > n - k - 2)
        throw std::logic_error("axial_fixed: nonzero term with t > n-k-2 at n=" + std::to_string(n) +
                               ", k=" + std::to_string(k));
  return terms;
}

Integer axial_fixed(int n, int k, AxisClass axis, FormulaMode mode) {
  Integer sum = 0;
  for (const auto& term : axial_terms(n, k, axis, mode)) sum += term.value;
  return sum;
}

Integer marked_count(std::int64_t j, std::int64_t k, std::int64_t r) {
  if (j < 2 || r < 2) throw std::invalid_argument("marked_count: need j >= 2 and r >= 2");
  if (k < 0) return 0;
  if (r == 2) return (j + k) * cayley_count(j, k);
  const Rational value = Rational(j, r) * Rational(marked_composition_sum(j, r, k));
  if (!is_integral(value)) throw std::logic_error("marked_count: non-integral count " + to_string(value));
  return numerator(value);
}

Integer bordered_fixed(int n, int k, int d) {
  require_divisor(n, d, 2, "bordered_fixed");
  const int j = n / d;
  if (j < 2) throw std::invalid_argument("bordered_fixed: n/d must be at least 2");
  const int delta = d == 2 ? 1 : 0;
  return j * cayley_count(Rational(j + 1), Rational(k - d + delta, d));
}

Integer unbordered_fixed(int n, int k, int d) {
  require_divisor(n, d, 2, "unbordered_fixed");
  if (3 * d > n || k % d != 0) return 0;
  const int j = n / d;
  Integer sum = 0;
  for (int r = 2; r <= j; ++r) sum += marked_count(j, k / d - (r == 2 ? 1 : 0), r);
  return sum;
}

Integer rotation_fixed(int n, int k, int d) {
  require_range(n, k, "rotation_fixed");
  require_divisor(n, d, 1, "rotation_fixed");
  if (d == 1) return cayley_count(n, k);
  if (k == 0) return 1;
  if (d == n) return 0;
  return bordered_fixed(n, k, d) + unbordered_fixed(n, k, d);
}

Integer brute_fixed(int n, int k, const GroupElement& g) {
  require_brute_capacity(n);
  std::int64_t count = 0;
  DissectionEnumerator e(n, k);
  while (auto d = e.next())
    if (is_fixed(*d, g)) ++count;
  return count;
}

}  // namespace dissect
