#include "dissect/exact.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace dissect {

bool is_integral(const Rational& q) { return denominator(q) == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("non-integral value " + to_string(q));
  return numerator(q);
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (is_integral(v)) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

Integer binomial(const Integer& n, const Integer& k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer kk = k > n - k ? Integer(n - k) : k;
  Integer result = 1;
  for (Integer i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;
  }
  return result;
}

namespace {

// Catalan numbers are requested for small indices over and over; the table
// only grows and entries never change.
class CatalanTable {
 public:
  Integer get(std::int64_t m) {
    std::lock_guard lock(mutex_);
    while (static_cast<std::int64_t>(values_.size()) <= m) {
      auto q = static_cast<std::int64_t>(values_.size());
      values_.push_back(binomial(2 * q, q) / (q + 1));
    }
    return values_[static_cast<std::size_t>(m)];
  }

 private:
  std::mutex mutex_;
  std::vector<Integer> values_;
};

CatalanTable& catalan_table() {
  static CatalanTable table;
  return table;
}

}  // namespace

Integer catalan(const IndexQ& q) {
  if (!is_integral(q) || q < 0) return 0;
  return catalan_table().get(static_cast<std::int64_t>(numerator(q)));
}

Integer euler_totient(std::int64_t n) {
  if (n <= 0) throw std::domain_error("euler_totient: n must be positive");
  std::int64_t result = n;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
  if (n <= 0) throw std::domain_error("divisors_of: n must be positive");
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer cayley_count(const IndexQ& n, const IndexQ& k) {
  if (!is_integral(n) || !is_integral(k)) return 0;
  const Integer nn = numerator(n);
  const Integer kk = numerator(k);
  if (nn == 2 && kk == 0) return 1;
  if (nn < 3 || kk < 0 || kk > nn - 3) return 0;
  return binomial(nn + kk - 1, kk) * binomial(nn - 3, kk) / (kk + 1);
}

// ---------------------------------------------------------------------------

Compositions::Compositions(std::int64_t total, std::int64_t parts, std::int64_t min_part)
    : total_(total), parts_(parts), min_part_(min_part) {}

Compositions::iterator::iterator(std::int64_t total, std::int64_t min_part,
                                 std::vector<std::int64_t> first)
    : total_(total), min_part_(min_part), current_(std::move(first)), done_(false) {}

Compositions::iterator Compositions::begin() const {
  if (parts_ < 1 || min_part_ < 0 || total_ < parts_ * min_part_) return {};
  std::vector<std::int64_t> first(static_cast<std::size_t>(parts_), min_part_);
  first.back() = total_ - (parts_ - 1) * min_part_;
  return iterator(total_, min_part_, std::move(first));
}

// Lexicographic successor: find the rightmost position (other than the last)
// that can grow by one while the tail still absorbs the remainder.
Compositions::iterator& Compositions::iterator::operator++() {
  if (done_) return *this;
  const auto parts = current_.size();
  if (parts < 2) {
    done_ = true;
    return *this;
  }
  // The tail after position i holds current_[i+1..] summing to `tail`; i can
  // grow iff tail > (parts - i - 1) * min_part.
  std::int64_t tail = current_.back();
  for (std::size_t i = parts - 1; i-- > 0;) {
    const auto slots = static_cast<std::int64_t>(parts - i - 1);
    if (tail > slots * min_part_) {
      ++current_[i];
      const std::int64_t remaining = tail - 1;
      for (std::size_t j = i + 1; j + 1 < parts; ++j) current_[j] = min_part_;
      current_.back() = remaining - (slots - 1) * min_part_;
      return *this;
    }
    tail += current_[i];
  }
  done_ = true;
  return *this;
}

std::vector<std::vector<std::int64_t>> all_compositions(std::int64_t total, std::int64_t parts,
                                                        std::int64_t min_part) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& c : Compositions(total, parts, min_part)) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Integer convolution_by_sum(std::int64_t n, std::int64_t m) {
  // series[i] holds the coefficient of x^i in (sum C_j x^j)^p after p rounds.
  std::vector<Integer> series(static_cast<std::size_t>(n + 1), 0);
  series[0] = 1;
  for (std::int64_t p = 0; p < m; ++p) {
    std::vector<Integer> next(series.size(), 0);
    for (std::int64_t i = 0; i <= n; ++i) {
      if (series[static_cast<std::size_t>(i)] == 0) continue;
      for (std::int64_t j = 0; i + j <= n; ++j)
        next[static_cast<std::size_t>(i + j)] += series[static_cast<std::size_t>(i)] * catalan(j);
    }
    series = std::move(next);
  }
  return series[static_cast<std::size_t>(n)];
}

// (n+lo)(n+lo+1)...(n+hi); empty (hi < lo) is 1.
Integer rising(std::int64_t n, std::int64_t lo, std::int64_t hi) {
  Integer p = 1;
  for (std::int64_t i = lo; i <= hi; ++i) p *= n + i;
  return p;
}

Integer convolution_closed(std::int64_t n, std::int64_t m) {
  Rational value;
  if (m % 2 == 0) {
    const std::int64_t h = m / 2;
    value = Rational(m * rising(n, 1, h - 1), 2 * rising(n, h + 2, m)) * Rational(catalan(n + h));
  } else {
    const std::int64_t h = (m - 1) / 2;
    value = Rational(m * rising(n, 1, h), rising(n, h + 2, m)) * Rational(catalan(n + h));
  }
  if (!is_integral(value))
    throw std::logic_error("catalan_convolution: closed form is not integral at n=" +
                           std::to_string(n) + ", m=" + std::to_string(m));
  return numerator(value);
}

}  // namespace

Integer catalan_convolution(std::int64_t n, std::int64_t m, ConvolutionMethod method) {
  if (n < 0 || m < 1) throw std::domain_error("catalan_convolution: need n >= 0 and m >= 1");
  return method == ConvolutionMethod::sum ? convolution_by_sum(n, m) : convolution_closed(n, m);
}

}  // namespace dissect
