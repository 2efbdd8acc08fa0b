#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dissect {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Indices of Catalan and Cayley numbers may be fractional, e.g. (k-1)/2.
// Every value is 0 off the integer domain.
using IndexQ = Rational;

bool is_integral(const Rational& q);

// Throws std::domain_error when q is not an integer.
Integer to_integer(const Rational& q);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

// C(n, k); 0 when k < 0, k > n or n < 0.
Integer binomial(const Integer& n, const Integer& k);

// C_q = C(2q, q) / (q + 1) for integer q >= 0, else 0.
Integer catalan(const IndexQ& q);

Integer euler_totient(std::int64_t n);

std::vector<std::int64_t> divisors_of(std::int64_t n);

// Number of k-dissections of an n-gon: C(n+k-1, k) C(n-3, k) / (k+1) for
// integers 0 <= k <= n-3, 1 at (2, 0), and 0 everywhere else.
Integer cayley_count(const IndexQ& n, const IndexQ& k);

/// Ordered tuples (x_1..x_parts) with sum `total` and every x_i >= min_part,
/// produced in lexicographic order. Infeasible requests give an empty range.
///
///     for (const auto& c : Compositions(4, 3, 1)) ...  // (1,1,2) (1,2,1) (2,1,1)
class Compositions {
 public:
  Compositions(std::int64_t total, std::int64_t parts, std::int64_t min_part);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<std::int64_t>;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& other) const { return done_ == other.done_; }

   private:
    friend class Compositions;
    iterator(std::int64_t total, std::int64_t min_part, std::vector<std::int64_t> first);

    std::int64_t total_ = 0;
    std::int64_t min_part_ = 0;
    std::vector<std::int64_t> current_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return {}; }

 private:
  std::int64_t total_;
  std::int64_t parts_;
  std::int64_t min_part_;
};

std::vector<std::vector<std::int64_t>> all_compositions(std::int64_t total, std::int64_t parts,
                                                        std::int64_t min_part);

enum class ConvolutionMethod { sum, closed };

// Sum over i_1 + ... + i_m = n (i_j >= 0) of C_{i_1} ... C_{i_m}, either by
// direct summation or by the even/odd closed forms.
Integer catalan_convolution(std::int64_t n, std::int64_t m, ConvolutionMethod method);

}  // namespace dissect
