#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace weyl {

class MultiIndex {
 public:
  using value_type = std::uint32_t;
  using storage = boost::container::small_vector<value_type, 8>;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t nvars) : e_(nvars, 0) {}
  MultiIndex(std::initializer_list<value_type> il) : e_(il.begin(), il.end()) {}
  explicit MultiIndex(const std::vector<value_type>& v) : e_(v.begin(), v.end()) {}

  static MultiIndex unit(std::size_t nvars, std::size_t var, value_type power = 1);

  std::size_t size() const { return e_.size(); }
  value_type operator[](std::size_t k) const { return e_[k]; }
  value_type& operator[](std::size_t k) { return e_[k]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  unsigned total() const;
  mpz_class factorial() const;
  bool divides(const MultiIndex& o) const;  // componentwise <=

  MultiIndex& operator+=(const MultiIndex& o);
  MultiIndex& operator-=(const MultiIndex& o);  // requires divides
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  // concatenation
  MultiIndex concat(const MultiIndex& o) const;
  MultiIndex slice(std::size_t from, std::size_t count) const;

  std::vector<value_type> to_vector() const { return {e_.begin(), e_.end()}; }
  std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

 private:
  storage e_;
};

// Ascending graded-lex: lower total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// All exponent vectors of the given total degree, descending graded-lex.
std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, unsigned degree);

// All S with S <= bound componentwise.
std::vector<MultiIndex> sub_indices(const MultiIndex& bound);

}  // namespace weyl
