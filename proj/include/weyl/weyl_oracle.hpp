#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weyl/poly.hpp"

namespace weyl {

struct Generator {
  enum class Letter { p, q } letter;
  unsigned index;  // 0-based

  static Generator p(unsigned i) { return {Letter::p, i}; }
  static Generator q(unsigned i) { return {Letter::q, i}; }
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.letter == b.letter && a.index == b.index;
  }
  friend bool operator<(const Generator& a, const Generator& b) {
    return a.letter != b.letter ? a.letter < b.letter : a.index < b.index;
  }
};

using Word = std::vector<Generator>;

// Sum of c * q^I p^J with every q to the left of every p.
class NormalForm {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;  // (I, J)
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const;
  };
  using TermMap = std::map<Key, Scalar, KeyLess>;

  explicit NormalForm(unsigned n = 1) : n_(n) {}
  static NormalForm one(unsigned n);
  static NormalForm term(unsigned n, const MultiIndex& qexp, const MultiIndex& pexp,
                         const Scalar& c = 1);
  static NormalForm generator(unsigned n, Generator g);

  unsigned n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const MultiIndex& qexp, const MultiIndex& pexp) const;
  int degree() const;

  void add_term(const MultiIndex& qexp, const MultiIndex& pexp, const Scalar& c);
  void add_scaled(const NormalForm& o, const Scalar& c);
  NormalForm& operator+=(const NormalForm& o) {
    add_scaled(o, 1);
    return *this;
  }
  NormalForm& operator-=(const NormalForm& o) {
    add_scaled(o, -1);
    return *this;
  }
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(NormalForm a, const Scalar& c) {
    a.scale(c);
    return a;
  }
  void scale(const Scalar& c);

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

  // "q1*p1 + 1"
  std::string to_string() const;

 private:
  unsigned n_;
  TermMap terms_;
};

enum class RewriteStrategy { leftmost, random };

// Rewrites p_i q_j -> q_j p_i + delta_ij (and sorts commuting letters) to termination.
NormalForm normal_order(const Word& w, unsigned n, RewriteStrategy strategy = RewriteStrategy::leftmost,
                        std::mt19937_64* rng = nullptr);

NormalForm oracle_multiply(const NormalForm& a, const NormalForm& b);
NormalForm symmetrize(const Poly& f);
Poly unsymmetrize(const NormalForm& a);
Poly star_via_symmetrization(const Poly& f, const Poly& g);

}  // namespace weyl
