#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weyl/multi_index.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

enum class VarKind { symplectic, plain };

// symplectic(n): 2n variables p1..pn, q1..qn.  plain(n): x1..xn.
struct Space {
  VarKind kind = VarKind::symplectic;
  unsigned n = 1;

  static Space symplectic(unsigned n) { return {VarKind::symplectic, n}; }
  static Space plain(unsigned n) { return {VarKind::plain, n}; }

  unsigned nvars() const { return kind == VarKind::symplectic ? 2 * n : n; }
  std::string var_name(unsigned var) const;
  std::string to_string() const;

  friend bool operator==(const Space& a, const Space& b) { return a.kind == b.kind && a.n == b.n; }
  friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }
};

class Poly {
 public:
  using TermMap = std::map<MultiIndex, Scalar, GradedLexLess>;

  explicit Poly(Space space = Space::symplectic(1)) : space_(space) {}

  static Poly constant(Space space, const Scalar& c);
  static Poly monomial(Space space, const MultiIndex& e, const Scalar& c = 1);
  static Poly variable(Space space, unsigned var);
  // 1-based, as printed: p(n, 1) is p1
  static Poly p(unsigned n, unsigned i);
  static Poly q(unsigned n, unsigned i);
  static Poly x(unsigned n, unsigned i);

  const Space& space() const { return space_; }
  unsigned nvars() const { return space_.nvars(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const MultiIndex& e) const;
  // -1 for the zero polynomial
  int degree() const;
  int low_degree() const;
  bool is_homogeneous() const;
  Poly homogeneous_part(unsigned k) const;
  Poly truncated(unsigned max_degree) const;
  Poly even_part() const;
  Poly odd_part() const;

  void add_term(const MultiIndex& e, const Scalar& c);
  void add_scaled(const Poly& o, const Scalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Space space_;
  TermMap terms_;
};

Poly multiply(const Poly& f, const Poly& g);
Poly partial_derivative(const Poly& f, unsigned var, unsigned order = 1);
Poly poisson_bracket(const Poly& f, const Poly& g);
std::vector<std::pair<unsigned, Poly>> graded_components(const Poly& f);
Scalar eval_zero(const Poly& f);

// Z2 parity of a homogeneous-parity polynomial; throws if mixed.
int parity(const Poly& f);

void require_same_space(const Poly& f, const Poly& g);
void require_symplectic(const Poly& f);

std::ostream& operator<<(std::ostream& os, const Poly& f);

}  // namespace weyl
