#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "weyl/poly.hpp"

namespace weyl {

using PolyTable = std::map<MultiIndex, Poly, GradedLexLess>;

// x^in -> table[in], every other monomial -> 0
struct FiniteRankOp {
  PolyTable table;
};

// Arbitrary action on monomials of degree <= degree_bound.
struct RuleOp {
  std::function<Poly(const MultiIndex&)> action;
  unsigned degree_bound = 0;
  std::string name;
};

// x^in -> x^out
struct ElementaryOp {
  MultiIndex out, in;
};

// x^K -> lambda^|K| x^K
struct ScalingOp {
  Scalar lambda;
};

// exp(tau x d/dx), given exactly through lambda = e^tau
struct ExpEulerOp {
  Scalar lambda;
  std::optional<double> tau;
};

using SpecialOp = std::variant<ElementaryOp, ScalingOp, ExpEulerOp>;

std::string special_name(const SpecialOp& op);
Scalar special_lambda(const SpecialOp& op);  // throws for ElementaryOp

class LinOp {
 public:
  using Kind = std::variant<FiniteRankOp, RuleOp, SpecialOp>;

  LinOp(unsigned n, Kind kind);

  static LinOp finite_rank(unsigned n, PolyTable table);
  static LinOp rule(unsigned n, std::function<Poly(const MultiIndex&)> action,
                    unsigned degree_bound, std::string name = "rule");
  static LinOp special(unsigned n, SpecialOp op);
  static LinOp identity(unsigned n) { return special(n, ScalingOp{Scalar(1)}); }
  static LinOp elementary(const MultiIndex& out, const MultiIndex& in);
  static LinOp scaling(unsigned n, const Scalar& lambda) { return special(n, ScalingOp{lambda}); }
  // d/dx_i, 1-based
  static LinOp derivative(unsigned n, unsigned i, unsigned degree_bound);

  unsigned n() const { return n_; }
  Space space() const { return Space::plain(n_); }
  const Kind& kind() const { return kind_; }
  bool is_finite_rank() const { return std::holds_alternative<FiniteRankOp>(kind_); }
  const SpecialOp* as_special() const { return std::get_if<SpecialOp>(&kind_); }
  std::optional<unsigned> degree_bound() const;
  // smallest |N| from which on all normal-symbol coefficients may be nonzero
  unsigned onset() const;

  Poly apply_monomial(const MultiIndex& e) const;
  Poly apply(const Poly& f) const;
  std::string describe() const;

 private:
  unsigned n_;
  Kind kind_;
};

// plain(n) -> plain(2n), x'_i stored as x_{n+i}
Poly hopf_coproduct(const Poly& f);
Poly antipode(const Poly& f);
Scalar counit(const Poly& f);
// m o (left (x) right) on an element of plain(2n)
Poly tensor_apply(const Poly& doubled, const std::function<Poly(const MultiIndex&)>& left,
                  const std::function<Poly(const MultiIndex&)>& right);

// <x^I, X^J> = delta_IJ I!, F read in the dual variables X
Scalar duality_pairing(const Poly& p, const Poly& f);
// sum_{|K| <= degree} v^K X^K / K!
Poly truncated_exponential(const std::vector<Scalar>& v, unsigned degree);

Poly derivative(const Poly& f, const MultiIndex& order);

struct DiffOpSeries {
  unsigned n = 1;
  PolyTable coefficients;  // N -> c_N(x), zero entries omitted
  unsigned truncation = 0;

  Poly coefficient(const MultiIndex& order) const;
  // sum_N c_N d^N f; throws when deg f exceeds the truncation
  Poly apply(const Poly& f) const;
  std::string to_string() const;
};

// c_N = sum_{R+S=N} (-1)^|S| / (R! S!) T(x^R) x^S
Poly diffop_coefficient(const LinOp& t, const MultiIndex& order);
DiffOpSeries reconstruct_diffop(const LinOp& t, unsigned max_order);

// sum_I alpha_I(Q) * P^I, the alphas kept as polynomials in x.
// No truncation means an exact element of W.
struct NormalSymbol {
  unsigned n = 1;
  PolyTable alphas;
  std::optional<unsigned> truncation;

  Poly alpha(const MultiIndex& order) const;
  std::string to_string() const;
};

Poly wmap_apply(const NormalSymbol& sym, const Poly& f);
NormalSymbol to_normal_symbol(const LinOp& t, unsigned max_order);
NormalSymbol normal_symbol_of(const Poly& w);
Poly weyl_element(const NormalSymbol& sym);  // requires an exact symbol

// plain(n) -> symplectic(n), x_i -> q_i
Poly embed_q(const Poly& alpha);
// alpha(Q) * P^order, kept to degrees <= max_degree when given
Poly ordered_product(const Poly& alpha, const MultiIndex& order,
                     std::optional<unsigned> max_degree = std::nullopt);

}  // namespace weyl
