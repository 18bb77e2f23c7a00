#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weyl/poly.hpp"

namespace weyl {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

// Exact rank by fraction-free (Bareiss) elimination.
std::size_t exact_rank(Matrix rows);

// Coordinates of polynomials against the monomials of a set of degrees.
class MonomialBasis {
 public:
  MonomialBasis(Space space, const std::vector<unsigned>& degrees);

  const Space& space() const { return space_; }
  std::size_t size() const { return monos_.size(); }
  const std::vector<MultiIndex>& monomials() const { return monos_; }
  std::vector<Poly> elements() const;

  std::optional<std::size_t> index_of(const MultiIndex& e) const;
  bool contains(const Poly& f) const;
  // throws if f has support outside the basis
  Row coordinates(const Poly& f) const;

 private:
  Space space_;
  std::vector<MultiIndex> monos_;
  std::map<MultiIndex, std::size_t, GradedLexLess> index_;
};

std::vector<Poly> homogeneous_basis(Space space, unsigned degree);

// Incrementally maintained row-reduced basis of a span of polynomials.
class SpanBuilder {
 public:
  // true if f was independent of what was already inserted
  bool insert(const Poly& f);
  bool contains(const Poly& f) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  Poly reduce(Poly f) const;
  // pivot monomial -> reduced row with coefficient 1 at the pivot
  std::map<MultiIndex, Poly, GradedLexLess> rows_;
};

// Rank of the span of `polys`, coordinates taken against all monomials appearing.
std::size_t span_rank(const std::vector<Poly>& polys);

}  // namespace weyl
