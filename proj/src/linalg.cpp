#include "weyl/linalg.hpp"

#include <stdexcept>

namespace weyl {

std::size_t exact_rank(Matrix a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  Scalar prev(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const Scalar pv = a[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      Scalar f = a[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        Scalar v = pv * a[r][c];
        if (!f.is_zero()) v -= f * a[rank][c];
        a[r][c] = v / prev;
      }
      a[r][col] = Scalar();
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

MonomialBasis::MonomialBasis(Space space, const std::vector<unsigned>& degrees) : space_(space) {
  for (unsigned d : degrees)
    for (auto& m : monomials_of_degree(space.nvars(), d)) {
      if (index_.count(m)) continue;
      index_.emplace(m, monos_.size());
      monos_.push_back(m);
    }
}

std::vector<Poly> MonomialBasis::elements() const {
  std::vector<Poly> out;
  out.reserve(monos_.size());
  for (const auto& m : monos_) out.push_back(Poly::monomial(space_, m));
  return out;
}

std::optional<std::size_t> MonomialBasis::index_of(const MultiIndex& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool MonomialBasis::contains(const Poly& f) const {
  for (const auto& [e, c] : f.terms())
    if (!index_.count(e)) return false;
  return true;
}

Row MonomialBasis::coordinates(const Poly& f) const {
  Row r(monos_.size());
  for (const auto& [e, c] : f.terms()) {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::domain_error("polynomial outside the basis span");
    r[it->second] = c;
  }
  return r;
}

std::vector<Poly> homogeneous_basis(Space space, unsigned degree) {
  return MonomialBasis(space, {degree}).elements();
}

Poly SpanBuilder::reduce(Poly f) const {
  // eliminate pivots from the top monomial down
  for (;;) {
    bool changed = false;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      Scalar c = it->second;
      f.add_scaled(row->second, -c);
      changed = true;
      break;
    }
    if (!changed) return f;
  }
}

bool SpanBuilder::insert(const Poly& f) {
  Poly r = reduce(f);
  if (r.is_zero()) return false;
  auto top = std::prev(r.terms().end());
  MultiIndex pivot = top->first;
  r *= Scalar(1) / top->second;
  for (auto& [piv, row] : rows_) {
    Scalar c = row.coefficient(pivot);
    if (!c.is_zero()) row.add_scaled(r, -c);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool SpanBuilder::contains(const Poly& f) const { return reduce(f).is_zero(); }

std::size_t span_rank(const std::vector<Poly>& polys) {
  std::map<MultiIndex, std::size_t, GradedLexLess> cols;
  for (const auto& f : polys)
    for (const auto& [e, c] : f.terms()) cols.try_emplace(e, 0);
  std::size_t k = 0;
  for (auto& [e, idx] : cols) idx = k++;
  Matrix m;
  for (const auto& f : polys) {
    if (f.is_zero()) continue;
    Row r(cols.size());
    for (const auto& [e, c] : f.terms()) r[cols[e]] = c;
    m.push_back(std::move(r));
  }
  return exact_rank(std::move(m));
}

}  // namespace weyl
