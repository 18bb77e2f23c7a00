#include "weyl/multi_index.hpp"

#include <numeric>
#include <stdexcept>

#include "weyl/scalar.hpp"

namespace weyl {

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t var, value_type power) {
  MultiIndex m(nvars);
  m.e_.at(var) = power;
  return m;
}

unsigned MultiIndex::total() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

mpz_class MultiIndex::factorial() const {
  mpz_class r = 1;
  for (auto v : e_) r *= weyl::factorial(v);
  return r;
}

bool MultiIndex::divides(const MultiIndex& o) const {
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] > o.e_[k]) return false;
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  if (o.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& o) {
  if (o.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (o.e_[k] > e_[k]) throw std::domain_error("negative exponent");
    e_[k] -= o.e_[k];
  }
  return *this;
}

MultiIndex MultiIndex::concat(const MultiIndex& o) const {
  MultiIndex r = *this;
  r.e_.insert(r.e_.end(), o.e_.begin(), o.e_.end());
  return r;
}

MultiIndex MultiIndex::slice(std::size_t from, std::size_t count) const {
  MultiIndex r;
  r.e_.assign(e_.begin() + from, e_.begin() + from + count);
  return r;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(e_[k]);
  }
  return s + ")";
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  unsigned ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
    if (a[k] != b[k]) return a[k] < b[k];
  return a.size() < b.size();
}

namespace {

void fill(std::vector<MultiIndex>& out, MultiIndex& cur, std::size_t pos, unsigned left) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned v = left + 1; v-- > 0;) {
    cur[pos] = v;
    fill(out, cur, pos + 1, left - v);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<MultiIndex> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  MultiIndex cur(nvars);
  fill(out, cur, 0, degree);
  return out;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& bound) {
  std::vector<MultiIndex> out;
  MultiIndex cur(bound.size());
  for (;;) {
    out.push_back(cur);
    std::size_t k = 0;
    while (k < bound.size() && cur[k] == bound[k]) cur[k++] = 0;
    if (k == bound.size()) break;
    ++cur[k];
  }
  return out;
}

}  // namespace weyl
