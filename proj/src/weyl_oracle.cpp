#include "weyl/weyl_oracle.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace weyl {

bool NormalForm::KeyLess::operator()(const Key& a, const Key& b) const {
  unsigned da = a.first.total() + a.second.total(), db = b.first.total() + b.second.total();
  if (da != db) return da < db;
  GradedLexLess lt;
  if (a.first != b.first) return lt(a.first, b.first);
  return lt(a.second, b.second);
}

NormalForm NormalForm::one(unsigned n) { return term(n, MultiIndex(n), MultiIndex(n)); }

NormalForm NormalForm::term(unsigned n, const MultiIndex& qexp, const MultiIndex& pexp,
                            const Scalar& c) {
  NormalForm r(n);
  r.add_term(qexp, pexp, c);
  return r;
}

NormalForm NormalForm::generator(unsigned n, Generator g) {
  MultiIndex e = MultiIndex::unit(n, g.index);
  MultiIndex z(n);
  return g.letter == Generator::Letter::q ? term(n, e, z) : term(n, z, e);
}

Scalar NormalForm::coefficient(const MultiIndex& qexp, const MultiIndex& pexp) const {
  auto it = terms_.find({qexp, pexp});
  return it == terms_.end() ? Scalar() : it->second;
}

int NormalForm::degree() const {
  if (terms_.empty()) return -1;
  const auto& k = terms_.rbegin()->first;
  return static_cast<int>(k.first.total() + k.second.total());
}

void NormalForm::add_term(const MultiIndex& qexp, const MultiIndex& pexp, const Scalar& c) {
  if (c.is_zero()) return;
  if (qexp.size() != n_ || pexp.size() != n_)
    throw std::invalid_argument("normal form exponent length mismatch");
  auto [it, inserted] = terms_.try_emplace({qexp, pexp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NormalForm::add_scaled(const NormalForm& o, const Scalar& c) {
  if (o.n_ != n_) throw std::invalid_argument("normal form size mismatch");
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v * c);
}

void NormalForm::scale(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [k, v] : terms_) v *= c;
}

std::string NormalForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [qe, pe] = it->first;
    std::string mono;
    auto put = [&](const MultiIndex& e, char letter) {
      for (unsigned i = 0; i < n_; ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += letter + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
    };
    put(qe, 'q');
    put(pe, 'p');
    const Scalar& c = it->second;
    std::string t;
    if (mono.empty()) t = c.to_string();
    else if (c.is_real() && c.re() == 1) t = mono;
    else if (c.is_real() && c.re() == -1) t = "-" + mono;
    else if (c.is_real() || sgn(c.re()) == 0) t = c.to_string() + "*" + mono;
    else t = "(" + c.to_string() + ")*" + mono;
    if (out.empty()) out = t;
    else if (t[0] == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

namespace {

// q's before p's, each block by index
int rank_of(const Generator& g) {
  return (g.letter == Generator::Letter::q ? 0 : 1 << 20) + static_cast<int>(g.index);
}

}  // namespace

NormalForm normal_order(const Word& w, unsigned n, RewriteStrategy strategy, std::mt19937_64* rng) {
  for (const auto& g : w)
    if (g.index >= n) throw std::out_of_range("generator index out of range");
  if (strategy == RewriteStrategy::random && !rng)
    throw std::invalid_argument("random strategy needs a generator");
  std::map<Word, Scalar> pool{{w, Scalar(1)}};
  NormalForm out(n);
  while (!pool.empty()) {
    auto it = pool.begin();
    if (strategy == RewriteStrategy::random) std::advance(it, (*rng)() % pool.size());
    Word word = it->first;
    Scalar c = it->second;
    pool.erase(it);
    if (c.is_zero()) continue;
    std::vector<std::size_t> redexes;
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
      if (rank_of(word[k]) > rank_of(word[k + 1])) redexes.push_back(k);
    if (redexes.empty()) {
      MultiIndex qe(n), pe(n);
      for (const auto& g : word) ++(g.letter == Generator::Letter::q ? qe : pe)[g.index];
      out.add_term(qe, pe, c);
      continue;
    }
    std::size_t k = strategy == RewriteStrategy::random ? redexes[(*rng)() % redexes.size()]
                                                        : redexes.front();
    Word swapped = word;
    std::swap(swapped[k], swapped[k + 1]);
    pool[swapped] += c;
    const Generator &a = word[k], &b = word[k + 1];
    if (a.letter == Generator::Letter::p && b.letter == Generator::Letter::q && a.index == b.index) {
      Word shorter;
      shorter.insert(shorter.end(), word.begin(), word.begin() + k);
      shorter.insert(shorter.end(), word.begin() + k + 2, word.end());
      pool[shorter] += c;
    }
  }
  return out;
}

NormalForm oracle_multiply(const NormalForm& a, const NormalForm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("normal form size mismatch");
  unsigned n = a.n();
  NormalForm out(n);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const MultiIndex &ia = ka.first, &ja = ka.second, &ib = kb.first, &jb = kb.second;
      // p^j q^k = sum_r r! C(j,r) C(k,r) q^(k-r) p^(j-r), index by index
      MultiIndex bound(n);
      for (unsigned i = 0; i < n; ++i) bound[i] = std::min(ja[i], ib[i]);
      for (const auto& r : sub_indices(bound)) {
        mpz_class c = 1;
        for (unsigned i = 0; i < n; ++i)
          c *= factorial(r[i]) * binomial(ja[i], r[i]) * binomial(ib[i], r[i]);
        out.add_term(ia + ib - r, ja - r + jb, ca * cb * Scalar(c));
      }
    }
  }
  return out;
}

namespace {

// One-index symmetrization: (q-exponent, p-exponent) -> coefficient.
using Single = std::map<std::pair<unsigned, unsigned>, Scalar>;

const Single& symmetrized_single(unsigned a, unsigned b) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, Single> sums;  // unnormalized word sums
  static std::map<std::pair<unsigned, unsigned>, Single> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find({a, b}); it != cache.end()) return it->second;

  // Sum(a, b) over all words with a letters p and b letters q,
  // Sum(a, b) = p Sum(a-1, b) + q Sum(a, b-1).
  std::function<const Single&(unsigned, unsigned)> word_sum = [&](unsigned x,
                                                                   unsigned y) -> const Single& {
    if (auto it = sums.find({x, y}); it != sums.end()) return it->second;
    Single s;
    if (x == 0 && y == 0) {
      s[{0, 0}] = Scalar(1);
    } else {
      if (x > 0) {
        for (const auto& [k, c] : word_sum(x - 1, y)) {
          auto [qi, pj] = k;
          s[{qi, pj + 1}] += c;
          if (qi > 0) s[{qi - 1, pj}] += c * Scalar(static_cast<long>(qi));
        }
      }
      if (y > 0) {
        for (const auto& [k, c] : word_sum(x, y - 1)) s[{k.first + 1, k.second}] += c;
      }
    }
    return sums.emplace(std::make_pair(x, y), std::move(s)).first->second;
  };

  Single r = word_sum(a, b);
  Scalar inv = Scalar(1) / Scalar(binomial(a + b, a));
  for (auto& [k, c] : r) c *= inv;
  return cache.emplace(std::make_pair(a, b), std::move(r)).first->second;
}

NormalForm symmetrize_monomial(unsigned n, const MultiIndex& e, const Scalar& c) {
  NormalForm acc = NormalForm::term(n, MultiIndex(n), MultiIndex(n), c);
  for (unsigned i = 0; i < n; ++i) {
    unsigned a = e[i], b = e[n + i];
    if (a == 0 && b == 0) continue;
    const Single& s = symmetrized_single(a, b);
    NormalForm next(n);
    for (const auto& [k, v] : acc.terms())
      for (const auto& [sk, sv] : s) {
        MultiIndex qe = k.first, pe = k.second;
        qe[i] += sk.first;
        pe[i] += sk.second;
        next.add_term(qe, pe, v * sv);
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

NormalForm symmetrize(const Poly& f) {
  require_symplectic(f);
  unsigned n = f.space().n;
  NormalForm out(n);
  for (const auto& [e, c] : f.terms()) out += symmetrize_monomial(n, e, c);
  return out;
}

Poly unsymmetrize(const NormalForm& a) {
  unsigned n = a.n();
  Space s = Space::symplectic(n);
  Poly out(s);
  NormalForm rem = a;
  while (!rem.is_zero()) {
    auto top = std::prev(rem.terms().end());
    MultiIndex qe = top->first.first, pe = top->first.second;
    Scalar c = top->second;
    MultiIndex e = pe.concat(qe);
    out.add_term(e, c);
    rem -= symmetrize_monomial(n, e, c);
  }
  return out;
}

Poly star_via_symmetrization(const Poly& f, const Poly& g) {
  require_same_space(f, g);
  return unsymmetrize(oracle_multiply(symmetrize(f), symmetrize(g)));
}

}  // namespace weyl
