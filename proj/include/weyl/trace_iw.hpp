#pragma once

#include <complex>
#include <string>
#include <vector>

#include "weyl/operator_calculus.hpp"

namespace weyl {

enum class SeriesStatus { converged, diverged, undetermined };
const char* to_string(SeriesStatus s);

// Batches are the groups |I| = l of the normal-symbol series.
// A component converges after `converge_run` consecutive batch deltas below tol,
// counted once l >= max(operator onset, component degree).
// It diverges after `diverge_run` consecutive nonzero batches whose magnitudes and
// ratios are both non-decreasing, or when a magnitude exceeds `cap`.
struct SummationPolicy {
  double tol = 1e-12;
  unsigned max_terms = 400;
  unsigned converge_run = 3;
  unsigned diverge_run = 5;
  double cap = 1e12;
};

std::string format_number(std::complex<double> z);

struct TraceResult {
  SeriesStatus status = SeriesStatus::undetermined;
  Scalar partial;  // exact partial sum
  std::complex<double> value;
  unsigned terms_used = 0;
  bool exact = false;  // the trailing batches vanished identically
  std::string value_string() const;
};

struct SeriesComponent {
  unsigned degree = 0;
  SeriesStatus status = SeriesStatus::undetermined;
  Poly value;
  unsigned terms_used = 0;
  bool exact = false;
};

struct GradedSeries {
  unsigned n = 1;
  unsigned max_degree = 0;
  std::vector<SeriesComponent> components;  // one per degree 0..max_degree

  SeriesStatus status() const;
  bool exists() const { return status() == SeriesStatus::converged; }
  Poly sum() const;
  const SeriesComponent& component(unsigned k) const { return components.at(k); }
};

Scalar finite_rank_supertrace(const LinOp& t);

TraceResult str_wbar(const LinOp& t, const SummationPolicy& policy = {});
TraceResult str_wbar(const NormalSymbol& sym, const SummationPolicy& policy = {});
TraceResult rstr(const LinOp& t, const SummationPolicy& policy = {});
TraceResult rstr(const NormalSymbol& sym, const SummationPolicy& policy = {});

struct BinomialTailReport {
  MultiIndex index;
  std::vector<Scalar> partial_sums;  // after |S| <= 0, 1, ...
  Scalar limit;                      // 2^(|I| + n)
  Scalar gap;
  bool monotone = false;
};

BinomialTailReport binomial_tail_identity_check(const MultiIndex& index, unsigned batches);

GradedSeries iw_numeric(const LinOp& t, unsigned max_degree, const SummationPolicy& policy = {});
GradedSeries iw_numeric(const NormalSymbol& sym, unsigned max_degree,
                        const SummationPolicy& policy = {});

// sum_k f^k / k!, kept to degree <= max_degree; f must vanish at 0
Poly exp_truncated(const Poly& f, unsigned max_degree);

// |1 - lambda|^2 < 4, exactly
bool scaling_in_domain(const Scalar& lambda);

// Throws std::domain_error outside |1 - lambda| < 2.
GradedSeries iw_closed_form(const SpecialOp& op, unsigned n, unsigned max_degree);
// The half-angle form e^{-tau/2}/cosh(tau/2) exp(2 tanh(tau/2) sum p_i q_i), evaluated
// in Q(s) with s^2 = lambda.
Poly iw_expeuler_half_angle(const Scalar& lambda, unsigned n, unsigned max_degree);
// IW(T)(0) / 2^n from the closed form
Scalar rstr_closed_form(const SpecialOp& op, unsigned n);

}  // namespace weyl
