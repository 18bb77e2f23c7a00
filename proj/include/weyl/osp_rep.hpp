#pragma once

#include <set>
#include <string>
#include <vector>

#include "weyl/linalg.hpp"
#include "weyl/moyal.hpp"

namespace weyl {

// Monomial basis of S^1 + S^2.
std::vector<Poly> osp_basis(unsigned n);

struct OspStructureReport {
  unsigned n = 0;
  std::size_t dimension = 0;
  std::size_t expected_dimension = 0;  // 2n + n(2n+1)
  bool closed = false;
  bool super_jacobi = false;
  std::vector<std::string> witnesses;
  bool ok() const { return dimension == expected_dimension && closed && super_jacobi; }
};

OspStructureReport osp_structure_check(unsigned n, bool check_jacobi = true);

// H_i = -1/2 [p_i, q_i], i 1-based
Poly cartan_element(unsigned n, unsigned i);

struct RootDatum {
  std::string label;
  Poly vector;
  std::vector<int> weight;  // in the basis w_1..w_n
  bool positive = false;
  bool odd = false;
};

std::vector<RootDatum> cartan_and_roots(unsigned n);
// [p_i, q_{i+1}] for i < n, then p_n
std::vector<Poly> fundamental_root_vectors(unsigned n);

struct RootTableReport {
  unsigned n = 0;
  std::vector<RootDatum> roots;
  bool cartan_is_minus_pq = false;
  bool all_eigen = false;
  std::vector<std::string> witnesses;
  bool ok() const { return cartan_is_minus_pq && all_eigen; }
};

RootTableReport verify_root_table(unsigned n);

// Selects the sum of S^k over `degrees`, symplectic(n).
struct SubspaceSpec {
  unsigned n = 1;
  std::set<unsigned> degrees;
  unsigned max_degree = 0;
  std::string label;

  static SubspaceSpec A(unsigned n, unsigned k);  // S^{2k-1} + S^{2k}
  static SubspaceSpec B(unsigned n, unsigned k);  // S^{2k} + S^{2k+1}
  static SubspaceSpec algebra(unsigned n);        // S^1 + S^2
  static SubspaceSpec degree(unsigned n, unsigned k);
  static SubspaceSpec positive_part(unsigned n, unsigned max_degree);  // S^1 + ... + S^max

  MonomialBasis basis() const;
};

struct StabilityReport {
  std::string space, acting;
  BracketKind action = BracketKind::super;
  bool stable = false;
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
};

StabilityReport check_stability(const SubspaceSpec& spec, BracketKind action,
                                const SubspaceSpec& acting);

struct HighestWeightReport {
  BracketKind action = BracketKind::super;  // ad for even v, ad' for odd v
  bool eigenvector = false;
  std::vector<Scalar> weight;
  bool annihilated = false;
  std::vector<std::string> witnesses;
};

HighestWeightReport highest_weight_check(const Poly& v, unsigned n);

struct CyclicReport {
  std::size_t generated_dim = 0;
  std::size_t target_dim = 0;
  bool generates = false;
};

// Span of everything reachable from v by repeated action of the acting basis,
// kept inside the target space.
CyclicReport cyclic_generation(const Poly& v, BracketKind action, const SubspaceSpec& acting,
                               const SubspaceSpec& target);

struct DegreeRank {
  unsigned degree = 0;
  std::size_t rank = 0;
  std::size_t dim = 0;
  bool full() const { return rank == dim; }
};

struct DegreeImageReport {
  unsigned l = 0, m = 0, n = 1;
  BracketKind kind = BracketKind::lie;
  std::vector<DegreeRank> reached;  // degrees with nonzero image
  std::set<unsigned> predicted;
  std::size_t total_rank = 0;
  std::size_t total_dim = 0;  // sum of dim S^d over predicted degrees
  bool matches_prediction() const;
  bool ok() const { return matches_prediction() && total_rank == total_dim; }
};

// Degrees d where S^d receives a C_k with (1 - eps (-1)^k) != 0, eps the bracket sign.
std::set<unsigned> predicted_bracket_degrees(unsigned l, unsigned m, BracketKind kind);
DegreeImageReport bracket_degree_image(unsigned l, unsigned m, BracketKind kind, unsigned n);

struct CkImageReport {
  unsigned k = 0, l = 0, m = 0, n = 1;
  std::size_t rank = 0;
  std::size_t target_dim = 0;  // 0 when k > min(l, m)
  bool expect_zero() const { return k > std::min(l, m); }
  bool ok() const { return expect_zero() ? rank == 0 : rank == target_dim; }
};

CkImageReport ck_image_rank(unsigned k, unsigned l, unsigned m, unsigned n);

struct CgReport {
  unsigned l = 0, m = 0;
  std::size_t rank = 0;
  std::size_t expected = 0;  // (l+1)(m+1)
  std::size_t target_dim = 0;
  bool bijective() const { return rank == expected && target_dim == expected; }
};

CgReport clebsch_gordan_n1(unsigned l, unsigned m);

struct MussonReport {
  unsigned n = 1, max_degree = 0;
  std::vector<DegreeRank> per_degree;
  bool all_spanned = false;
  bool str_vanishes = false;
  bool ok() const { return all_spanned && str_vanishes; }
};

MussonReport musson_decomposition_check(unsigned max_degree, unsigned n);

Poly cocycle_xi(const Poly& f);

struct Sp2nReport {
  unsigned n = 0;
  bool homomorphism = false;
  bool form_invariant = false;
  bool injective = false;
  std::vector<std::string> witnesses;
  bool ok() const { return homomorphism && form_invariant && injective; }
};

// X -> {X, .} restricted to S^1, X in S^2
Matrix sp_matrix(const Poly& x);
Sp2nReport sp2n_embedding_check(unsigned n);

struct ThetaReport {
  unsigned n = 0;
  Scalar theta_one_one;
  bool half_poisson = false;
  bool supersymmetric = false;
  bool invariant = false;
  std::vector<std::string> witnesses;
  bool ok() const { return theta_one_one == Scalar(-1) && half_poisson && supersymmetric && invariant; }
};

// b_form on K + S^1 under ad' of S^1 + S^2
ThetaReport theta_check(unsigned n);

struct GramReport {
  unsigned l = 0, n = 1;
  Matrix gram;
  std::size_t rank = 0;
  bool symmetric = false;
  bool antisymmetric = false;
  bool nonsingular() const { return rank == gram.size(); }
};

GramReport kappa_gram(unsigned l, unsigned n);
// true when kappa vanishes on every monomial pair from S^l x S^m
bool kappa_block_zero(unsigned l, unsigned m, unsigned n);

}  // namespace weyl
