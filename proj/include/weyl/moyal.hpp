#pragma once

#include <vector>

#include "weyl/poly.hpp"

namespace weyl {

enum class BracketKind { lie, super, twisted_lie, twisted_super };

const char* to_string(BracketKind k);
BracketKind bracket_kind_from_string(const std::string& s);

struct DeformationParameter {
  Scalar t{1};
};

Poly ck_coefficient(unsigned k, const Poly& f, const Poly& g);

Poly star(const Poly& f, const Poly& g, const DeformationParameter& t = {});
// Only the components of degree <= max_degree of f * g.
Poly star_truncated(const Poly& f, const Poly& g, unsigned max_degree,
                    const DeformationParameter& t = {});
Poly star_n1_closed(const Poly& f, const Poly& g, const DeformationParameter& t = {});

Poly bracket(BracketKind kind, const Poly& f, const Poly& g);

Scalar supertrace(const Poly& f);
Scalar kappa(const Poly& f, const Poly& g);
Scalar b_form(const Poly& f, const Poly& g);

// Coefficients c_0..c_beta of L_beta^(alpha)(x) in powers of x.
std::vector<Scalar> laguerre_coefficients(unsigned beta, long alpha);
Poly laguerre_poly(unsigned beta, long alpha, const Poly& x);

// q1^i * p1^j in symplectic(1) via the Laguerre closed form.
Poly star_monomial_closed(unsigned i, unsigned j);

}  // namespace weyl
