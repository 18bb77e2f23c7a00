#include "weyl/scalar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace weyl {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::from_string(const std::string& s) {
  // accepts the output format of to_string
  auto parse_q = [&](const std::string& t) {
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational '" + t + "'");
    if (q.get_den() == 0) throw std::domain_error("zero denominator");
    q.canonicalize();
    return q;
  };
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return Scalar(parse_q(s));
  std::string body = s.substr(0, s.size() - 1);
  if (!body.empty() && body.back() == '*') body.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  mpq_class re = 0;
  std::string ims = body;
  if (split != std::string::npos) {
    re = parse_q(body.substr(0, split));
    ims = body.substr(split);
  }
  mpq_class im;
  if (ims.empty() || ims == "+") im = 1;
  else if (ims == "-") im = -1;
  else im = parse_q(ims[0] == '+' ? ims.substr(1) : ims);
  return Scalar(re, im);
}

double Scalar::abs() const { return std::hypot(re_.get_d(), im_.get_d()); }

Scalar Scalar::pow(unsigned e) const {
  Scalar r(1), b(*this);
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class d = o.norm2();
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string ims;
  if (im_ == 1) ims = "i";
  else if (im_ == -1) ims = "-i";
  else ims = im_.get_str() + "*i";
  if (sgn(re_) == 0) return ims;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + ims;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

mpz_class factorial(unsigned k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace weyl
