#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace weyl {

// Exact Gaussian rational re + im*i.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}
  Scalar(int v) : re_(v) {}
  explicit Scalar(mpq_class re, mpq_class im = 0);
  template <class T, class U>
  explicit Scalar(const __gmp_expr<T, U>& e) : re_(e) {
    re_.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }
  static Scalar rational(long num, long den);
  static Scalar from_string(const std::string& s);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }
  double abs() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Scalar pow(unsigned e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "a/b", "a/b+c/d*i", "c/d*i", "i"
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

mpz_class factorial(unsigned k);
mpz_class binomial(unsigned n, unsigned k);

}  // namespace weyl
