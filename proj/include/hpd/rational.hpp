#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hpd {

// Error type for every domain failure in the library (bad input, violated
// precondition, failed exact division, ...).  Carries a plain message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact Gaussian rational a + b*i with arbitrary-precision rational parts.
// All arithmetic is exact; there is no floating point anywhere downstream.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussianRational real(const mpq_class& re) { return {re, mpq_class(0)}; }
  static GaussianRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }
  // num/den constructor for the real part; den must be nonzero.
  static GaussianRational fraction(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return real(q);
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, mpq_class(-im_)}; }

  GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw Error("division by zero Gaussian rational");
    // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2), exact.
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = r;
    im_ = i;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Canonical printing, matching the parser grammar:
  //   real:       "3/2", "-2"
  //   imaginary:  "i", "-i", "3/2*i"
  //   complex:    "(1+2*i)", "(1-2/3*i)"
  std::string str() const;

 private:
  mpq_class re_, im_;
};

}  // namespace hpd
