#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include "toda/rational.hpp"

namespace toda {

// Complex number with exact rational parts: the Gaussian rationals Q(i).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ExactScalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  ExactScalar conj() const { return {re_, -im_}; }
  // |x|^2, always real and exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  ExactScalar inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend ExactScalar operator-(const ExactScalar& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

// "1/2", "-3i/4", "1/2+3/4i", "1+i". The string form used for coordinates
// and matrix entries.
ExactScalar parse_scalar(std::string_view text);
std::string to_string(const ExactScalar& x);

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace toda
