#ifndef QBIF_COMPLEX_VALUE_HPP
#define QBIF_COMPLEX_VALUE_HPP

#include <complex>
#include <string>
#include <utility>

#include "qbif/precision.hpp"

namespace qbif {

/// Complex number over extended-precision reals, kept as an explicit
/// (re, im) pair so the working precision is a context parameter.
class Complex {
 public:
  Complex() : re_(0), im_(0) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Complex(Real re) : re_(std::move(re)), im_(0) {}
  Complex(double re, double im) : re_(re), im_(im) {}
  explicit Complex(double re) : re_(re), im_(0) {}
  explicit Complex(int re) : re_(re), im_(0) {}
  explicit Complex(const std::complex<double>& z) : re_(z.real()), im_(z.imag()) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }

  Complex operator-() const { return Complex(-re_, -im_); }

  Complex& operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real d = o.re_ * o.re_ + o.im_ * o.im_;
    Real r = (re_ * o.re_ + im_ * o.im_) / d;
    im_ = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re_ /= s;
    im_ /= s;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator*(const Real& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator/(Complex a, const Real& s) { return a /= s; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  std::complex<double> to_double() const {
    return {static_cast<double>(re_), static_cast<double>(im_)};
  }

 private:
  Real re_;
  Real im_;
};

inline Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

inline Real abs(const Complex& z) {
  using boost::multiprecision::hypot;
  return hypot(z.re(), z.im());
}

inline Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

/// Principal square root.
Complex sqrt(const Complex& z);

/// pi at the active working precision.
Real real_pi();

/// e^{i*theta} at working precision.
Complex unit_phase(const Real& theta);

/// Primitive k-th root of unity raised to power p: e^{2*pi*i*p/k}.
Complex root_of_unity(long p, long k);

inline bool is_finite(const Real& x) {
  using boost::multiprecision::isfinite;
  return isfinite(x);
}

inline bool is_finite(const Complex& z) {
  return is_finite(z.re()) && is_finite(z.im());
}

/// Decimal encoding with enough digits to reconstruct the value exactly at
/// the same binary precision.
std::string to_decimal_string(const Real& x);
Real real_from_decimal(const std::string& s);

}  // namespace qbif

#endif  // QBIF_COMPLEX_VALUE_HPP
