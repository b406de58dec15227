#ifndef QBIF_POLY_HPP
#define QBIF_POLY_HPP

#include <span>
#include <utility>
#include <vector>

#include "qbif/complex_value.hpp"
#include "qbif/errors.hpp"

namespace qbif {

/// Dense univariate polynomial over Complex, constant term first.
class ComplexPoly {
 public:
  ComplexPoly() : coeffs_(1) {}
  explicit ComplexPoly(std::vector<Complex> coeffs);

  static ComplexPoly constant(Complex c);
  /// The monomial z.
  static ComplexPoly identity();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex(0); }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  const Complex& leading() const { return coeffs_.back(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex eval(const Complex& z) const;
  /// Value and derivative in one Horner pass.
  std::pair<Complex, Complex> eval_with_derivative(const Complex& z) const;
  ComplexPoly derivative() const;

  ComplexPoly& operator+=(const ComplexPoly& o);
  ComplexPoly& operator-=(const ComplexPoly& o);
  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
  ComplexPoly squared() const;

  /// Largest coefficient modulus.
  Real max_coeff_abs() const;
  /// Drop trailing coefficients with |c_k| <= rel_tol * max |c_i|.
  void trim(const Real& rel_tol);
  /// Drop exactly-zero leading entries (no thresholding).
  void strip_exact_zeros();

 private:
  std::vector<Complex> coeffs_;
};

/// Monic composition f_{c_N} o ... o f_{c_1} of quadratics z^2 + c_i,
/// first parameter applied first. Degree is exactly 2^N.
ComplexPoly compose_quadratics(std::span<const Complex> params, int degree_cap_log2 = 16);

/// Discriminant of p via the Sylvester resultant of (p, p'), computed by
/// partial-pivot elimination at working precision:
///   disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).
/// Zero exactly when p has a multiple root.
Complex discriminant(const ComplexPoly& p);

/// Recover a polynomial of degree <= degree_bound from samples taken at the
/// M-th roots of unity scaled by a common radius r_s > 0 (inverse DFT plus
/// radius unscaling). Trailing coefficients below 1e-30 of the largest one,
/// measured on the sampling circle, are trimmed.
ComplexPoly interpolate_from_circle(std::span<const std::pair<Complex, Complex>> samples,
                                    int degree_bound);

struct RootOptions {
  int max_sweeps = 200;       // Aberth-Ehrlich sweep cap
  bool warm_start = true;     // seed from a double-precision pre-solve
  int polish_steps = 4;       // Newton steps after the simultaneous phase
};

/// All degree-many roots with multiplicity, via Aberth-Ehrlich iteration
/// started on a perturbed circle and polished by Newton. Each root satisfies
/// |p(root)| <= 10^(-digits10/2) * sum_i |a_i| |root|^i; if any root fails
/// that residual bound after the sweep cap a NumericFailure carrying the
/// partial result is thrown.
std::vector<Complex> poly_roots(const ComplexPoly& p, const RootOptions& opts = {});

/// Thrown by poly_roots on nonconvergence; carries the best roots found.
class NumericFailure : public Error {
 public:
  NumericFailure(const std::string& what, std::vector<Complex> partial)
      : Error(what), partial_roots(std::move(partial)) {}
  std::vector<Complex> partial_roots;
};

}  // namespace qbif

#endif  // QBIF_POLY_HPP
