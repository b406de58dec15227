#include "qbif/dynamics.hpp"

#include <cmath>
#include <limits>

#include "qbif/poly.hpp"

namespace qbif {

NoiseRealization::NoiseRealization(std::vector<cplx> params, cplx center, double radius)
    : params_(std::move(params)), center_(center), radius_(radius) {
  if (radius < 0) throw InvalidArgument("NoiseRealization: negative radius");
  // Allow a few ulps of headroom: center + radius*offset rounds.
  const double slack = 64 * std::numeric_limits<double>::epsilon() *
                       (std::abs(center) + radius + 1);
  for (const cplx& c : params_) {
    if (!(std::abs(c - center_) <= radius_ + slack))
      throw InvalidArgument("NoiseRealization: entry outside the generating disk");
  }
}

double escape_radius(cplx center, double radius) {
  if (radius < 0) throw InvalidArgument("escape_radius: negative radius");
  const double C = std::abs(center) + radius;
  return 1.0 + std::sqrt(1.0 + C);
}

OrbitOutcome iterate_orbit(cplx z0, std::span<const cplx> omega, double R, int horizon) {
  if (horizon < 1) throw InvalidArgument("iterate_orbit: horizon >= 1 required");
  if (static_cast<int>(omega.size()) < horizon)
    throw InvalidArgument("iterate_orbit: omega shorter than horizon");
  return iterate_orbit_gen(z0, [&](int n) { return omega[static_cast<std::size_t>(n)]; }, R,
                           horizon);
}

double green_value(cplx z0, std::span<const cplx> omega, int depth) {
  if (depth < 1) throw InvalidArgument("green_value: depth >= 1 required");
  if (static_cast<int>(omega.size()) < depth)
    throw InvalidArgument("green_value: omega shorter than depth");
  const double big = 1e8;
  cplx z = z0;
  int n = 0;
  while (n < depth && std::abs(z) <= big) {
    z = z * z + omega[static_cast<std::size_t>(n)];
    ++n;
  }
  const double mod = std::abs(z);
  const double logplus = mod > 1.0 ? std::log(mod) : 0.0;
  return std::ldexp(logplus, -n);
}

std::vector<Complex> superattracting_parameter(int period, bool primitive_only) {
  if (period < 1 || period > 8)
    throw InvalidArgument("superattracting_parameter: period must be in [1, 8]");

  // Critical polynomial q_p(c) = f_c^p(0) composed in the variable c:
  // q_1 = c, q_{n+1} = q_n^2 + c.
  ComplexPoly q = ComplexPoly::identity();
  for (int i = 1; i < period; ++i) {
    q = q.squared();
    q += ComplexPoly::identity();
  }
  std::vector<Complex> roots = poly_roots(q);

  if (!primitive_only) return roots;

  // Keep roots whose critical orbit first returns to 0 exactly at `period`.
  const Real thr = ldexp(Real(1), -static_cast<int>(PrecisionContext::active_bits()) / 2);
  std::vector<Complex> primitive;
  for (const Complex& c : roots) {
    Complex z(0);
    int first_return = 0;
    for (int n = 1; n <= period; ++n) {
      z = z * z + c;
      if (abs(z) <= thr * (1 + abs(c))) {
        first_return = n;
        break;
      }
    }
    if (first_return == period) primitive.push_back(c);
  }
  return primitive;
}

}  // namespace qbif
