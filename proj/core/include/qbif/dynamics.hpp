#ifndef QBIF_DYNAMICS_HPP
#define QBIF_DYNAMICS_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qbif/complex_value.hpp"
#include "qbif/errors.hpp"

namespace qbif {

/// Orbit iteration runs in binary64; the 53-bit context is the fast lane of
/// the precision-configurable ComplexValue model.
using cplx = std::complex<double>;

/// Result of iterating one parameter sequence to escape or to the horizon.
struct OrbitOutcome {
  enum class Status { Escaped, Survived };
  Status status = Status::Survived;
  int escape_step = 0;   // minimal n with |F^n(z0)| > R when Escaped
  int horizon = 0;       // valid when Survived
  double last_modulus = 0.0;

  bool escaped() const { return status == Status::Escaped; }

  friend bool operator==(const OrbitOutcome&, const OrbitOutcome&) = default;
};

/// A sampled finite prefix (c_1, ..., c_n) of a noise sequence. Entries are
/// checked against the generating disk at construction.
class NoiseRealization {
 public:
  NoiseRealization(std::vector<cplx> params, cplx center, double radius);

  std::span<const cplx> view() const { return params_; }
  std::size_t size() const { return params_.size(); }
  const cplx& operator[](std::size_t i) const { return params_[i]; }
  cplx center() const { return center_; }
  double radius() const { return radius_; }

 private:
  std::vector<cplx> params_;
  cplx center_;
  double radius_;
};

/// Escape radius R = 1 + sqrt(1 + C) with C = |center| + radius: the smallest
/// R with R^2 - C >= 2R, so |z| >= R implies |z^2 + c'| >= 2R for every
/// c' in B(center, radius).
double escape_radius(cplx center, double radius);

/// Iterate z_n = z_{n-1}^2 + c_n; escape at the first n with |z_n| > R.
OrbitOutcome iterate_orbit(cplx z0, std::span<const cplx> omega, double R, int horizon);

/// Same iteration with parameters drawn on demand; gen(n) must return c_{n+1}.
template <typename Gen>
OrbitOutcome iterate_orbit_gen(cplx z0, Gen&& gen, double R, int horizon) {
  if (horizon < 1) throw InvalidArgument("iterate_orbit: horizon >= 1 required");
  const double r2 = R * R;
  cplx z = z0;
  for (int n = 1; n <= horizon; ++n) {
    z = z * z + gen(n - 1);
    if (std::norm(z) > r2)
      return {OrbitOutcome::Status::Escaped, n, 0, std::abs(z)};
  }
  return {OrbitOutcome::Status::Survived, 0, horizon, std::abs(z)};
}

/// Green-function approximation 2^{-n} log+ |F^n(z0)| at the last computed
/// step n <= depth, stopping once |z| > 1e8 (the exact doubling relation
/// makes deeper iterates redundant).
double green_value(cplx z0, std::span<const cplx> omega, int depth);

/// All parameters c with f_c^{period}(0) = 0, via the critical polynomial
/// composed in c and poly_roots. With primitive_only, roots whose actual
/// critical period divides period strictly are dropped.
std::vector<Complex> superattracting_parameter(int period, bool primitive_only = false);

}  // namespace qbif

#endif  // QBIF_DYNAMICS_HPP
