#include "qbif/bif_bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>

#include "qbif/detail/parallel.hpp"

namespace qbif {

namespace {

using boost::multiprecision::pow;

Real abs_pow_horner(const ComplexPoly& p, const Real& x) {
  // sum_i |a_i| x^i
  Real s = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) s = s * x + abs(p[i]);
  return s;
}

}  // namespace

bool parabolic_thresholds_met(const ParabolicRootCertificate& cert) {
  return cert.residual <= Real(kParabolicResidualRel) * cert.residual_scale &&
         cert.fixed_point_gap <= Real(kParabolicGapMax) &&
         cert.multiplier_error <= Real(kParabolicMultErrMax);
}

// ---------------------------------------------------------------------------
// Attracting cycles and invariant disks
// ---------------------------------------------------------------------------

CycleData find_attracting_cycle(const Complex& c, int period) {
  if (period < 1 || period > 8)
    throw InvalidArgument("find_attracting_cycle: period must be in [1, 8]");

  // Fixed-point polynomial of f_c^period.
  ComplexPoly it = ComplexPoly::identity();
  for (int i = 0; i < period; ++i) {
    it = it.squared();
    it += ComplexPoly::constant(c);
  }
  ComplexPoly F = it;
  F -= ComplexPoly::identity();
  std::vector<Complex> roots = poly_roots(F);

  const Real match_tol =
      ldexp(Real(1), -static_cast<int>(PrecisionContext::active_bits()) / 2);
  std::vector<bool> used(roots.size(), false);

  auto mark_near = [&](const Complex& z) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!used[i] && abs(roots[i] - z) <= match_tol * (1 + abs(z))) used[i] = true;
    }
  };

  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const Complex z0 = roots[i];
    // Minimal return time of z0 under f_c.
    Complex w = z0;
    int first_return = 0;
    std::vector<Complex> orbit;
    for (int m = 1; m <= period; ++m) {
      orbit.push_back(w);
      w = w * w + c;
      if (abs(w - z0) <= match_tol * (1 + abs(z0))) {
        first_return = m;
        break;
      }
    }
    for (const Complex& pt : orbit) mark_near(pt);
    if (first_return != period) continue;

    Complex multiplier(1);
    for (const Complex& pt : orbit) multiplier *= Complex(2) * pt;
    if (!(abs(multiplier) < 1)) continue;

    // Canonical start: lexicographically smallest point.
    std::size_t start = 0;
    for (std::size_t j = 1; j < orbit.size(); ++j) {
      const Complex& a = orbit[j];
      const Complex& b = orbit[start];
      if (a.re() < b.re() || (a.re() == b.re() && a.im() < b.im())) start = j;
    }
    std::rotate(orbit.begin(), orbit.begin() + static_cast<long>(start), orbit.end());

    CycleData cycle;
    cycle.parameter = c;
    cycle.period = period;
    cycle.points = std::move(orbit);
    cycle.multiplier = multiplier;
    return cycle;
  }
  throw NotFound("find_attracting_cycle: no attracting cycle of the requested period");
}

DiskCheck check_invariant_disks(const CycleData& cycle, std::span<const Real> radii,
                                const Real& r, const Real& center_offset) {
  const int p = cycle.period;
  if (static_cast<int>(radii.size()) != p)
    throw InvalidArgument("check_invariant_disks: radii length must equal the period");
  for (const Real& d : radii)
    if (!(d > 0)) throw InvalidArgument("check_invariant_disks: radii must be positive");
  if (r < 0) throw InvalidArgument("check_invariant_disks: negative noise radius");

  DiskCheck out;
  std::vector<Real> slack(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) {
    const Real aj = abs(cycle.points[static_cast<std::size_t>(j)]);
    const Real& dj = radii[static_cast<std::size_t>(j)];
    const Real lhs = dj * dj + 2 * aj * dj + (center_offset + r);
    const Real rhs = radii[static_cast<std::size_t>((j + 1) % p)];
    slack[static_cast<std::size_t>(j)] = rhs - lhs;
    if (slack[static_cast<std::size_t>(j)] < 0) {
      out.feasible = false;
      out.violated_index = j;
      out.violation = lhs - rhs;
      return out;
    }
  }
  out.feasible = true;
  out.certificate = InvariantDiskCertificate{
      cycle, std::vector<Real>(radii.begin(), radii.end()), r, center_offset, std::move(slack)};
  return out;
}

namespace {

// Minimal radii propagated once around the cycle from delta_0; feasible when
// the propagated value returns below delta_0.
struct Propagation {
  bool feasible = false;
  Real defect;  // propagated - delta_0
  std::vector<Real> radii;
};

Propagation propagate_disks(const CycleData& cycle, const Real& delta0, const Real& r) {
  const int p = cycle.period;
  Propagation out;
  out.radii.reserve(static_cast<std::size_t>(p));
  Real d = delta0;
  for (int j = 0; j < p; ++j) {
    out.radii.push_back(d);
    const Real aj = abs(cycle.points[static_cast<std::size_t>(j)]);
    d = d * d + 2 * aj * d + r;
  }
  out.defect = d - delta0;
  out.feasible = out.defect <= 0;
  return out;
}

std::optional<std::vector<Real>> feasible_radii(const CycleData& cycle, const Real& cap,
                                                const Real& r) {
  // Refining grid over delta_0 in (0, cap].
  Real lo = 0, hi = cap;
  const int points = 192;
  for (int round = 0; round < 3; ++round) {
    Real best_defect;
    Real best_delta;
    bool have_best = false;
    const Real step = (hi - lo) / points;
    if (!(step > 0)) break;
    for (int g = 1; g <= points; ++g) {
      const Real delta0 = lo + step * g;
      Propagation prop = propagate_disks(cycle, delta0, r);
      if (prop.feasible) return std::move(prop.radii);
      if (!have_best || prop.defect < best_defect) {
        best_defect = prop.defect;
        best_delta = delta0;
        have_best = true;
      }
    }
    if (!have_best) break;
    lo = best_delta - 2 * step;
    hi = best_delta + 2 * step;
    if (lo < 0) lo = 0;
    if (hi > cap) hi = cap;
  }
  return std::nullopt;
}

}  // namespace

std::pair<Real, InvariantDiskCertificate> lower_bound_invariant_disks(const Complex& c,
                                                                      int period,
                                                                      const Real& tol) {
  if (!(tol > 0)) throw InvalidArgument("lower_bound_invariant_disks: tol must be positive");
  const CycleData cycle = find_attracting_cycle(c, period);

  const Real modulus = abs(cycle.multiplier);
  Real cap = (1 - pow(modulus, Real(1) / period)) / 2;
  if (!(cap > 0)) cap = Real(1) / 4;

  Real lo = 0, hi = 1;
  std::optional<std::vector<Real>> best_radii = feasible_radii(cycle, cap, lo);
  if (!best_radii)
    throw NotFound("lower_bound_invariant_disks: no invariant disks even at r = 0");
  while (hi - lo > tol) {
    const Real mid = (lo + hi) / 2;
    auto radii = feasible_radii(cycle, cap, mid);
    if (radii) {
      lo = mid;
      best_radii = std::move(radii);
    } else {
      hi = mid;
    }
  }

  DiskCheck check = check_invariant_disks(cycle, *best_radii, lo);
  if (!check.feasible)
    throw NotFound("lower_bound_invariant_disks: certificate re-check failed");
  return {lo, std::move(check.certificate)};
}

// ---------------------------------------------------------------------------
// The c = -1 closed forms
// ---------------------------------------------------------------------------

Real rho_domain_max() {
  // positive root of delta^3 + 2 delta - 1
  ComplexPoly cubic{std::vector<Complex>{Complex(-1), Complex(2), Complex(0), Complex(1)}};
  for (const Complex& root : poly_roots(cubic)) {
    if (abs(root.im()) < Real("1e-30") && root.re() > 0) return root.re();
  }
  throw NotFound("rho_domain_max: positive real root not found");
}

Real rho_of_delta(const Real& delta) {
  static const double kDomainMaxApprox = 0.45339765151640377;
  if (delta < 0) throw InvalidArgument("rho_of_delta: delta must be >= 0");
  if (delta > Real(kDomainMaxApprox) + Real("1e-12")) {
    // Only resolve the exact cubic root near the boundary.
    if (delta > rho_domain_max() * (1 + Real("1e-30")))
      throw InvalidArgument("rho_of_delta: delta above the positive root of d^3 + 2d - 1");
  }
  using boost::multiprecision::sqrt;
  return -(2 * delta * delta + 3) / 2 + sqrt(4 * delta * delta + 4 * delta + 9) / 2;
}

std::pair<Real, Real> maximize_rho() {
  // rho'(delta) = 0 at the unique positive root of 16 d^4+16 d^3+32 d^2-4d-1.
  ComplexPoly quartic{std::vector<Complex>{Complex(-1), Complex(-4), Complex(32), Complex(16),
                                           Complex(16)}};
  for (const Complex& root : poly_roots(quartic)) {
    if (abs(root.im()) < Real("1e-30") && root.re() > 0)
      return {root.re(), rho_of_delta(root.re())};
  }
  throw NotFound("maximize_rho: positive real quartic root not found");
}

// ---------------------------------------------------------------------------
// Discriminant pipeline
// ---------------------------------------------------------------------------

namespace {

void validate_tuple(int N, int k, std::span<const int> tuple) {
  if (N < 1) throw InvalidArgument("discriminant bound: N >= 1 required");
  if (N > 12) throw ResourceLimit("discriminant bound: N too large (composition degree cap)");
  if (k < 1) throw InvalidArgument("discriminant bound: k >= 1 required");
  if (static_cast<int>(tuple.size()) != N)
    throw InvalidArgument("discriminant bound: tuple length must equal N");
  for (int p : tuple)
    if (p < 0 || p >= k) throw InvalidArgument("discriminant bound: tuple entries must lie in [0, k)");
}

ComplexPoly fixed_point_poly(const Complex& center, std::span<const Complex> zetas,
                             const Complex& rho) {
  std::vector<Complex> params(zetas.size());
  for (std::size_t i = 0; i < zetas.size(); ++i) params[i] = center + rho * zetas[i];
  ComplexPoly g = compose_quadratics(params);
  g -= ComplexPoly::identity();
  return g;
}

/// Interpolated Delta(rho) for one tuple; throws DegreeBoundExceeded when the
/// trailing coefficients stay significant after the sample-doubling retries.
ComplexPoly interpolate_delta(const Complex& center, std::span<const Complex> zetas,
                              int degree_bound, const Real& sample_radius) {
  int M = 1;
  while (M < degree_bound + 1) M <<= 1;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Complex> omega(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) omega[static_cast<std::size_t>(j)] = root_of_unity(j, M);

    std::vector<std::pair<Complex, Complex>> samples(static_cast<std::size_t>(M));
    std::atomic<bool> failed{false};
    detail::parallel_for(static_cast<std::size_t>(M), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t j = lo; j < hi; ++j) {
        const Complex rho = omega[j] * sample_radius;
        try {
          samples[j] = {rho, discriminant(fixed_point_poly(center, zetas, rho))};
        } catch (const Error&) {
          failed.store(true);
        }
      }
    });
    if (failed.load()) throw NumericFailure("discriminant sampling failed", {});

    ComplexPoly delta = interpolate_from_circle(samples, M - 1);
    if (delta.degree() <= degree_bound) return delta;
    M <<= 1;
  }
  throw DegreeBoundExceeded(
      "discriminant bound: Delta(rho) keeps significant coefficients at the degree bound");
}

/// Certificate for a fixed candidate root at the active precision.
ParabolicRootCertificate certify_rho(const Complex& center, int N, int k,
                                     std::span<const int> tuple,
                                     std::span<const Complex> zetas, const Complex& rho0,
                                     const ComplexPoly& delta_poly) {
  ParabolicRootCertificate cert;
  cert.center = center;
  cert.N = N;
  cert.k = k;
  cert.tuple.assign(tuple.begin(), tuple.end());
  cert.rho0 = rho0;
  cert.bound = abs(rho0);
  cert.precision_bits = PrecisionContext::active_bits();

  const ComplexPoly P = fixed_point_poly(center, zetas, rho0);
  cert.residual = abs(discriminant(P));
  cert.residual_scale = abs_pow_horner(delta_poly, abs(rho0));

  const std::vector<Complex> fixed_points = poly_roots(P);
  Real best_gap;
  std::size_t ia = 0, ib = 1;
  bool have = false;
  for (std::size_t i = 0; i < fixed_points.size(); ++i) {
    for (std::size_t j = i + 1; j < fixed_points.size(); ++j) {
      Real g = abs(fixed_points[i] - fixed_points[j]);
      if (!have || g < best_gap) {
        best_gap = g;
        ia = i;
        ib = j;
        have = true;
      }
    }
  }
  cert.fixed_point_gap = have ? best_gap : Real(0);

  // Multiplier of the composition at the clustered fixed point (chain rule).
  Complex w = (fixed_points[ia] + fixed_points[ib]) / Real(2);
  Complex lambda(1);
  for (std::size_t i = 0; i < zetas.size(); ++i) {
    lambda *= Complex(2) * w;
    w = w * w + (center + rho0 * zetas[i]);
  }
  cert.multiplier_error = abs(lambda - Complex(1));
  return cert;
}

ParabolicRootCertificate discriminant_upper_bound_impl(const Complex& center, int N, int k,
                                                       std::span<const int> tuple,
                                                       const Real& sample_radius) {
  std::vector<Complex> zetas(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i)
    zetas[static_cast<std::size_t>(i)] = root_of_unity(tuple[static_cast<std::size_t>(i)], k);

  const int degree_bound = 1 << (N + 1);
  const ComplexPoly delta_poly = interpolate_delta(center, zetas, degree_bound, sample_radius);
  if (delta_poly.degree() < 1)
    throw NotFound("discriminant bound: Delta(rho) is constant");

  std::vector<Complex> roots = poly_roots(delta_poly);
  std::sort(roots.begin(), roots.end(),
            [](const Complex& a, const Complex& b) { return norm(a) < norm(b); });

  const Real degeneracy_cut = Real("1e-8");
  for (const Complex& rho0 : roots) {
    if (abs(rho0) < degeneracy_cut) continue;  // elimination noise at the superattracting center
    ParabolicRootCertificate cert = certify_rho(center, N, k, tuple, zetas, rho0, delta_poly);
    if (parabolic_thresholds_met(cert)) return cert;
  }
  throw NotFound("discriminant bound: no root passed certificate validation");
}

}  // namespace

ParabolicRootCertificate discriminant_upper_bound(const Complex& center, int N, int k,
                                                  std::span<const int> tuple,
                                                  unsigned precision_bits) {
  validate_tuple(N, k, tuple);
  PrecisionContext ctx(precision_bits);
  return discriminant_upper_bound_impl(center, N, k, tuple, Real(1) / 10);
}

ParabolicReplay revalidate_parabolic(const ParabolicRootCertificate& cert) {
  PrecisionContext ctx(2 * cert.precision_bits);
  std::vector<Complex> zetas(cert.tuple.size());
  for (std::size_t i = 0; i < cert.tuple.size(); ++i)
    zetas[i] = root_of_unity(cert.tuple[i], cert.k);
  const int degree_bound = 1 << (cert.N + 1);
  const ComplexPoly delta_poly =
      interpolate_delta(cert.center, zetas, degree_bound, Real(1) / 10);
  ParabolicReplay replay;
  replay.recomputed =
      certify_rho(cert.center, cert.N, cert.k, cert.tuple, zetas, cert.rho0, delta_poly);
  replay.thresholds_met = parabolic_thresholds_met(replay.recomputed);
  return replay;
}

// ---------------------------------------------------------------------------
// Tuple scan with symmetry reduction
// ---------------------------------------------------------------------------

namespace {

std::vector<int> tuple_of_index(long index, int N, int k) {
  std::vector<int> t(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(index % k);
    index /= k;
  }
  return t;
}

/// Lexicographic minimum over cyclic rotations and global phase shifts.
std::vector<int> canonical_tuple(const std::vector<int>& t, int k) {
  const int N = static_cast<int>(t.size());
  std::vector<int> best = t;
  std::vector<int> cand(static_cast<std::size_t>(N));
  for (int r = 0; r < N; ++r) {
    for (int s = 0; s < k; ++s) {
      for (int i = 0; i < N; ++i)
        cand[static_cast<std::size_t>(i)] =
            (t[static_cast<std::size_t>((i + r) % N)] + s) % k;
      if (cand < best) best = cand;
    }
  }
  return best;
}

}  // namespace

ScanResult scan_discriminant(const Complex& center, int N, int k, unsigned precision_bits,
                             const ScanOptions& opts) {
  if (N < 1 || k < 1) throw InvalidArgument("scan_discriminant: N, k >= 1 required");
  double total_d = std::pow(static_cast<double>(k), N);
  if (total_d > static_cast<double>(opts.tuple_cap))
    throw ResourceLimit("scan_discriminant: k^N exceeds the tuple cap");
  const long total = static_cast<long>(total_d + 0.5);

  PrecisionContext ctx(precision_bits);
  const Real rs(opts.sample_radius);

  // Group raw tuples into symmetry classes (a single class each when
  // deduplication is off).
  std::map<std::vector<int>, std::vector<long>> classes;
  for (long idx = 0; idx < total; ++idx) {
    std::vector<int> t = tuple_of_index(idx, N, k);
    classes[opts.dedupe_symmetry ? canonical_tuple(t, k) : t].push_back(idx);
  }

  struct RepJob {
    std::vector<int> tuple;
    std::vector<long> members;
    double bound = 0;
    bool ok = false;
    std::string note;
  };
  std::vector<RepJob> jobs;
  jobs.reserve(classes.size());
  for (auto& [key, members] : classes) {
    RepJob job;
    job.tuple = tuple_of_index(members.front(), N, k);
    job.members = std::move(members);
    jobs.push_back(std::move(job));
  }

  detail::parallel_for(jobs.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t j = lo; j < hi; ++j) {
      try {
        ParabolicRootCertificate cert =
            discriminant_upper_bound_impl(center, N, k, jobs[j].tuple, rs);
        jobs[j].bound = static_cast<double>(cert.bound);
        jobs[j].ok = true;
      } catch (const Error& e) {
        jobs[j].note = e.what();
      }
    }
  });

  ScanResult result;
  result.table.assign(static_cast<std::size_t>(total), ScanRow{});
  double min_bound = std::numeric_limits<double>::infinity();
  const RepJob* best_job = nullptr;
  for (const RepJob& job : jobs) {
    for (long raw : job.members) {
      ScanRow& row = result.table[static_cast<std::size_t>(raw)];
      row.tuple = tuple_of_index(raw, N, k);
      row.bound = job.bound;
      row.ok = job.ok;
      row.note = job.note;
      row.representative = (raw == job.members.front());
    }
    if (job.ok && job.bound < min_bound) {
      min_bound = job.bound;
      best_job = &job;
    }
  }
  if (best_job == nullptr) throw NotFound("scan_discriminant: every tuple failed validation");

  long count = 0;
  for (const ScanRow& row : result.table)
    if (row.ok && row.bound <= min_bound + opts.match_tol) ++count;

  result.min_bound = min_bound;
  result.raw_min_count = count;
  result.best = discriminant_upper_bound_impl(center, N, k, best_job->tuple, rs);
  return result;
}

// ---------------------------------------------------------------------------
// Mandelbrot distance
// ---------------------------------------------------------------------------

namespace {

bool mandel_member(cplx c, int iters = 2000) {
  cplx z(0, 0);
  cplx anchor(0, 0);
  int next_anchor = 32;
  for (int n = 1; n <= iters; ++n) {
    z = z * z + c;
    if (std::norm(z) > 4.0) return false;
    // Orbit settled onto a cycle: it cannot leave within the budget.
    if (std::norm(z - anchor) < 1e-26) return true;
    if (n == next_anchor) {
      anchor = z;
      next_anchor *= 2;
    }
  }
  return true;
}

cplx cardioid_point(double theta) {
  const cplx u = std::polar(1.0, theta);
  return u * 0.5 - u * u * 0.25;
}

double cardioid_distance(cplx c) {
  const int coarse = 2048;
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0;
  for (int i = 0; i < coarse; ++i) {
    const double th = 2 * M_PI * i / coarse;
    const double d = std::abs(cardioid_point(th) - c);
    if (d < best) {
      best = d;
      best_theta = th;
    }
  }
  // Golden-section refine around the best coarse angle.
  double a = best_theta - 2 * M_PI / coarse;
  double b = best_theta + 2 * M_PI / coarse;
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = std::abs(cardioid_point(x1) - c), f2 = std::abs(cardioid_point(x2) - c);
  for (int it = 0; it < 120; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = std::abs(cardioid_point(x1) - c);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = std::abs(cardioid_point(x2) - c);
    }
  }
  return std::min(std::min(f1, f2), best);
}

}  // namespace

std::pair<double, double> mandelbrot_distance(cplx c, double tol) {
  if (!(tol > 0)) throw InvalidArgument("mandelbrot_distance: tol must be positive");

  const double d_cardioid = cardioid_distance(c);
  const double d_period2 = std::abs(std::abs(c + cplx(1, 0)) - 0.25);

  // Rays can only improve on the closed-form curves, so the outward scan is
  // capped by them. Membership is not monotone along a ray; the scan series
  // (coarse grid, refined grid, bisection) pins the first flip instead of an
  // arbitrary one.
  const int n_rays = 720;
  const bool member_at_c = mandel_member(c);
  const double t_max = std::abs(c) + 2.25;  // M is contained in the 2-disk
  const double cap = std::min(std::min(d_cardioid, d_period2), t_max);
  std::vector<double> ray_dist(n_rays, std::numeric_limits<double>::infinity());

  detail::parallel_for(static_cast<std::size_t>(n_rays), [&](std::size_t lo, std::size_t hi) {
    const int coarse = 640, fine = 16;
    for (std::size_t i = lo; i < hi; ++i) {
      const double phi = 2 * M_PI * static_cast<double>(i) / n_rays;
      const cplx dir = std::polar(1.0, phi);
      const double s0 = cap / coarse;

      double flip_hi = -1;
      for (int j = 1; j <= coarse; ++j) {
        if (mandel_member(c + (s0 * j) * dir) != member_at_c) {
          flip_hi = s0 * j;
          break;
        }
      }
      if (flip_hi < 0) continue;

      const double s1 = s0 / fine;
      double base = flip_hi - s0;
      for (int j = 1; j <= fine; ++j) {
        if (mandel_member(c + (base + s1 * j) * dir) != member_at_c) {
          flip_hi = base + s1 * j;
          break;
        }
      }

      double lo_t = flip_hi - s1;  // same side as c
      double hi_t = flip_hi;       // flipped side
      while (hi_t - lo_t > tol) {
        const double mid = 0.5 * (lo_t + hi_t);
        if (mandel_member(c + mid * dir) == member_at_c)
          lo_t = mid;
        else
          hi_t = mid;
      }
      ray_dist[i] = 0.5 * (lo_t + hi_t);
    }
  });

  double d_ray = std::numeric_limits<double>::infinity();
  for (double d : ray_dist) d_ray = std::min(d_ray, d);

  const double d_hat = std::min({d_cardioid, d_period2, d_ray});
  const double angular_slack = d_hat * (1.0 / std::cos(M_PI / n_rays) - 1.0);
  const double lower = std::max(0.0, d_hat - 2 * tol - angular_slack);
  const double upper = d_hat + 2 * tol;
  return {lower, upper};
}

std::pair<double, double> lipschitz_transfer(cplx anchor_c, std::pair<double, double> anchor_bounds,
                                             cplx c) {
  if (anchor_bounds.first > anchor_bounds.second)
    throw InvalidArgument("lipschitz_transfer: anchor bounds must satisfy lo <= hi");
  const double d = std::abs(c - anchor_c);
  return {std::max(0.0, anchor_bounds.first - d), anchor_bounds.second + d};
}

// ---------------------------------------------------------------------------
// Combined report
// ---------------------------------------------------------------------------

namespace {

struct SnapTarget {
  Complex parameter;
  int period = 0;
  double distance = 0;
};

std::optional<SnapTarget> nearest_superattracting(const Complex& c, int max_period) {
  std::optional<SnapTarget> best;
  for (int p = 1; p <= std::min(max_period, 8); ++p) {
    for (const Complex& root : superattracting_parameter(p, /*primitive_only=*/true)) {
      const double d = static_cast<double>(abs(c - root));
      if (!best || d < best->distance) best = SnapTarget{root, p, d};
    }
  }
  return best;
}

std::optional<DiscriminantPlan> preset_plan(const SnapTarget& target) {
  const cplx ctr = target.parameter.to_double();
  if (target.period == 1 && std::abs(ctr) < 1e-6) return DiscriminantPlan{1, 1, {0}};
  if (target.period == 2 && std::abs(ctr - cplx(-1, 0)) < 1e-6)
    return DiscriminantPlan{4, 6, {1, 2, 5, 4}};
  if (target.period == 3 && std::abs(ctr - cplx(-1.75487766, 0)) < 1e-6)
    return DiscriminantPlan{3, 6, {0, 3, 0}};
  return std::nullopt;
}

}  // namespace

BifurcationReport combine_bounds(const Complex& c, const CombineConfig& config) {
  PrecisionContext ctx(config.precision_bits);
  BifurcationReport report;
  report.center = c;

  const bool real_center = (c.im() == 0);
  const Real re = c.re();

  // Exact segment r_bif(c) = 1/4 - c on [0, 1/4].
  if (real_center && re >= 0 && re <= Real(1) / 4) {
    const double v = static_cast<double>(Real(1) / 4 - re);
    report.lower_bounds.push_back({v, "exact-segment", "r_bif = 1/4 - c on [0, 1/4]"});
    report.upper_bounds.push_back({v, "exact-segment", "r_bif = 1/4 - c on [0, 1/4]"});
  }

  // Cardioid estimate r_bif(-eps) <= 1/4 + eps - eps^2 on [-1/2, 0).
  if (real_center && re < 0 && re >= Real(-1) / 2) {
    const Real eps = -re;
    const double v = static_cast<double>(Real(1) / 4 + eps - eps * eps);
    report.upper_bounds.push_back({v, "cardioid-epsilon", "1/4 + eps - eps^2 via the main cardioid"});
  }

  // Invariant-disk lower bound around the attracting cycle, if any.
  for (int p = 1; p <= config.max_period; ++p) {
    try {
      auto [value, cert] = lower_bound_invariant_disks(c, p, Real(config.lower_tol));
      report.lower_bounds.push_back({static_cast<double>(value), "invariant-disk",
                                     "attracting cycle of period " + std::to_string(p)});
      report.disk_certificates.push_back(std::move(cert));
      break;  // a quadratic map has at most one attracting cycle
    } catch (const NotFound&) {
      continue;
    }
  }

  // Parabolic-collision upper bound at a snapped superattracting center.
  if (auto target = nearest_superattracting(c, config.max_period);
      target && target->distance <= config.snap_tol) {
    std::optional<DiscriminantPlan> plan = config.plan;
    if (!plan) plan = preset_plan(*target);
    if (plan) {
      try {
        ParabolicRootCertificate cert = discriminant_upper_bound(
            target->parameter, plan->N, plan->k, plan->tuple, config.precision_bits);
        const double bound = static_cast<double>(cert.bound);
        if (target->distance == 0) {
          report.upper_bounds.push_back(
              {bound, "parabolic-root", "discriminant root of the composed fixed-point equation"});
        } else {
          report.upper_bounds.push_back(
              {bound + target->distance, "lipschitz",
               "parabolic-root at the snapped superattracting center plus displacement"});
        }
        report.parabolic_certificates.push_back(std::move(cert));
      } catch (const Error&) {
        // recorded by omission; the distance bound below still applies
      }
    }
  }

  // Mandelbrot distance bound, always applicable.
  {
    auto [dist_lo, dist_hi] = mandelbrot_distance(c.to_double(), config.dist_tol);
    (void)dist_lo;
    report.upper_bounds.push_back({dist_hi, "dist-boundary", "r_bif <= dist(c, boundary of M)"});
  }

  double best_lower = 0;
  for (const BoundEntry& e : report.lower_bounds) best_lower = std::max(best_lower, e.value);
  double best_upper = std::numeric_limits<double>::infinity();
  for (const BoundEntry& e : report.upper_bounds) best_upper = std::min(best_upper, e.value);
  report.best_lower = best_lower;
  report.best_upper = best_upper;
  if (!(best_lower <= best_upper))
    throw Error("combine_bounds: soundness violation, a lower bound exceeds an upper bound");
  return report;
}

std::string to_string(ContainmentVerdict v) {
  switch (v) {
    case ContainmentVerdict::PlanarMinimalSetExists:
      return "planar-minimal-set-exists";
    case ContainmentVerdict::TotallyDisconnectedAS:
      return "a.s.-totally-disconnected";
    default:
      return "undetermined";
  }
}

ContainmentVerdict containment_transfer(
    const std::optional<DiskLaw>& support_inner_disk,
    const std::optional<DiskLaw>& support_outer_disk,
    const std::function<const BifurcationReport*(cplx)>& report_lookup) {
  if (!support_inner_disk && !support_outer_disk)
    throw InvalidArgument("containment_transfer: provide at least one disk");

  if (support_outer_disk) {
    const BifurcationReport* rep = report_lookup(support_outer_disk->center);
    if (rep == nullptr)
      throw InvalidArgument("containment_transfer: no report at the outer-disk center");
    if (support_outer_disk->radius <= rep->best_lower)
      return ContainmentVerdict::PlanarMinimalSetExists;
  }
  if (support_inner_disk) {
    const BifurcationReport* rep = report_lookup(support_inner_disk->center);
    if (rep == nullptr)
      throw InvalidArgument("containment_transfer: no report at the inner-disk center");
    if (support_inner_disk->radius >= rep->best_upper)
      return ContainmentVerdict::TotallyDisconnectedAS;
  }
  return ContainmentVerdict::Undetermined;
}

}  // namespace qbif
