#include "qbif/escape_stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>

#include "qbif/detail/parallel.hpp"

namespace qbif {

std::pair<double, double> wilson_interval(long successes, long n, double z) {
  const double p = static_cast<double>(successes) / static_cast<double>(n);
  const double z2 = z * z;
  const double denom = 1.0 + z2 / static_cast<double>(n);
  const double center = p + z2 / (2.0 * static_cast<double>(n));
  const double half =
      z * std::sqrt(p * (1.0 - p) / static_cast<double>(n) +
                    z2 / (4.0 * static_cast<double>(n) * static_cast<double>(n)));
  double lo = (center - half) / denom;
  double hi = (center + half) / denom;
  lo = std::max(0.0, lo);
  hi = std::min(1.0, hi);
  return {lo, hi};
}

namespace {

// Escape step of z0 under the substream for sample i, or 0 when it survives.
int escape_step_of_sample(const DiskLaw& law, cplx z0, double R, int horizon, StreamSeed seed,
                          std::uint64_t sample_index) {
  const StreamSeed sub = seed.substream(sample_index);
  OrbitOutcome out = iterate_orbit_gen(
      z0, [&](int n) { return sample_disk(law, sub, static_cast<std::uint64_t>(n)); }, R, horizon);
  return out.escaped() ? out.escape_step : 0;
}

}  // namespace

TEstimate estimate_T(const DiskLaw& law, cplx z0, long n_samples, int horizon, StreamSeed seed) {
  if (n_samples < 1) throw InvalidArgument("estimate_T: n_samples >= 1 required");
  if (horizon < 1) throw InvalidArgument("estimate_T: horizon >= 1 required");
  const double R = escape_radius(law.center, law.radius);

  std::atomic<long> escapes{0};
  detail::parallel_for(static_cast<std::size_t>(n_samples), [&](std::size_t lo, std::size_t hi) {
    long local = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      if (escape_step_of_sample(law, z0, R, horizon, seed, i) > 0) ++local;
    }
    escapes.fetch_add(local, std::memory_order_relaxed);
  });

  TEstimate est;
  est.escapes = escapes.load();
  est.n_samples = n_samples;
  est.point_estimate = static_cast<double>(est.escapes) / static_cast<double>(n_samples);
  std::tie(est.wilson_lo, est.wilson_hi) = wilson_interval(est.escapes, n_samples, kWilsonZ99);
  est.horizon = horizon;
  est.seed = seed;
  return est;
}

TailFit tail_fit(const DiskLaw& law, long n_samples, int horizon, StreamSeed seed) {
  if (n_samples < 1000) throw InvalidArgument("tail_fit: n_samples >= 1000 required");
  if (horizon < 1) throw InvalidArgument("tail_fit: horizon >= 1 required");
  const double R = escape_radius(law.center, law.radius);

  std::vector<int> steps(static_cast<std::size_t>(n_samples));
  detail::parallel_for(static_cast<std::size_t>(n_samples), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      steps[i] = escape_step_of_sample(law, cplx(0, 0), R, horizon, seed, i);
  });

  std::map<int, long> hist;
  long escaped = 0;
  for (int k : steps) {
    if (k > 0) {
      ++hist[k];
      ++escaped;
    }
  }
  if (escaped < 100)
    throw InsufficientData("tail_fit: fewer than 100 escaping samples within the horizon");

  TailFit fit;
  fit.histogram.assign(hist.begin(), hist.end());
  fit.escaped = escaped;
  fit.n_samples = n_samples;
  fit.horizon = horizon;
  fit.seed = seed;

  // Tail window: median escape time to the 99.9th percentile.
  const auto quantile_step = [&](double q) {
    const long target = static_cast<long>(q * static_cast<double>(escaped - 1));
    long seen = 0;
    for (const auto& [k, cnt] : fit.histogram) {
      seen += cnt;
      if (seen > target) return k;
    }
    return fit.histogram.back().first;
  };
  fit.window_lo = quantile_step(0.5);
  fit.window_hi = quantile_step(0.999);

  // Least squares of log S(k) against k over the window, where
  // S(k) = P(escape time > k | escaped).
  std::vector<std::pair<double, double>> pts;
  long above = escaped;
  long window_samples = 0;
  for (const auto& [k, cnt] : fit.histogram) {
    above -= cnt;  // samples with escape time > k
    if (k < fit.window_lo || k > fit.window_hi) continue;
    window_samples += cnt;
    if (above <= 0) break;
    pts.emplace_back(static_cast<double>(k),
                     std::log(static_cast<double>(above) / static_cast<double>(escaped)));
  }
  if (window_samples >= 100 && pts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      syy += y * y;
    }
    const double n = static_cast<double>(pts.size());
    const double vxx = sxx - sx * sx / n;
    const double vxy = sxy - sx * sy / n;
    const double vyy = syy - sy * sy / n;
    if (vxx > 0 && vyy > 0) {
      const double slope = vxy / vxx;
      fit.gamma_hat = -slope;
      fit.r_squared = (vxy * vxy) / (vxx * vyy);
      fit.gamma_valid = true;
    }
  }
  return fit;
}

Classification classify_connectedness(const NoiseRealization& omega, int horizon) {
  if (horizon < 1) throw InvalidArgument("classify_connectedness: horizon >= 1 required");
  if (static_cast<int>(omega.size()) < horizon)
    throw InvalidArgument("classify_connectedness: omega shorter than horizon");
  const double R = escape_radius(omega.center(), omega.radius());
  const double r2 = R * R;

  for (int k = 0; k < horizon; ++k) {
    cplx z(0, 0);
    for (int m = 1; m <= horizon - k; ++m) {
      z = z * z + omega[static_cast<std::size_t>(k + m - 1)];
      if (std::norm(z) > r2) return {true, k, m, horizon};
    }
  }
  return {false, 0, 0, horizon};
}

}  // namespace qbif
