#ifndef QBIF_ESCAPE_STATS_HPP
#define QBIF_ESCAPE_STATS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qbif/noise.hpp"

namespace qbif {

/// Monte Carlo estimate of the escape probability T_{c,r}(z0). A Survived
/// outcome counts as non-escape: a finite-horizon truncation, not ground
/// truth.
struct TEstimate {
  double point_estimate = 0;  // escapes / n_samples
  long escapes = 0;
  long n_samples = 0;
  double wilson_lo = 0;  // 99% Wilson interval
  double wilson_hi = 0;
  int horizon = 0;
  StreamSeed seed;
};

/// Escape-time histogram of the critical point plus the fitted exponential
/// tail rate. gamma_hat is the least-squares slope of -log P(k > k0) over
/// [window_lo, window_hi] (median to 99.9th percentile of escape times) and
/// is only reported when the window holds at least 100 samples.
struct TailFit {
  std::vector<std::pair<int, long>> histogram;  // (k, count), k ascending
  long escaped = 0;
  long n_samples = 0;
  double gamma_hat = 0;
  bool gamma_valid = false;
  double r_squared = 0;
  int window_lo = 0;
  int window_hi = 0;
  int horizon = 0;
  StreamSeed seed;
};

/// Connectedness verdict for one realization: either a witness shift whose
/// critical orbit escapes (Theorem-style disconnectedness certificate) or
/// survival of every shift up to the horizon.
struct Classification {
  bool disconnected = false;
  int shift = 0;        // valid when disconnected
  int escape_step = 0;  // valid when disconnected
  int horizon = 0;
};

/// Sample n_samples independent realizations (substreams seed+i) and iterate
/// z0 to escape or horizon with R = escape_radius(law).
TEstimate estimate_T(const DiskLaw& law, cplx z0, long n_samples, int horizon, StreamSeed seed);

/// Escape-time tail of the critical point 0. Throws InsufficientData when
/// fewer than 100 samples escape within the horizon.
TailFit tail_fit(const DiskLaw& law, long n_samples, int horizon, StreamSeed seed);

/// For every shift k in [0, horizon), iterate the critical orbit of the
/// shifted sequence; certify disconnectedness at the first escaping shift.
Classification classify_connectedness(const NoiseRealization& omega, int horizon);

/// Two-sided Wilson score interval.
std::pair<double, double> wilson_interval(long successes, long n, double z);

inline constexpr double kWilsonZ99 = 2.5758293035489004;  // Phi^{-1}(0.995)

}  // namespace qbif

#endif  // QBIF_ESCAPE_STATS_HPP
