#ifndef QBIF_BIF_BOUNDS_HPP
#define QBIF_BIF_BOUNDS_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qbif/noise.hpp"
#include "qbif/poly.hpp"

namespace qbif {

/// An attracting cycle a_0 -> a_1 -> ... -> a_{p-1} -> a_0 of f_c.
struct CycleData {
  Complex parameter;
  int period = 0;
  std::vector<Complex> points;  // f_c(points[j]) = points[(j+1) % period]
  Complex multiplier;           // product of 2 a_j
};

/// Radii around an attracting cycle satisfying the per-index growth
/// inequality delta_j^2 + 2|a_j| delta_j + (offset + r) <= delta_{j+1},
/// proving forward invariance of the disk union under every map in the
/// noise support, hence r <= r_bif.
struct InvariantDiskCertificate {
  CycleData cycle;
  std::vector<Real> radii;
  Real noise_radius;
  Real center_offset;        // |c - c~| when the noise center is displaced
  std::vector<Real> slack;   // per-index margins, all >= 0
};

/// Feasibility check outcome for a radii vector.
struct DiskCheck {
  bool feasible = false;
  InvariantDiskCertificate certificate;  // valid when feasible
  int violated_index = -1;               // valid when infeasible
  Real violation;                        // amount by which the inequality fails
};

/// Validated root rho_0 of the discriminant Delta(rho) of
/// f_{c_N} o ... o f_{c_1}(z) - z with c_i = center + rho zeta_k^{p_i}:
/// an upper bound |rho_0| >= r_bif(center).
struct ParabolicRootCertificate {
  Complex center;
  int N = 0;
  int k = 0;
  std::vector<int> tuple;
  Complex rho0;
  Real bound;             // |rho0|
  Real residual;          // |Delta(rho0)| by direct Sylvester evaluation
  Real residual_scale;    // local Delta scale: sum_j |d_j| |rho0|^j
  Real fixed_point_gap;   // min pairwise distance of fixed points at rho0
  Real multiplier_error;  // |lambda - 1| at the clustered fixed point
  unsigned precision_bits = 256;
};

/// Certificate acceptance thresholds (also used by the doubled-precision
/// replay).
inline constexpr double kParabolicResidualRel = 1e-10;
inline constexpr double kParabolicGapMax = 1e-6;
inline constexpr double kParabolicMultErrMax = 1e-4;

bool parabolic_thresholds_met(const ParabolicRootCertificate& cert);

/// One bound with its provenance: exact-segment, invariant-disk, lipschitz,
/// dist-boundary, parabolic-root, cardioid-epsilon or containment.
struct BoundEntry {
  double value = 0;
  std::string provenance;
  std::string detail;
};

struct BifurcationReport {
  Complex center;
  std::vector<BoundEntry> lower_bounds;
  std::vector<BoundEntry> upper_bounds;
  double best_lower = 0;
  double best_upper = 0;
  std::vector<InvariantDiskCertificate> disk_certificates;
  std::vector<ParabolicRootCertificate> parabolic_certificates;
};

/// Attracting cycle of exact period `period` of f_c, found by solving the
/// fixed-point polynomial of f_c^{period} with poly_roots and grouping the
/// roots into cycles. Throws NotFound when no such cycle exists.
CycleData find_attracting_cycle(const Complex& c, int period);

/// Evaluate every per-index inequality for the given radii, noise radius r
/// and center displacement.
DiskCheck check_invariant_disks(const CycleData& cycle, std::span<const Real> radii,
                                const Real& r, const Real& center_offset = Real(0));

/// Largest r (to absolute tol) admitting a feasible radii vector around the
/// attracting cycle of f_c of the given period. The inner feasibility search
/// scans delta_0 over (0, (1-|m|^{1/p})/2] on a refining grid and propagates
/// the minimal radii around the cycle.
std::pair<Real, InvariantDiskCertificate> lower_bound_invariant_disks(const Complex& c,
                                                                      int period,
                                                                      const Real& tol);

/// rho(delta) = -(2 delta^2 + 3)/2 + sqrt(4 delta^2 + 4 delta + 9)/2 for
/// delta in [0, delta_max], delta_max the positive root of delta^3+2delta-1.
Real rho_of_delta(const Real& delta);

/// Positive root of delta^3 + 2 delta - 1 (domain end of rho_of_delta).
Real rho_domain_max();

/// Argmax and maximum of rho: delta* is the unique positive root of
/// 16 d^4 + 16 d^3 + 32 d^2 - 4 d - 1.
std::pair<Real, Real> maximize_rho();

/// Parabolic-collision upper bound on r_bif(center) for one exponent tuple.
/// Samples Delta(rho) on a circle, interpolates, extracts roots, discards
/// |rho| < 1e-8 artifacts, and returns the certificate of the smallest
/// surviving |rho_0|. Throws NotFound when no root survives validation and
/// DegreeBoundExceeded when the trailing coefficients stay significant after
/// the sample-doubling retries.
ParabolicRootCertificate discriminant_upper_bound(const Complex& center, int N, int k,
                                                  std::span<const int> tuple,
                                                  unsigned precision_bits = 256);

struct ScanOptions {
  bool dedupe_symmetry = true;  // scan one representative per symmetry class
  long tuple_cap = 100000;      // resource cap on k^N
  double match_tol = 1e-6;      // tuples within this of the minimum count as minimal
  double sample_radius = 0.1;
};

struct ScanRow {
  std::vector<int> tuple;
  double bound = 0;
  bool ok = false;
  bool representative = false;
  std::string note;
};

struct ScanResult {
  ParabolicRootCertificate best;
  std::vector<ScanRow> table;  // all k^N raw tuples in odometer order
  double min_bound = 0;
  long raw_min_count = 0;  // raw tuples within match_tol of min_bound
};

/// Run discriminant_upper_bound over all k^N exponent tuples. The global
/// phase shift p_i -> p_i + s rotates rho and the cyclic tuple rotation
/// conjugates the composition; both preserve |rho_0|, so with dedupe enabled
/// only one representative per equivalence class is computed and the value
/// is shared across the class.
ScanResult scan_discriminant(const Complex& center, int N, int k,
                             unsigned precision_bits = 256, const ScanOptions& opts = {});

/// Bracket dist(c, boundary of the Mandelbrot set) from the closed-form
/// period-1 cardioid and period-2 circle plus radial bisection of the
/// escape-time membership test along 720 rays.
std::pair<double, double> mandelbrot_distance(cplx c, double tol);

/// 1-Lipschitz transfer of bounds from an anchor parameter.
std::pair<double, double> lipschitz_transfer(cplx anchor_c, std::pair<double, double> anchor_bounds,
                                             cplx c);

struct DiscriminantPlan {
  int N = 0;
  int k = 0;
  std::vector<int> tuple;
};

struct CombineConfig {
  int max_period = 6;
  double snap_tol = 1e-9;
  unsigned precision_bits = 256;
  double lower_tol = 1e-5;
  double dist_tol = 1e-4;
  std::optional<DiscriminantPlan> plan;  // overrides the built-in presets
};

/// Run every applicable bound and merge: exact segment on [0, 1/4],
/// cardioid-epsilon on [-1/2, 0), invariant-disk lower bounds, the
/// discriminant upper bound at superattracting centers (with Lipschitz
/// correction for the snap displacement) and the Mandelbrot distance.
BifurcationReport combine_bounds(const Complex& c, const CombineConfig& config = {});

enum class ContainmentVerdict { PlanarMinimalSetExists, TotallyDisconnectedAS, Undetermined };

std::string to_string(ContainmentVerdict v);

/// Support-containment transfer: an outer disk B(c, r) containing the
/// support with r <= best_lower(c) forces a planar minimal set; an inner
/// disk B(c, r) inside the support interior with r >= best_upper(c) forces
/// almost-sure total disconnectedness.
ContainmentVerdict containment_transfer(
    const std::optional<DiskLaw>& support_inner_disk,
    const std::optional<DiskLaw>& support_outer_disk,
    const std::function<const BifurcationReport*(cplx)>& report_lookup);

/// Recompute a parabolic certificate from scratch at twice its precision.
struct ParabolicReplay {
  ParabolicRootCertificate recomputed;
  bool thresholds_met = false;
};
ParabolicReplay revalidate_parabolic(const ParabolicRootCertificate& cert);

}  // namespace qbif

#endif  // QBIF_BIF_BOUNDS_HPP
