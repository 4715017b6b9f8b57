#pragma once
#include <vector>

#include "npe/grid.hpp"

namespace npe {

/// Dirichlet heat kernel on the rectangle [0,Lx] x [0,Ly], evaluated by the
/// truncated double sine eigenfunction series. Grid-free.
struct KernelSpec {
  double Lx = 1.0;
  double Ly = 1.0;
  int modes = 64;           // truncation per axis
  int derivative_order = 0; // 0 or 1

  void validate() const;

  /// Smallest per-axis truncation with series tail below 1e-14 at time t:
  /// M(t) = ceil(max(Lx,Ly) * sqrt(14 ln10 / (pi^2 t))) + 8.
  static int required_modes(double Lx, double Ly, double t);
};

/// Truncated series value H_M(x,t;y). Throws on t <= 0 and when the spec's
/// truncation does not meet the 1e-14 tail bound for the requested t.
double kernel_eval(const KernelSpec& spec, Point x, Point y, double t);

/// Sign-and-log representation used where the kernel underflows doubles.
struct SignedLog {
  double log_abs; // -inf encodes an exact zero
  int sign;       // -1, 0, +1
};

/// log |D^k H(x,t;y)| via the method-of-images form of the same kernel;
/// k = 0 gives the value, k = 1 the gradient magnitude in x. Well defined for
/// separations where the sine series is pure cancellation noise.
SignedLog kernel_eval_log(double Lx, double Ly, Point x, Point y, double t, int k);

/// Quadrature-free boundary-loss check: integral of H(x,t;y) over y.
double kernel_mass(double Lx, double Ly, Point x, double t);

struct GaussianBoundSample {
  double t;
  double separation;
  double log_ratio;
};

struct GaussianBoundReport {
  double max_ratio;        // exp of max log ratio, capped to avoid overflow
  double max_log_ratio;
  double max_ratio_half;   // max over the first half of the sample budget
  bool stable;             // max over 2n within 1.5x of max over n
  bool finite;
  GaussianBoundSample argmax;
  std::vector<GaussianBoundSample> samples;
};

/// Samples R = |D^k H| * t^((2+k)/2) * exp(+|x-y|^2/(16 t)) over quasi-random
/// (x, y, t) with t log-uniform in [1e-4, 1], entirely in log space.
GaussianBoundReport verify_gaussian_bound(const KernelSpec& spec, int sample_count,
                                          unsigned seed = 1);

/// Heat semigroup applied to grid data: sine-transform, continuum eigenvalue
/// decay exp(-lambda_mn t), inverse transform. Boundary of the result is 0.
ScalarField heat_semigroup(const ScalarField& c0, double t);

struct SmoothingRateReport {
  std::vector<double> times;
  std::vector<double> weighted_linf;      // t^(1/p)   * ||e(t)||_inf
  std::vector<double> weighted_grad_linf; // t^(1/2+1/p) * ||grad e(t)||_inf
  double sup_linf = 0.0;
  double sup_grad_linf = 0.0;
  // A growth trend means the sequence rises monotonically in physical time
  // with total ratio >= 2.
  bool growth_linf = false;
  bool growth_grad_linf = false;
  bool pass() const { return !growth_linf && !growth_grad_linf; }
};

/// Checks the weighted smoothing quantities over a list of times given in
/// decreasing order within (0, 0.1]. Requires p > 2 and c0 >= 0.
SmoothingRateReport verify_smoothing_rates(const ScalarField& c0, double p,
                                           const std::vector<double>& times);

} // namespace npe
