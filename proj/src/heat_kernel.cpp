#include "npe/heat_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dst_internal.hpp"
#include "npe/field_ops.hpp"

namespace npe {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void KernelSpec::validate() const {
  if (modes < 8)
    throw Error(ErrorKind::Validation, "KernelSpec: modes must be >= 8");
  if (derivative_order != 0 && derivative_order != 1)
    throw Error(ErrorKind::Validation, "KernelSpec: derivative order must be 0 or 1");
  if (!(Lx > 0.0) || !(Ly > 0.0))
    throw Error(ErrorKind::Validation, "KernelSpec: side lengths must be > 0");
}

int KernelSpec::required_modes(double Lx, double Ly, double t) {
  double L = std::max(Lx, Ly);
  double M = L * std::sqrt(14.0 * std::log(10.0) / (M_PI * M_PI * t));
  return static_cast<int>(std::ceil(M)) + 8;
}

namespace {

// 1D factor of the separable sine series: (2/L) sum_m sin sin exp(-m^2 pi^2 t / L^2).
double sine_series_1d(double L, double a, double b, double t, int modes) {
  double acc = 0.0;
  double r = M_PI / L;
  for (int m = modes; m >= 1; --m) {
    double decay = std::exp(-double(m) * m * r * r * t);
    acc += std::sin(m * r * a) * std::sin(m * r * b) * decay;
  }
  return 2.0 / L * acc;
}

} // namespace

double kernel_eval(const KernelSpec& spec, Point x, Point y, double t) {
  spec.validate();
  if (!(t > 0.0))
    throw Error(ErrorKind::InvalidArgument, "kernel_eval: time must be > 0");
  double L = std::max(spec.Lx, spec.Ly);
  double tail = std::exp(-M_PI * M_PI * spec.modes * spec.modes * t / (L * L));
  if (tail >= 1e-14)
    throw Error(ErrorKind::Truncation,
                "kernel_eval: truncation insufficient for requested time", tail);
  // The rectangle kernel is separable, so the truncated double series equals
  // the product of the per-axis truncated sums.
  return sine_series_1d(spec.Lx, x.x, y.x, t, spec.modes) *
         sine_series_1d(spec.Ly, x.y, y.y, t, spec.modes);
}

namespace {

// Method-of-images form of the 1D Dirichlet kernel and its a-derivative,
// accumulated by signed log-sum-exp so extreme decay stays representable.
SignedLog images_1d_log(double L, double a, double b, double t, int deriv) {
  // Enough images that skipped Gaussians are below e^-800 relative.
  int n_img = static_cast<int>(std::ceil((2.0 * L + std::sqrt(3200.0 * t)) / (2.0 * L))) + 1;
  double log_pref = -0.5 * std::log(4.0 * M_PI * t);

  double max_log = -kInf;
  std::vector<std::pair<double, double>> terms; // (log magnitude, sign)
  terms.reserve(4 * n_img + 2);
  for (int n = -n_img; n <= n_img; ++n) {
    for (int image = 0; image < 2; ++image) {
      double arg = (image == 0 ? a - b : a + b) - 2.0 * n * L;
      double sign = (image == 0) ? 1.0 : -1.0;
      double lg = -arg * arg / (4.0 * t);
      if (deriv == 1) {
        double factor = -arg / (2.0 * t);
        if (factor == 0.0) continue;
        sign *= (factor > 0 ? 1.0 : -1.0);
        lg += std::log(std::fabs(factor));
      }
      terms.emplace_back(lg, sign);
      max_log = std::max(max_log, lg);
    }
  }
  if (max_log == -kInf) return {-kInf, 0};
  double s = 0.0;
  for (auto& [lg, sign] : terms) s += sign * std::exp(lg - max_log);
  if (s == 0.0) return {-kInf, 0};
  return {log_pref + max_log + std::log(std::fabs(s)), s > 0 ? 1 : -1};
}

} // namespace

SignedLog kernel_eval_log(double Lx, double Ly, Point x, Point y, double t, int k) {
  if (!(t > 0.0))
    throw Error(ErrorKind::InvalidArgument, "kernel_eval_log: time must be > 0");
  SignedLog fx = images_1d_log(Lx, x.x, y.x, t, 0);
  SignedLog fy = images_1d_log(Ly, x.y, y.y, t, 0);
  if (k == 0) {
    if (fx.sign == 0 || fy.sign == 0) return {-kInf, 0};
    return {fx.log_abs + fy.log_abs, fx.sign * fy.sign};
  }
  SignedLog dx = images_1d_log(Lx, x.x, y.x, t, 1);
  SignedLog dy = images_1d_log(Ly, x.y, y.y, t, 1);
  // |grad H| = hypot(H_x1, H_x2) assembled in logs.
  double l1 = (dx.sign && fy.sign) ? dx.log_abs + fy.log_abs : -kInf;
  double l2 = (fx.sign && dy.sign) ? fx.log_abs + dy.log_abs : -kInf;
  double m = std::max(l1, l2);
  if (m == -kInf) return {-kInf, 0};
  double sum = std::exp(2.0 * (l1 - m)) + std::exp(2.0 * (l2 - m));
  return {m + 0.5 * std::log(sum), 1};
}

double kernel_mass(double Lx, double Ly, Point x, double t) {
  auto axis_mass = [&](double L, double a) {
    int modes = KernelSpec::required_modes(L, L, t);
    double acc = 0.0;
    double r = M_PI / L;
    for (int m = 1; m <= modes; m += 2)
      acc += 4.0 / (m * M_PI) * std::sin(m * r * a) * std::exp(-double(m) * m * r * r * t);
    return acc;
  };
  return axis_mass(Lx, x.x) * axis_mass(Ly, x.y);
}

namespace {

// Halton sequence, bases 2,3,5,7,11; seed offsets the start index.
double halton(unsigned long long index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

} // namespace

GaussianBoundReport verify_gaussian_bound(const KernelSpec& spec, int sample_count,
                                          unsigned seed) {
  spec.validate();
  if (sample_count < 100)
    throw Error(ErrorKind::InvalidArgument,
                "verify_gaussian_bound: need at least 100 samples");
  static const int bases[5] = {2, 3, 5, 7, 11};
  const int k = spec.derivative_order;

  GaussianBoundReport rep;
  rep.max_log_ratio = -kInf;
  rep.finite = true;
  rep.samples.reserve(sample_count);

  for (int s = 0; s < sample_count; ++s) {
    unsigned long long idx = 1ull + s + static_cast<unsigned long long>(seed) * 7919ull;
    Point x{spec.Lx * halton(idx, bases[0]), spec.Ly * halton(idx, bases[1])};
    Point y{spec.Lx * halton(idx, bases[2]), spec.Ly * halton(idx, bases[3])};
    double tau = halton(idx, bases[4]);
    double t = 1e-4 * std::pow(1e4, tau);

    SignedLog H = kernel_eval_log(spec.Lx, spec.Ly, x, y, t, k);
    double dx = x.x - y.x, dy = x.y - y.y;
    double r2 = dx * dx + dy * dy;
    double log_ratio;
    if (H.sign == 0) {
      log_ratio = -kInf;
    } else {
      log_ratio = H.log_abs + 0.5 * (2.0 + k) * std::log(t) + r2 / (16.0 * t);
      if (std::isnan(log_ratio) || log_ratio == kInf) rep.finite = false;
    }
    rep.samples.push_back({t, std::sqrt(r2), log_ratio});
    if (log_ratio > rep.max_log_ratio) {
      rep.max_log_ratio = log_ratio;
      rep.argmax = rep.samples.back();
    }
    if (s + 1 == sample_count / 2)
      rep.max_ratio_half = std::exp(std::min(rep.max_log_ratio, 700.0));
  }
  rep.max_ratio = std::exp(std::min(rep.max_log_ratio, 700.0));
  rep.stable = rep.finite && rep.max_ratio <= 1.5 * rep.max_ratio_half;
  return rep;
}

ScalarField heat_semigroup(const ScalarField& c0, double t) {
  if (!(t >= 0.0))
    throw Error(ErrorKind::InvalidArgument, "heat_semigroup: time must be >= 0");
  const Grid& g = c0.grid;
  const int mx = g.nx - 2, my = g.ny - 2;
  std::vector<double> f(static_cast<std::size_t>(mx) * my);
  for (int j = 1; j <= my; ++j)
    for (int i = 1; i <= mx; ++i)
      f[static_cast<std::size_t>(j - 1) * mx + (i - 1)] = c0(i, j);
  const detail::SinePlan& plan = detail::sine_plan(mx, my);
  plan.execute(f.data());
  for (int n = 1; n <= my; ++n) {
    double ly = M_PI * n / g.Ly;
    for (int m = 1; m <= mx; ++m) {
      double lx = M_PI * m / g.Lx;
      f[static_cast<std::size_t>(n - 1) * mx + (m - 1)] *=
          std::exp(-(lx * lx + ly * ly) * t);
    }
  }
  plan.execute(f.data());
  const double norm = 1.0 / (4.0 * (g.nx - 1) * (g.ny - 1));
  ScalarField out(g, 0.0);
  for (int j = 1; j <= my; ++j)
    for (int i = 1; i <= mx; ++i)
      out(i, j) = f[static_cast<std::size_t>(j - 1) * mx + (i - 1)] * norm;
  return out;
}

SmoothingRateReport verify_smoothing_rates(const ScalarField& c0, double p,
                                           const std::vector<double>& times) {
  if (!(p > 2.0))
    throw Error(ErrorKind::InvalidArgument,
                "verify_smoothing_rates: exponent must be > 2");
  if (times.empty())
    throw Error(ErrorKind::InvalidArgument, "verify_smoothing_rates: empty time list");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0 && times[i] <= 0.1))
      throw Error(ErrorKind::InvalidArgument,
                  "verify_smoothing_rates: times must lie in (0, 0.1]");
    if (i > 0 && !(times[i] < times[i - 1]))
      throw Error(ErrorKind::InvalidArgument,
                  "verify_smoothing_rates: times must decrease toward 0");
  }
  for (double v : c0.values)
    if (v < 0.0)
      throw Error(ErrorKind::Validation, "verify_smoothing_rates: data must be >= 0");

  SmoothingRateReport rep;
  rep.times = times;
  for (double t : times) {
    ScalarField e = heat_semigroup(c0, t);
    VectorField grad = gradient(e);
    double linf = max_abs(e);
    double glinf = 0.0;
    for (std::size_t k = 0; k < e.grid.size(); ++k)
      glinf = std::max(glinf, std::hypot(grad.x.values[k], grad.y.values[k]));
    rep.weighted_linf.push_back(std::pow(t, 1.0 / p) * linf);
    rep.weighted_grad_linf.push_back(std::pow(t, 0.5 + 1.0 / p) * glinf);
  }
  rep.sup_linf = *std::max_element(rep.weighted_linf.begin(), rep.weighted_linf.end());
  rep.sup_grad_linf =
      *std::max_element(rep.weighted_grad_linf.begin(), rep.weighted_grad_linf.end());

  // The list arrives with t decreasing; growth in physical time reads the
  // sequence back-to-front.
  auto grows = [](const std::vector<double>& w) {
    bool monotone = true;
    for (std::size_t i = w.size(); i-- > 1;)
      if (!(w[i - 1] > w[i])) { monotone = false; break; }
    return monotone && w.front() >= 2.0 * w.back();
  };
  rep.growth_linf = grows(rep.weighted_linf);
  rep.growth_grad_linf = grows(rep.weighted_grad_linf);
  return rep;
}

} // namespace npe
