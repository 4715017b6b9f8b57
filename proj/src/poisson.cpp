#include "npe/poisson.hpp"

#include <cmath>
#include <vector>

#include "dst_internal.hpp"

namespace npe {

void EllipticProblem::validate() const {
  if (!(scale > 0.0))
    throw Error(ErrorKind::Validation, "EllipticProblem: scale must be > 0");
  boundary.validate(rhs.grid);
  rhs.require_finite("EllipticProblem rhs");
}

namespace {

// Interior five-point -Laplacian applied to a full field.
double neg_laplacian_at(const ScalarField& u, int i, int j) {
  const Grid& g = u.grid;
  double dxx = (u(i + 1, j) - 2.0 * u(i, j) + u(i - 1, j)) / (g.hx * g.hx);
  double dyy = (u(i, j + 1) - 2.0 * u(i, j) + u(i, j - 1)) / (g.hy * g.hy);
  return -(dxx + dyy);
}

// Solves -Lap v = f with v = 0 on the boundary; f given on interior nodes
// (row-major, (nx-2) x (ny-2)).
void solve_zero_boundary_dst(const Grid& g, std::vector<double>& f) {
  const int mx = g.nx - 2, my = g.ny - 2;
  const detail::SinePlan& plan = detail::sine_plan(mx, my);
  plan.execute(f.data());
  for (int n = 1; n <= my; ++n) {
    double sy = std::sin(0.5 * M_PI * n / (g.ny - 1));
    double ey = 4.0 * sy * sy / (g.hy * g.hy);
    for (int m = 1; m <= mx; ++m) {
      double sx = std::sin(0.5 * M_PI * m / (g.nx - 1));
      double ex = 4.0 * sx * sx / (g.hx * g.hx);
      f[static_cast<std::size_t>(n - 1) * mx + (m - 1)] /= ex + ey;
    }
  }
  plan.execute(f.data());
  const double norm = 1.0 / (4.0 * (g.nx - 1) * (g.ny - 1));
  for (double& v : f) v *= norm;
}

void solve_zero_boundary_cg(const Grid& g, std::vector<double>& f) {
  const int mx = g.nx - 2, my = g.ny - 2;
  const std::size_t n = f.size();
  const double ax = 1.0 / (g.hx * g.hx), ay = 1.0 / (g.hy * g.hy);
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (int j = 0; j < my; ++j) {
      for (int i = 0; i < mx; ++i) {
        std::size_t k = static_cast<std::size_t>(j) * mx + i;
        double v = 2.0 * (ax + ay) * x[k];
        if (i > 0) v -= ax * x[k - 1];
        if (i < mx - 1) v -= ax * x[k + 1];
        if (j > 0) v -= ay * x[k - mx];
        if (j < my - 1) v -= ay * x[k + mx];
        y[k] = v;
      }
    }
  };
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
    return s;
  };

  std::vector<double> x(n, 0.0), r = f, p = r, Ap(n);
  double bnorm = std::sqrt(dot(f, f));
  if (bnorm == 0.0) {
    f.assign(n, 0.0);
    return;
  }
  double rr = dot(r, r);
  const double tol = 1e-10 * bnorm;
  const int cap = static_cast<int>(10.0 * std::sqrt(double(g.nx) * g.ny)) + 10;
  int it = 0;
  for (; it < cap && std::sqrt(rr) > tol; ++it) {
    apply(p, Ap);
    double alpha = rr / dot(p, Ap);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] += alpha * p[k];
      r[k] -= alpha * Ap[k];
    }
    double rr_new = dot(r, r);
    double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + beta * p[k];
  }
  if (std::sqrt(rr) > tol)
    throw Error(ErrorKind::SolverFailure,
                "poisson CG: no convergence within iteration cap",
                std::sqrt(rr) / bnorm);
  f = std::move(x);
}

} // namespace

ScalarField solve_dirichlet(const EllipticProblem& problem, PoissonMethod method) {
  problem.validate();
  const Grid& g = problem.rhs.grid;

  BoundaryTrace trace = problem.boundary;
  trace.normalize_corners();
  ScalarField lift = lift_trace(g, trace);

  // Residual problem: -Lap v = rhs/scale + Lap_h(lift), v = 0 on the boundary.
  const int mx = g.nx - 2, my = g.ny - 2;
  std::vector<double> f(static_cast<std::size_t>(mx) * my);
  for (int j = 1; j <= my; ++j)
    for (int i = 1; i <= mx; ++i)
      f[static_cast<std::size_t>(j - 1) * mx + (i - 1)] =
          problem.rhs(i, j) / problem.scale - neg_laplacian_at(lift, i, j);

  if (method == PoissonMethod::FastSine)
    solve_zero_boundary_dst(g, f);
  else
    solve_zero_boundary_cg(g, f);

  ScalarField u = lift;
  for (int j = 1; j <= my; ++j)
    for (int i = 1; i <= mx; ++i)
      u(i, j) += f[static_cast<std::size_t>(j - 1) * mx + (i - 1)];
  return u;
}

PotentialSplit decompose_potential(const ScalarField& rho, const BoundaryTrace& h,
                                   double epsilon, PoissonMethod method) {
  if (!(epsilon > 0.0))
    throw Error(ErrorKind::Validation, "decompose_potential: epsilon must be > 0");
  const Grid& g = rho.grid;

  EllipticProblem zero_bc{rho, BoundaryTrace::constant(g, 0.0), epsilon};
  PotentialSplit out;
  out.phi0 = solve_dirichlet(zero_bc, method);

  EllipticProblem harmonic{ScalarField(g, 0.0), h, 1.0};
  out.phih = solve_dirichlet(harmonic, method);

  out.phi = out.phi0;
  for (std::size_t k = 0; k < g.size(); ++k)
    out.phi.values[k] += out.phih.values[k];
  return out;
}

double dirichlet_residual(const EllipticProblem& problem, const ScalarField& u) {
  const Grid& g = problem.rhs.grid;
  double num = 0.0, den = 0.0;
  for (int j = 1; j < g.ny - 1; ++j) {
    for (int i = 1; i < g.nx - 1; ++i) {
      double r = problem.scale * neg_laplacian_at(u, i, j) - problem.rhs(i, j);
      num = std::max(num, std::fabs(r));
      den = std::max(den, std::fabs(problem.rhs(i, j)));
    }
  }
  return num / std::max(den, 1e-300);
}

} // namespace npe
