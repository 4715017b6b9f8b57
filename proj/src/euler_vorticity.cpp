#include "npe/euler_vorticity.hpp"

#include <algorithm>
#include <cmath>

#include "npe/field_ops.hpp"

namespace npe {

VorticityState recover_velocity(const ScalarField& omega, PoissonMethod method) {
  const Grid& g = omega.grid;
  EllipticProblem problem{omega, BoundaryTrace::constant(g, 0.0), 1.0};
  VorticityState out;
  out.omega = omega;
  out.theta = solve_dirichlet(problem, method);
  VectorField grad = gradient(out.theta);
  out.u = VectorField(g);
  for (std::size_t k = 0; k < g.size(); ++k) {
    out.u.x.values[k] = grad.y.values[k];
    out.u.y.values[k] = -grad.x.values[k];
  }
  return out;
}

namespace {

inline Point clamp_point(const Grid& g, Point p) {
  return {std::clamp(p.x, 0.0, g.Lx), std::clamp(p.y, 0.0, g.Ly)};
}

} // namespace

Point trace_characteristic(const VectorField& u, Point x, double dt) {
  const Grid& g = u.grid();
  double ux = interpolate(u.x, x), uy = interpolate(u.y, x);
  Point mid = clamp_point(g, {x.x - 0.5 * dt * ux, x.y - 0.5 * dt * uy});
  double mx = interpolate(u.x, mid), my = interpolate(u.y, mid);
  return clamp_point(g, {x.x - dt * mx, x.y - dt * my});
}

ScalarField advance_vorticity(const VorticityState& state, const ScalarField& rho,
                              const ScalarField& phi, double dt,
                              const VorticityAdvanceOptions& opts) {
  const Grid& g = state.omega.grid;
  if (!(rho.grid == g) || !(phi.grid == g))
    throw Error(ErrorKind::InvalidArgument, "advance_vorticity: grid mismatch");

  VectorField perp_rho = perp_gradient(rho);
  VectorField grad_phi = gradient(phi);
  double K = opts.flip_force_sign ? -opts.coupling : opts.coupling;

  ScalarField out(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      Point foot = trace_characteristic(state.u, {g.x(i), g.y(j)}, dt);
      double transported = opts.interpolation == FootInterpolation::Bilinear
                               ? interpolate(state.omega, foot)
                               : interpolate_bicubic(state.omega, foot);
      std::size_t k = g.index(i, j);
      double source = perp_rho.x.values[k] * grad_phi.x.values[k] +
                      perp_rho.y.values[k] * grad_phi.y.values[k];
      double w = transported - dt * K * source;
      if (opts.forcing) w += dt * opts.forcing->values[k];
      out.values[k] = w;
    }
  }
  return out;
}

} // namespace npe
