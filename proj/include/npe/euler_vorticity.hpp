#pragma once
#include "npe/grid.hpp"
#include "npe/poisson.hpp"

namespace npe {

enum class FootInterpolation { Bilinear, Bicubic };

/// Vorticity with its cached stream function and velocity. theta solves
/// -Lap theta = omega with theta = 0 on the boundary, and
/// u = (d theta/dy, -d theta/dx), so u.n = 0 on the boundary exactly.
struct VorticityState {
  ScalarField omega;
  ScalarField theta;
  VectorField u;
};

/// Stream-function solve plus velocity recovery.
VorticityState recover_velocity(const ScalarField& omega,
                                PoissonMethod method = PoissonMethod::FastSine);

/// Backward characteristic foot via one two-stage midpoint step, clamped onto
/// the closed domain.
Point trace_characteristic(const VectorField& u, Point x, double dt);

struct VorticityAdvanceOptions {
  double coupling = 1.0;          // K
  bool flip_force_sign = false;   // negative-control toggle for the energy check
  FootInterpolation interpolation = FootInterpolation::Bilinear;
  const ScalarField* forcing = nullptr; // explicit source, evaluated by caller
};

/// Semi-Lagrangian step: omega_new(x) = omega(foot(x)) - dt*K*(perp-grad rho .
/// grad phi)(x), applied at every node including the boundary.
ScalarField advance_vorticity(const VorticityState& state, const ScalarField& rho,
                              const ScalarField& phi, double dt,
                              const VorticityAdvanceOptions& opts = {});

} // namespace npe
