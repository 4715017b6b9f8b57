#pragma once
#include <string>
#include <vector>

#include "npe/euler_vorticity.hpp"
#include "npe/nernst_planck.hpp"
#include "npe/poisson.hpp"

namespace npe {

/// Everything a run needs: discretization, species data, physical constants,
/// potential boundary data, initial vorticity and time-stepping knobs.
struct SimConfig {
  Grid grid;
  SpeciesSet species;
  double epsilon = 1.0;
  double coupling_K = 1.0;
  BoundaryTrace h_trace;
  ScalarField omega0; // initial vorticity (defaults to zero)

  double T_final = 1.0;
  double cfl = 0.5;
  int picard_k = 1;
  double picard_tol = 1e-8;
  double output_cadence = 0.1;
  double dt_max = 1e30;
  int monitor_p = 4;

  PoissonMethod poisson_method = PoissonMethod::FastSine;
  FootInterpolation interpolation = FootInterpolation::Bilinear;
  bool flip_lorentz_force = false; // negative-control toggle, tests only

  // Source text of the analytic profiles, kept for canonical serialization.
  struct Profiles {
    std::vector<std::string> c0;
    std::vector<std::string> gamma;
    std::string h = "const:0";
    std::string psi0 = "const:0";
  } profiles;

  void validate() const;
};

/// The evolved tuple (c_i, phi, u) plus the cached split and charge density.
struct SimState {
  double t = 0.0;
  std::vector<ScalarField> c;
  ScalarField rho, phi, phi0, phih;
  VorticityState vort;
};

/// Builds the t = 0 state: species initial data with the boundary trace
/// applied (the overwrite magnitude is reported through the optional output),
/// consistent potential split, and velocity recovered from config.omega0.
SimState initial_state(const SimConfig& config, double* boundary_overwrite = nullptr);

/// Re-derives rho and the potential split from the current concentrations.
void refresh_potential(SimState& state, const SimConfig& config);

/// Checks the SimState consistency invariants (charge density within ulps,
/// potential residual, boundary traces). Throws on violation.
void validate_state(const SimState& state, const SimConfig& config);

} // namespace npe
