#pragma once
#include <string>
#include <vector>

#include "npe/sim_state.hpp"

namespace npe {

/// One time sample of every monitored norm and identity residual.
struct DiagnosticsRecord {
  double t = 0.0;
  double dt = 0.0; // step that produced this state (0 for the initial record)
  double energy_u = 0.0;       // 1/2 ||u||_L2^2
  double energy_phi0 = 0.0;    // 1/2 K eps ||grad phi0||_L2^2
  double rho_l3 = 0.0;         // integral of |rho|^3
  double dissipation = 0.0;    // K sum_i D_i z_i^2 int c_i |grad phi0|^2
  double energy_identity_residual = 0.0; // filled from consecutive records
  double tangential_u_max = 0.0;
  double omega_l2 = 0.0;
  double omega_l3 = 0.0;
  std::vector<double> l2_c, lp_c, grad_ctilde_l2, min_c;
};

/// Pure function of (state, config). In TwoSpecies mode with opposite-sign
/// valences it also asserts the pointwise inequality z1 c1 - z2 c2 >= |rho|.
DiagnosticsRecord record(const SimState& state, const SimConfig& config);

/// The pointwise charge inequality; true when it holds everywhere (or does
/// not apply because the valences are not of opposite sign).
bool charge_inequality_holds(const SimState& state, const SimConfig& config);

/// Fills energy_identity_residual = (E_k - E_{k-1})/dt_k + dissipation_{k-1}
/// on the homogeneous equal-diffusivity series.
void attach_energy_residuals(std::vector<DiagnosticsRecord>& series);

struct EnergyDecayReport {
  bool pass = true;
  int first_violation = -1;
  double max_excess = 0.0; // worst E increment beyond its per-step tolerance
};

/// Verifies E(t) = energy_u + energy_phi0 nonincreasing within the per-step
/// tolerance 10*dt*max(dissipation) + 1e-10. Only defined for homogeneous
/// boundary data and equal diffusivities.
EnergyDecayReport check_energy_decay(const std::vector<DiagnosticsRecord>& series,
                                     const SimConfig& config);

struct BoundednessFlag {
  std::string quantity;
  int record_index = -1;
  double ratio = 0.0;
};

struct BoundednessReport {
  bool pass = true;
  std::vector<BoundednessFlag> flags;
};

/// Flags super-linear blow-up: the max over trailing windows doubling while
/// the window length halves. `window` is the number of trailing records the
/// first window spans (0 = half the series).
BoundednessReport check_boundedness(const std::vector<DiagnosticsRecord>& series,
                                    int window = 0);

/// Diagnostics CSV: fixed column order, full double precision.
std::string diagnostics_header(int num_species);
std::string diagnostics_row(const DiagnosticsRecord& rec);

} // namespace npe
