#pragma once
#include <vector>

#include "npe/boundary.hpp"
#include "npe/grid.hpp"

namespace npe {

/// One ionic species: signed valence, diffusivity, nonnegative Dirichlet
/// trace and nonnegative initial data.
struct Species {
  double valence = 1.0;
  double diffusivity = 1.0;
  BoundaryTrace gamma;
  ScalarField c0;

  void validate(const Grid& g) const;
};

enum class SpeciesMode { TwoSpecies, EqualDZ, Unrestricted };

struct SpeciesSet {
  std::vector<Species> species;
  SpeciesMode mode = SpeciesMode::Unrestricted;

  int count() const { return static_cast<int>(species.size()); }
  void validate(const Grid& g) const;
  double max_diffusivity() const;
  double max_abs_valence() const;
};

/// rho = sum_i z_i c_i.
ScalarField charge_density(const SpeciesSet& set, const std::vector<ScalarField>& c);

/// Exponential-fitting weight B(s) = s / (e^s - 1), series branch for
/// |s| < 1e-4.
double bernoulli_weight(double s);

struct AdvanceOptions {
  // Forcing per species, already evaluated at the step's source time; added
  // explicitly to the right-hand side. With forcing the discrete maximum
  // principle no longer applies and the positivity check is skipped.
  const std::vector<ScalarField>* forcing = nullptr;
  double solver_tol = 1e-10;
};

/// One IMEX step of the drift-diffusion system: explicit first-order upwind
/// advection by u, then an implicit Scharfetter-Gummel flux solve per species
/// with the potential frozen. Boundary nodes are reset to gamma; interior
/// values of the unforced scheme stay nonnegative exactly.
std::vector<ScalarField> advance_concentrations(const SpeciesSet& set,
                                                const std::vector<ScalarField>& c,
                                                const VectorField& u,
                                                const ScalarField& phi, double dt,
                                                const AdvanceOptions& opts = {});

} // namespace npe
