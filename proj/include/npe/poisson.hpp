#pragma once
#include "npe/boundary.hpp"
#include "npe/grid.hpp"

namespace npe {

/// scale * (-Laplacian u) = rhs on the interior, u = boundary on the edges.
struct EllipticProblem {
  ScalarField rhs;
  BoundaryTrace boundary;
  double scale = 1.0;

  void validate() const;
};

enum class PoissonMethod {
  FastSine,          // direct solve via DST-I, machine-precision discrete residual
  ConjugateGradient  // iterative fallback, relative residual 1e-10
};

/// Solves the Dirichlet problem. Inhomogeneous boundary data is lifted by the
/// transfinite edge interpolant, the zero-boundary residual problem is solved,
/// and the lift is added back, so both methods share one solver core.
ScalarField solve_dirichlet(const EllipticProblem& problem,
                            PoissonMethod method = PoissonMethod::FastSine);

struct PotentialSplit {
  ScalarField phi;   // phi0 + phih
  ScalarField phi0;  // zero-boundary part:   -Lap phi0 = rho / epsilon
  ScalarField phih;  // harmonic part:        -Lap phih = 0, trace h
};

PotentialSplit decompose_potential(const ScalarField& rho, const BoundaryTrace& h,
                                   double epsilon,
                                   PoissonMethod method = PoissonMethod::FastSine);

/// Relative interior residual ||scale*(-Lap u) - rhs|| / ||rhs|| (max norms,
/// interior nodes only), used by consistency checks and tests.
double dirichlet_residual(const EllipticProblem& problem, const ScalarField& u);

} // namespace npe
