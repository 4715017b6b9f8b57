#pragma once
#include "npe/grid.hpp"

namespace npe {

/// Second-order gradient: centered differences at interior nodes, one-sided
/// three-point stencils on the boundary.
VectorField gradient(const ScalarField& f);

/// (-d/dy, d/dx) with the same stencils as gradient.
VectorField perp_gradient(const ScalarField& f);

/// Five-point Laplacian at interior nodes. Boundary entries are filled with
/// one-sided second-difference evaluations and are untrusted: diagnostics and
/// residual checks must restrict themselves to interior nodes.
ScalarField laplacian(const ScalarField& f);

/// Centered divergence of a vector field (interior centered, boundary
/// one-sided), used by the discrete-incompressibility checks.
ScalarField divergence(const VectorField& v);

/// Bilinear interpolation. Points within 1e-12*max(hx,hy) of the closed
/// domain are clamped onto it; anything farther out is a domain violation.
double interpolate(const ScalarField& f, Point p);

/// Catmull-Rom bicubic interpolation (optional characteristic-feet scheme).
/// Not monotone; selected behind a configuration flag.
double interpolate_bicubic(const ScalarField& f, Point p);

/// Composite trapezoidal L^p norm; p = infinity gives max |f|. p < 1 is
/// rejected.
double lp_norm(const ScalarField& f, double p);

/// Trapezoidal quadrature of f itself (no absolute value, no root).
double integrate(const ScalarField& f);

double max_abs(const ScalarField& f);

} // namespace npe
