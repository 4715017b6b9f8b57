#pragma once
#include <vector>

#include "npe/grid.hpp"

namespace npe {

/// Dirichlet data on the four edges of a rectangle grid. bottom/top are
/// indexed by i (length nx, y = 0 and y = Ly), left/right by j (length ny,
/// x = 0 and x = Lx). Adjacent edges must agree at the shared corners within
/// 1e-12.
struct BoundaryTrace {
  std::vector<double> bottom, top, left, right;

  BoundaryTrace() = default;
  BoundaryTrace(const Grid& g, double fill = 0.0)
      : bottom(g.nx, fill), top(g.nx, fill), left(g.ny, fill), right(g.ny, fill) {}

  static BoundaryTrace constant(const Grid& g, double v) { return BoundaryTrace(g, v); }

  /// Trace of an analytic function along the four edges.
  template <class F>
  static BoundaryTrace sample(const Grid& g, F&& f) {
    BoundaryTrace t(g);
    for (int i = 0; i < g.nx; ++i) {
      t.bottom[i] = f(g.x(i), 0.0);
      t.top[i] = f(g.x(i), g.Ly);
    }
    for (int j = 0; j < g.ny; ++j) {
      t.left[j] = f(0.0, g.y(j));
      t.right[j] = f(g.Lx, g.y(j));
    }
    return t;
  }

  /// Restriction of a field to its boundary nodes.
  static BoundaryTrace of_field(const ScalarField& f);

  void validate(const Grid& g) const;

  /// Replaces the four corner entries by the average of the two adjacent
  /// edge values, so corner values agree bitwise afterwards.
  void normalize_corners();

  double min_value() const;
  double max_value() const;

  /// Writes the trace onto the boundary nodes of a field.
  void apply(ScalarField& f) const;
};

/// Transfinite (bilinear-edge) interpolant of the trace: matches every edge
/// exactly when corners are consistent, and is the lifting used for both the
/// elliptic solves and the shifted concentrations.
ScalarField lift_trace(const Grid& g, const BoundaryTrace& t);

} // namespace npe
