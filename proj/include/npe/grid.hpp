#pragma once
#include <cmath>
#include <cstddef>
#include <vector>

#include "npe/errors.hpp"

namespace npe {

/// Uniform node-centered lattice on the rectangle [0,Lx] x [0,Ly].
/// Nodes are stored row-major: index(i,j) = j*nx + i, with x_i = i*hx and
/// y_j = j*hy.
struct Grid {
  int nx = 0;
  int ny = 0;
  double Lx = 0.0;
  double Ly = 0.0;
  double hx = 0.0;
  double hy = 0.0;

  Grid() = default;
  Grid(int nx_, int ny_, double Lx_, double Ly_)
      : nx(nx_), ny(ny_), Lx(Lx_), Ly(Ly_) {
    if (nx < 3 || ny < 3)
      throw Error(ErrorKind::Validation, "Grid: nx and ny must be >= 3");
    if (!(Lx > 0.0) || !(Ly > 0.0))
      throw Error(ErrorKind::Validation, "Grid: Lx and Ly must be > 0");
    hx = Lx / (nx - 1);
    hy = Ly / (ny - 1);
  }

  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  double x(int i) const { return i * hx; }
  double y(int j) const { return j * hy; }
  bool is_boundary(int i, int j) const {
    return i == 0 || j == 0 || i == nx - 1 || j == ny - 1;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.nx == b.nx && a.ny == b.ny && a.Lx == b.Lx && a.Ly == b.Ly;
  }
};

/// Real values on every node of a Grid.
struct ScalarField {
  Grid grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0)
      : grid(g), values(g.size(), fill) {}

  double& operator()(int i, int j) { return values[grid.index(i, j)]; }
  double operator()(int i, int j) const { return values[grid.index(i, j)]; }

  template <class F>
  static ScalarField sample(const Grid& g, F&& f) {
    ScalarField out(g);
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        out(i, j) = f(g.x(i), g.y(j));
    return out;
  }

  void require_finite(const char* what = "field") const {
    for (double v : values)
      if (!std::isfinite(v))
        throw Error(ErrorKind::Validation,
                    std::string(what) + ": non-finite entry");
  }
};

struct VectorField {
  ScalarField x;
  ScalarField y;

  VectorField() = default;
  explicit VectorField(const Grid& g) : x(g), y(g) {}
  VectorField(ScalarField cx, ScalarField cy)
      : x(std::move(cx)), y(std::move(cy)) {
    if (!(x.grid == y.grid))
      throw Error(ErrorKind::Validation,
                  "VectorField: components must share one grid");
  }

  const Grid& grid() const { return x.grid; }
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

} // namespace npe
