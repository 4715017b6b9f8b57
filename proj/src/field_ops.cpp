#include "npe/field_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace npe {

namespace {

// d/dx along a row-major line: stride 1 in x, stride nx in y.
inline double d1(const double* v, std::size_t k, int pos, int n,
                 std::ptrdiff_t stride, double h) {
  if (pos == 0)
    return (-3.0 * v[k] + 4.0 * v[k + stride] - v[k + 2 * stride]) / (2.0 * h);
  if (pos == n - 1)
    return (3.0 * v[k] - 4.0 * v[k - stride] + v[k - 2 * stride]) / (2.0 * h);
  return (v[k + stride] - v[k - stride]) / (2.0 * h);
}

// One-sided second difference, second order where four points exist.
inline double d2_one_sided(const double* v, std::size_t k, int n,
                           std::ptrdiff_t stride, double h) {
  if (n >= 4)
    return (2.0 * v[k] - 5.0 * v[k + stride] + 4.0 * v[k + 2 * stride] -
            v[k + 3 * stride]) / (h * h);
  return (v[k] - 2.0 * v[k + stride] + v[k + 2 * stride]) / (h * h);
}

inline double d2(const double* v, std::size_t k, int pos, int n,
                 std::ptrdiff_t stride, double h) {
  if (pos == 0) return d2_one_sided(v, k, n, stride, h);
  if (pos == n - 1) return d2_one_sided(v, k, n, -stride, h);
  return (v[k + stride] - 2.0 * v[k] + v[k - stride]) / (h * h);
}

} // namespace

VectorField gradient(const ScalarField& f) {
  const Grid& g = f.grid;
  VectorField out(g);
  const double* v = f.values.data();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      std::size_t k = g.index(i, j);
      out.x.values[k] = d1(v, k, i, g.nx, 1, g.hx);
      out.y.values[k] = d1(v, k, j, g.ny, g.nx, g.hy);
    }
  }
  return out;
}

VectorField perp_gradient(const ScalarField& f) {
  VectorField grad = gradient(f);
  VectorField out(f.grid);
  for (std::size_t k = 0; k < f.grid.size(); ++k) {
    out.x.values[k] = -grad.y.values[k];
    out.y.values[k] = grad.x.values[k];
  }
  return out;
}

ScalarField laplacian(const ScalarField& f) {
  const Grid& g = f.grid;
  ScalarField out(g);
  const double* v = f.values.data();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      std::size_t k = g.index(i, j);
      out.values[k] = d2(v, k, i, g.nx, 1, g.hx) + d2(v, k, j, g.ny, g.nx, g.hy);
    }
  }
  return out;
}

ScalarField divergence(const VectorField& vec) {
  const Grid& g = vec.grid();
  ScalarField out(g);
  const double* vx = vec.x.values.data();
  const double* vy = vec.y.values.data();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      std::size_t k = g.index(i, j);
      out.values[k] = d1(vx, k, i, g.nx, 1, g.hx) + d1(vy, k, j, g.ny, g.nx, g.hy);
    }
  }
  return out;
}

namespace {

struct CellPos {
  int i, j;          // lower-left node of the enclosing cell
  double sx, sy;     // fractions in [0,1]
};

CellPos locate(const Grid& g, Point p) {
  const double tol = 1e-12 * std::max(g.hx, g.hy);
  if (p.x < -tol || p.x > g.Lx + tol || p.y < -tol || p.y > g.Ly + tol)
    throw Error(ErrorKind::DomainViolation, "interpolate: point outside domain");
  double x = std::clamp(p.x, 0.0, g.Lx);
  double y = std::clamp(p.y, 0.0, g.Ly);
  int i = std::min(static_cast<int>(x / g.hx), g.nx - 2);
  int j = std::min(static_cast<int>(y / g.hy), g.ny - 2);
  return {i, j, (x - g.x(i)) / g.hx, (y - g.y(j)) / g.hy};
}

} // namespace

double interpolate(const ScalarField& f, Point p) {
  const Grid& g = f.grid;
  CellPos c = locate(g, p);
  double f00 = f(c.i, c.j), f10 = f(c.i + 1, c.j);
  double f01 = f(c.i, c.j + 1), f11 = f(c.i + 1, c.j + 1);
  double b = (1.0 - c.sx) * f00 + c.sx * f10;
  double t = (1.0 - c.sx) * f01 + c.sx * f11;
  return (1.0 - c.sy) * b + c.sy * t;
}

namespace {

inline double catmull_rom(double fm1, double f0, double f1, double f2, double s) {
  return f0 + 0.5 * s * (f1 - fm1 +
         s * (2.0 * fm1 - 5.0 * f0 + 4.0 * f1 - f2 +
         s * (3.0 * (f0 - f1) + f2 - fm1)));
}

} // namespace

double interpolate_bicubic(const ScalarField& f, Point p) {
  const Grid& g = f.grid;
  CellPos c = locate(g, p);
  auto at = [&](int i, int j) {
    return f(std::clamp(i, 0, g.nx - 1), std::clamp(j, 0, g.ny - 1));
  };
  double rows[4];
  for (int dj = -1; dj <= 2; ++dj)
    rows[dj + 1] = catmull_rom(at(c.i - 1, c.j + dj), at(c.i, c.j + dj),
                               at(c.i + 1, c.j + dj), at(c.i + 2, c.j + dj), c.sx);
  return catmull_rom(rows[0], rows[1], rows[2], rows[3], c.sy);
}

namespace {

// Tensor-product trapezoid weight: h/2 on edges, h inside.
inline double trap_weight(int pos, int n, double h) {
  return (pos == 0 || pos == n - 1) ? 0.5 * h : h;
}

} // namespace

double lp_norm(const ScalarField& f, double p) {
  if (std::isinf(p)) return max_abs(f);
  if (!(p >= 1.0))
    throw Error(ErrorKind::InvalidArgument, "lp_norm: exponent must be >= 1");
  const Grid& g = f.grid;
  double acc = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    double wy = trap_weight(j, g.ny, g.hy);
    for (int i = 0; i < g.nx; ++i) {
      double w = wy * trap_weight(i, g.nx, g.hx);
      acc += w * std::pow(std::fabs(f(i, j)), p);
    }
  }
  return std::pow(acc, 1.0 / p);
}

double integrate(const ScalarField& f) {
  const Grid& g = f.grid;
  double acc = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    double wy = trap_weight(j, g.ny, g.hy);
    for (int i = 0; i < g.nx; ++i)
      acc += wy * trap_weight(i, g.nx, g.hx) * f(i, j);
  }
  return acc;
}

double max_abs(const ScalarField& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::fabs(v));
  return m;
}

} // namespace npe
