#include "npe/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace npe {

BoundaryTrace BoundaryTrace::of_field(const ScalarField& f) {
  const Grid& g = f.grid;
  BoundaryTrace t(g);
  for (int i = 0; i < g.nx; ++i) {
    t.bottom[i] = f(i, 0);
    t.top[i] = f(i, g.ny - 1);
  }
  for (int j = 0; j < g.ny; ++j) {
    t.left[j] = f(0, j);
    t.right[j] = f(g.nx - 1, j);
  }
  return t;
}

void BoundaryTrace::validate(const Grid& g) const {
  if (static_cast<int>(bottom.size()) != g.nx || static_cast<int>(top.size()) != g.nx ||
      static_cast<int>(left.size()) != g.ny || static_cast<int>(right.size()) != g.ny)
    throw Error(ErrorKind::Validation, "BoundaryTrace: edge length mismatch");
  auto corner = [&](double a, double b, const char* where) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    if (std::fabs(a - b) > 1e-12 * scale)
      throw Error(ErrorKind::Validation,
                  std::string("BoundaryTrace: corner mismatch at ") + where);
  };
  corner(bottom.front(), left.front(), "(0,0)");
  corner(bottom.back(), right.front(), "(Lx,0)");
  corner(top.front(), left.back(), "(0,Ly)");
  corner(top.back(), right.back(), "(Lx,Ly)");
}

void BoundaryTrace::normalize_corners() {
  auto merge = [](double& a, double& b) {
    double v = 0.5 * (a + b);
    a = v;
    b = v;
  };
  merge(bottom.front(), left.front());
  merge(bottom.back(), right.front());
  merge(top.front(), left.back());
  merge(top.back(), right.back());
}

double BoundaryTrace::min_value() const {
  double m = bottom.empty() ? 0.0 : bottom[0];
  for (const auto* e : {&bottom, &top, &left, &right})
    for (double v : *e) m = std::min(m, v);
  return m;
}

double BoundaryTrace::max_value() const {
  double m = bottom.empty() ? 0.0 : bottom[0];
  for (const auto* e : {&bottom, &top, &left, &right})
    for (double v : *e) m = std::max(m, v);
  return m;
}

void BoundaryTrace::apply(ScalarField& f) const {
  const Grid& g = f.grid;
  for (int i = 0; i < g.nx; ++i) {
    f(i, 0) = bottom[i];
    f(i, g.ny - 1) = top[i];
  }
  for (int j = 0; j < g.ny; ++j) {
    f(0, j) = left[j];
    f(g.nx - 1, j) = right[j];
  }
}

ScalarField lift_trace(const Grid& g, const BoundaryTrace& t) {
  ScalarField out(g);
  const double c00 = t.bottom.front(), c10 = t.bottom.back();
  const double c01 = t.top.front(), c11 = t.top.back();
  for (int j = 0; j < g.ny; ++j) {
    double b = g.y(j) / g.Ly;
    for (int i = 0; i < g.nx; ++i) {
      double a = g.x(i) / g.Lx;
      double v = (1.0 - a) * t.left[j] + a * t.right[j] +
                 (1.0 - b) * t.bottom[i] + b * t.top[i] -
                 ((1.0 - a) * (1.0 - b) * c00 + a * (1.0 - b) * c10 +
                  (1.0 - a) * b * c01 + a * b * c11);
      out(i, j) = v;
    }
  }
  // Coons blend reproduces edges only up to rounding; pin them exactly.
  t.apply(out);
  return out;
}

} // namespace npe
