#include "npe/nernst_planck.hpp"

#include <algorithm>
#include <cmath>

namespace npe {

void Species::validate(const Grid& g) const {
  if (!(diffusivity > 0.0))
    throw Error(ErrorKind::Validation, "Species: D > 0 required");
  if (valence == 0.0)
    throw Error(ErrorKind::Validation, "Species: valence must be nonzero");
  gamma.validate(g);
  if (gamma.min_value() < 0.0)
    throw Error(ErrorKind::Validation, "Species: gamma >= 0 required");
  if (!(c0.grid == g))
    throw Error(ErrorKind::Validation, "Species: c0 grid mismatch");
  for (double v : c0.values)
    if (!(v >= 0.0))
      throw Error(ErrorKind::Validation, "Species: c0 >= 0 required");
}

void SpeciesSet::validate(const Grid& g) const {
  if (species.empty())
    throw Error(ErrorKind::Validation, "SpeciesSet: at least one species");
  for (const Species& s : species) s.validate(g);
  if (mode == SpeciesMode::TwoSpecies && species.size() != 2)
    throw Error(ErrorKind::Validation, "SpeciesSet: TwoSpecies mode requires N = 2");
  if (mode == SpeciesMode::EqualDZ) {
    for (const Species& s : species) {
      if (s.diffusivity != species[0].diffusivity ||
          std::fabs(s.valence) != std::fabs(species[0].valence))
        throw Error(ErrorKind::Validation,
                    "SpeciesSet: EqualDZ mode requires equal D and |z|");
    }
  }
}

double SpeciesSet::max_diffusivity() const {
  double m = 0.0;
  for (const Species& s : species) m = std::max(m, s.diffusivity);
  return m;
}

double SpeciesSet::max_abs_valence() const {
  double m = 0.0;
  for (const Species& s : species) m = std::max(m, std::fabs(s.valence));
  return m;
}

ScalarField charge_density(const SpeciesSet& set, const std::vector<ScalarField>& c) {
  if (c.size() != set.species.size())
    throw Error(ErrorKind::InvalidArgument,
                "charge_density: one field per species required");
  const Grid& g = c.front().grid;
  ScalarField rho(g, 0.0);
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (!(c[s].grid == g))
      throw Error(ErrorKind::InvalidArgument, "charge_density: grid mismatch");
    double z = set.species[s].valence;
    for (std::size_t k = 0; k < g.size(); ++k)
      rho.values[k] += z * c[s].values[k];
  }
  return rho;
}

double bernoulli_weight(double s) {
  double a = std::fabs(s);
  if (a < 1e-4) {
    // s/(e^s-1) = 1 - s/2 + s^2/12 - s^4/720 + O(s^6)
    return 1.0 - 0.5 * s + s * s / 12.0 - s * s * s * s / 720.0;
  }
  return s / std::expm1(s); // s > ~709 gives s/inf = 0, s << 0 gives -s
}

namespace {

// Jacobi-preconditioned BiCGStab on the pentadiagonal SG system, matrix-free.
// Interior unknowns only, row-major (nx-2) x (ny-2).
struct SgSystem {
  int mx, my;
  // Off-diagonal magnitudes (positive); row k couples to k+-1 and k+-mx.
  std::vector<double> diag, west, east, south, north;

  void apply(const std::vector<double>& x, std::vector<double>& y) const {
    for (int j = 0; j < my; ++j) {
      for (int i = 0; i < mx; ++i) {
        std::size_t k = static_cast<std::size_t>(j) * mx + i;
        double v = diag[k] * x[k];
        if (i > 0) v -= west[k] * x[k - 1];
        if (i < mx - 1) v -= east[k] * x[k + 1];
        if (j > 0) v -= south[k] * x[k - mx];
        if (j < my - 1) v -= north[k] * x[k + mx];
        y[k] = v;
      }
    }
  }
};

void bicgstab(const SgSystem& A, const std::vector<double>& b, std::vector<double>& x,
              double tol) {
  const std::size_t n = b.size();
  auto dot = [&](const std::vector<double>& p, const std::vector<double>& q) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += p[k] * q[k];
    return s;
  };
  std::vector<double> r(n), r0(n), p(n, 0.0), v(n, 0.0), s(n), t(n), z(n), y(n);

  A.apply(x, r);
  double bnorm = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    r[k] = b[k] - r[k];
    bnorm += b[k] * b[k];
  }
  bnorm = std::sqrt(bnorm);
  double target = tol * std::max(bnorm, 1e-300);
  if (std::sqrt(dot(r, r)) <= target) return;

  r0 = r;
  double rho_prev = 1.0, alpha = 1.0, omega = 1.0;
  const int cap = 200 + static_cast<int>(20.0 * std::sqrt(double(n)));
  for (int it = 0; it < cap; ++it) {
    double rho = dot(r0, r);
    if (rho == 0.0) { // breakdown: restart with current residual
      A.apply(x, r);
      for (std::size_t k = 0; k < n; ++k) r[k] = b[k] - r[k];
      r0 = r;
      rho = dot(r0, r);
      if (rho == 0.0) break;
      rho_prev = 1.0;
      alpha = omega = 1.0;
      std::fill(p.begin(), p.end(), 0.0);
      std::fill(v.begin(), v.end(), 0.0);
    }
    double beta = (rho / rho_prev) * (alpha / omega);
    for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + beta * (p[k] - omega * v[k]);
    for (std::size_t k = 0; k < n; ++k) y[k] = p[k] / A.diag[k];
    A.apply(y, v);
    alpha = rho / dot(r0, v);
    for (std::size_t k = 0; k < n; ++k) s[k] = r[k] - alpha * v[k];
    if (std::sqrt(dot(s, s)) <= target) {
      for (std::size_t k = 0; k < n; ++k) x[k] += alpha * y[k];
      return;
    }
    for (std::size_t k = 0; k < n; ++k) z[k] = s[k] / A.diag[k];
    A.apply(z, t);
    omega = dot(t, s) / dot(t, t);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] += alpha * y[k] + omega * z[k];
      r[k] = s[k] - omega * t[k];
    }
    rho_prev = rho;
    if (std::sqrt(dot(r, r)) <= target) return;
    if (omega == 0.0) break;
  }
  A.apply(x, t);
  double res = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = b[k] - t[k];
    res += d * d;
  }
  res = std::sqrt(res);
  if (res > target)
    throw Error(ErrorKind::SolverFailure,
                "advance_concentrations: linear solve stalled", res / std::max(bnorm, 1e-300));
}

} // namespace

std::vector<ScalarField> advance_concentrations(const SpeciesSet& set,
                                                const std::vector<ScalarField>& c,
                                                const VectorField& u,
                                                const ScalarField& phi, double dt,
                                                const AdvanceOptions& opts) {
  const Grid& g = phi.grid;
  set.validate(g);
  if (c.size() != set.species.size())
    throw Error(ErrorKind::InvalidArgument,
                "advance_concentrations: one field per species required");
  if (!(dt > 0.0))
    throw Error(ErrorKind::InvalidArgument, "advance_concentrations: dt must be > 0");
  const int mx = g.nx - 2, my = g.ny - 2;
  const std::size_t n = static_cast<std::size_t>(mx) * my;
  const bool forced = opts.forcing != nullptr;

  std::vector<ScalarField> out;
  out.reserve(c.size());

  for (std::size_t s = 0; s < c.size(); ++s) {
    const Species& sp = set.species[s];
    const ScalarField& cn = c[s];
    const double D = sp.diffusivity, z = sp.valence;
    const double ax = D / (g.hx * g.hx), ay = D / (g.hy * g.hy);

    BoundaryTrace gamma = sp.gamma;
    gamma.normalize_corners();

    // Explicit upwind advection, then the implicit flux solve.
    std::vector<double> rhs(n);
    SgSystem A{mx, my,
               std::vector<double>(n), std::vector<double>(n), std::vector<double>(n),
               std::vector<double>(n), std::vector<double>(n)};

    for (int j = 1; j <= my; ++j) {
      for (int i = 1; i <= mx; ++i) {
        std::size_t k = static_cast<std::size_t>(j - 1) * mx + (i - 1);
        double star = cn(i, j);
        double ux = u.x(i, j), uy = u.y(i, j);
        if (ux != 0.0 || uy != 0.0) {
          double adv =
              (ux > 0.0 ? ux * (cn(i, j) - cn(i - 1, j)) : ux * (cn(i + 1, j) - cn(i, j))) / g.hx +
              (uy > 0.0 ? uy * (cn(i, j) - cn(i, j - 1)) : uy * (cn(i, j + 1) - cn(i, j))) / g.hy;
          star -= dt * adv;
        }
        if (forced) star += dt * (*opts.forcing)[s](i, j);
        rhs[k] = star;

        double sE = z * (phi(i + 1, j) - phi(i, j));
        double sW = z * (phi(i, j) - phi(i - 1, j));
        double sN = z * (phi(i, j + 1) - phi(i, j));
        double sS = z * (phi(i, j) - phi(i, j - 1));

        double wE = ax * bernoulli_weight(-sE);
        double wW = ax * bernoulli_weight(sW);
        double wN = ay * bernoulli_weight(-sN);
        double wS = ay * bernoulli_weight(sS);
        A.diag[k] = 1.0 + dt * (ax * bernoulli_weight(sE) + ax * bernoulli_weight(-sW) +
                                ay * bernoulli_weight(sN) + ay * bernoulli_weight(-sS));
        A.east[k] = dt * wE;
        A.west[k] = dt * wW;
        A.north[k] = dt * wN;
        A.south[k] = dt * wS;

        // Dirichlet neighbors contribute to the right-hand side.
        if (i == 1) rhs[k] += dt * wW * gamma.left[j];
        if (i == mx) rhs[k] += dt * wE * gamma.right[j];
        if (j == 1) rhs[k] += dt * wS * gamma.bottom[i];
        if (j == my) rhs[k] += dt * wN * gamma.top[i];
      }
    }

    std::vector<double> x(n);
    for (int j = 1; j <= my; ++j)
      for (int i = 1; i <= mx; ++i)
        x[static_cast<std::size_t>(j - 1) * mx + (i - 1)] = cn(i, j);
    bicgstab(A, rhs, x, opts.solver_tol);

    ScalarField next(g, 0.0);
    for (int j = 1; j <= my; ++j) {
      for (int i = 1; i <= mx; ++i) {
        double v = x[static_cast<std::size_t>(j - 1) * mx + (i - 1)];
        if (!forced && v < 0.0) {
          if (v < -1e-12)
            throw Error(ErrorKind::PositivityViolation,
                        "advance_concentrations: negative concentration", v);
          v = 0.0; // solver-tolerance wiggle on an exact zero
        }
        next(i, j) = v;
      }
    }
    gamma.apply(next);
    out.push_back(std::move(next));
  }
  return out;
}

} // namespace npe
