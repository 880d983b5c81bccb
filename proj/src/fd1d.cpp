#include "fd1d.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace bratu {

int unknown_count_1d(const Grid1D& grid, LeftBoundary bc) {
  return bc == LeftBoundary::Neumann ? grid.nodes() - 1 : grid.nodes() - 2;
}

double unknown_x_1d(const Grid1D& grid, LeftBoundary bc, int i) {
  return bc == LeftBoundary::Neumann ? grid.x(i) : grid.x(i + 1);
}

TriDiagSystem assemble_matrix_1d(const Grid1D& grid, LeftBoundary bc) {
  const int n = unknown_count_1d(grid, bc);
  const double w = 1.0 / (grid.dx() * grid.dx());

  TriDiagSystem sys;
  sys.diag.assign(n, -2.0 * w);
  sys.sup.assign(n - 1, w);
  sys.sub.assign(n - 1, w);
  if (bc == LeftBoundary::Neumann) {
    sys.sup[0] = 2.0 * w;  // ghost row: u_{-1} = u_{1}
  }
  return sys;
}

std::vector<double> initial_guess_1d(double q, const Grid1D& grid,
                                     LeftBoundary bc) {
  if (!std::isfinite(q) || q < 0.0) {
    throw std::domain_error("initial_guess_1d: q must be >= 0");
  }
  const int n = unknown_count_1d(grid, bc);
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) {
    const double x = unknown_x_1d(grid, bc, i);
    u[i] = bc == LeftBoundary::Neumann ? 0.5 * q * (1.0 - x * x)
                                       : 0.5 * q * x * (1.0 - x);
  }
  return u;
}

Problem1D::Problem1D(const Grid1D& grid, double q, LeftBoundary bc)
    : grid_(grid), q_(q), bc_(bc), op_(assemble_matrix_1d(grid, bc)) {
  if (!std::isfinite(q) || q < 0.0) {
    throw std::domain_error("Problem1D: q must be >= 0");
  }
}

EvalStatus Problem1D::residual(std::span<const double> u,
                               std::span<double> out) const {
  assert(static_cast<int>(u.size()) == size());
  for (double v : u) {
    if (!(v <= kExpOverflow)) return EvalStatus::Overflow;
  }
  op_.multiply(u, out);
  for (size_t i = 0; i < u.size(); ++i) {
    out[i] += q_ * std::exp(u[i]);
  }
  return EvalStatus::Ok;
}

EvalStatus Problem1D::jacobian(std::span<const double> u,
                               TriDiagSystem& out) const {
  assert(static_cast<int>(u.size()) == size());
  for (double v : u) {
    if (!(v <= kExpOverflow)) return EvalStatus::Overflow;
  }
  out = op_;
  for (size_t i = 0; i < u.size(); ++i) {
    out.diag[i] += q_ * std::exp(u[i]);
  }
  return EvalStatus::Ok;
}

EvalStatus Problem1D::newton_step(std::span<const double> u,
                                  std::span<const double> res,
                                  std::span<double> step) const {
  TriDiagSystem jac;
  const EvalStatus st = jacobian(u, jac);
  if (st != EvalStatus::Ok) return st;

  std::vector<double> rhs(res.size());
  for (size_t i = 0; i < res.size(); ++i) rhs[i] = -res[i];
  try {
    const std::vector<double> s = solve_tridiag(jac, rhs);
    std::copy(s.begin(), s.end(), step.begin());
  } catch (const SingularSystemError&) {
    return EvalStatus::Singular;
  }
  return EvalStatus::Ok;
}

}  // namespace bratu
