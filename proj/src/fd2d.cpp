#include "fd2d.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace bratu {

double wall_value(const Options2D& opts, double y) {
  return opts.boundary_data ? opts.boundary_data(y) : boundary_g(y);
}

BandedSystem assemble_matrix_2d(const Grid2D& grid) {
  const int nb = grid.x_nodes() - 2;  // block size
  const int ny = grid.y_nodes();
  const double ax = 1.0 / (grid.dx() * grid.dx());
  const double ay = 1.0 / (grid.dy() * grid.dy());

  BandedSystem sys(nb * ny, nb, nb);
  for (int k = 0; k < ny; ++k) {
    for (int j = 0; j < nb; ++j) {
      const int i = k * nb + j;
      sys.ref(i, i) = -2.0 * (ax + ay);
      if (j + 1 < nb) sys.ref(i, i + 1) = ax;
      if (j > 0) sys.ref(i, i - 1) = ax;
      if (k == 0) {
        sys.ref(i, i + nb) = 2.0 * ay;  // ghost row at y = 0
      } else if (k == ny - 1) {
        sys.ref(i, i - nb) = 2.0 * ay;  // ghost row at y = 1
      } else {
        sys.ref(i, i + nb) = ay;
        sys.ref(i, i - nb) = ay;
      }
    }
  }
  return sys;
}

std::vector<double> assemble_rhs_2d(const Grid2D& grid,
                                    const Options2D& opts) {
  const int nb = grid.x_nodes() - 2;
  const int ny = grid.y_nodes();
  const double ax = 1.0 / (grid.dx() * grid.dx());
  const double ay = 1.0 / (grid.dy() * grid.dy());
  const double coef = opts.paper_literal_bb ? ay : ax;

  std::vector<double> bb(static_cast<size_t>(nb) * ny, 0.0);
  for (int k = 0; k < ny; ++k) {
    bb[static_cast<size_t>(k) * nb + nb - 1] = coef * wall_value(opts, grid.y(k));
  }
  return bb;
}

Problem2D::Problem2D(const Grid2D& grid, double q, Options2D opts)
    : grid_(grid), q_(q), opts_(std::move(opts)),
      op_(assemble_matrix_2d(grid)), bb_(assemble_rhs_2d(grid, opts_)) {
  if (!std::isfinite(q) || q < 0.0) {
    throw std::domain_error("Problem2D: q must be >= 0");
  }
}

std::vector<double> Problem2D::initial_guess() const {
  std::vector<double> rhs(bb_.size());
  for (size_t i = 0; i < bb_.size(); ++i) rhs[i] = -(bb_[i] + q_);
  return solve_banded(op_, rhs);
}

EvalStatus Problem2D::residual(std::span<const double> u,
                               std::span<double> out) const {
  assert(static_cast<int>(u.size()) == size());
  for (double v : u) {
    if (!(v <= kExpOverflow)) return EvalStatus::Overflow;
  }
  op_.multiply(u, out);
  for (size_t i = 0; i < u.size(); ++i) {
    out[i] += bb_[i] + q_ * std::exp(u[i]);
  }
  return EvalStatus::Ok;
}

EvalStatus Problem2D::jacobian(std::span<const double> u,
                               BandedSystem& out) const {
  assert(static_cast<int>(u.size()) == size());
  for (double v : u) {
    if (!(v <= kExpOverflow)) return EvalStatus::Overflow;
  }
  out = op_;
  for (size_t i = 0; i < u.size(); ++i) {
    out.ref(static_cast<int>(i), static_cast<int>(i)) += q_ * std::exp(u[i]);
  }
  return EvalStatus::Ok;
}

EvalStatus Problem2D::newton_step(std::span<const double> u,
                                  std::span<const double> res,
                                  std::span<double> step) const {
  BandedSystem jac(1, 0, 0);
  const EvalStatus st = jacobian(u, jac);
  if (st != EvalStatus::Ok) return st;

  std::vector<double> rhs(res.size());
  for (size_t i = 0; i < res.size(); ++i) rhs[i] = -res[i];
  try {
    const std::vector<double> s = solve_banded(jac, rhs);
    std::copy(s.begin(), s.end(), step.begin());
  } catch (const SingularSystemError&) {
    return EvalStatus::Singular;
  }
  return EvalStatus::Ok;
}

std::vector<double> full_field_2d(const Grid2D& grid, const Options2D& opts,
                                  std::span<const double> u) {
  const int mx = grid.x_nodes();
  const int ny = grid.y_nodes();
  const int nb = mx - 2;
  if (static_cast<int>(u.size()) != nb * ny) {
    throw std::invalid_argument("full_field_2d: unknown count mismatch");
  }

  std::vector<double> field(static_cast<size_t>(mx) * ny);
  for (int k = 0; k < ny; ++k) {
    field[static_cast<size_t>(k) * mx] = 0.0;
    for (int j = 0; j < nb; ++j) {
      field[static_cast<size_t>(k) * mx + 1 + j] =
          u[static_cast<size_t>(k) * nb + j];
    }
    field[static_cast<size_t>(k) * mx + mx - 1] = wall_value(opts, grid.y(k));
  }
  return field;
}

}  // namespace bratu
