#pragma once

#include <span>
#include <vector>

#include "linalg.hpp"
#include "model.hpp"
#include "newton.hpp"

namespace bratu {

// Left end of the interval. Neumann is the model problem (insulated end,
// imposed through the ghost identity u_{-1} = u_{1}, which doubles the
// first superdiagonal); Dirichlet is a test configuration with both
// boundary values eliminated.
enum class LeftBoundary { Neumann, Dirichlet };

// Neumann: unknowns at x_0 .. x_{M-2} (the right Dirichlet value u = 0 is
// eliminated). Dirichlet: unknowns at x_1 .. x_{M-2}.
int unknown_count_1d(const Grid1D& grid, LeftBoundary bc);

// Coordinate of unknown i under the chosen boundary layout.
double unknown_x_1d(const Grid1D& grid, LeftBoundary bc, int i);

// Second-difference operator scaled by 1/dx^2, with the mirror first row
// for the Neumann layout. Row sums vanish except where an eliminated
// boundary column is touched.
TriDiagSystem assemble_matrix_1d(const Grid1D& grid,
                                 LeftBoundary bc = LeftBoundary::Neumann);

// Solution of u'' + q = 0 under the same boundary conditions:
// q/2 (1 - x^2) for Neumann, q/2 x (1 - x) for Dirichlet.
std::vector<double> initial_guess_1d(double q, const Grid1D& grid,
                                     LeftBoundary bc = LeftBoundary::Neumann);

// The nonlinear system N(u) = A u + q e^u = 0 on one grid, bundled for the
// Newton driver. State vectors hold the unknowns only.
class Problem1D {
 public:
  Problem1D(const Grid1D& grid, double q,
            LeftBoundary bc = LeftBoundary::Neumann);

  int size() const { return op_.size(); }
  const Grid1D& grid() const { return grid_; }
  double q() const { return q_; }
  LeftBoundary left_boundary() const { return bc_; }
  const TriDiagSystem& matrix() const { return op_; }

  std::vector<double> initial_guess() const {
    return initial_guess_1d(q_, grid_, bc_);
  }

  // A u + q e^u. Overflow when any u_i exceeds kExpOverflow.
  EvalStatus residual(std::span<const double> u, std::span<double> out) const;

  // A with the diagonal shifted by q e^{u_i}.
  EvalStatus jacobian(std::span<const double> u, TriDiagSystem& out) const;

  // Solves J(u) step = -res by Thomas elimination.
  EvalStatus newton_step(std::span<const double> u,
                         std::span<const double> res,
                         std::span<double> step) const;

 private:
  Grid1D grid_;
  double q_;
  LeftBoundary bc_;
  TriDiagSystem op_;
};

}  // namespace bratu
