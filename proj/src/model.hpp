#pragma once

namespace bratu {

// Dimensional parameters of the ignition balance a*lap(T) + Q*k(T) = 0 with
// Arrhenius rate k(T) = A * exp(-Ta/T). All fields strictly positive.
struct PhysicalParams {
  double heat_release;     // Q  [K]
  double pre_exponential;  // A  [1/s]
  double length;           // characteristic vessel size [m]
  double activation_temp;  // Ta [K]
  double ambient_temp;     // T0 [K]
  double diffusivity;      // a  [m^2/s]
};

// Dimensionless reaction intensity; solutions exist only below a critical
// value (see analytic.hpp).
struct ReactionParam {
  double q;
};

// q = Q * A * ell^2 * Ta * exp(-theta) / (a * T0^2), theta = Ta/T0.
// theta is always derived from the stored temperatures, never carried.
// Throws std::domain_error for non-positive or non-finite inputs.
ReactionParam dimensionless_q(const PhysicalParams& p);

// Step data on the x = ell wall: 0 on [0, 1/2), 1 on [1/2, 1]. The closed
// end of the bracket is honored: g(1/2) = 1.
// Throws std::domain_error for y outside [0, 1].
double boundary_g(double y);

// Uniform lattice on [0,1]: x_i = i * dx, dx = 1/(nodes-1).
class Grid1D {
 public:
  explicit Grid1D(int node_count);  // throws std::domain_error if < 3

  int nodes() const { return nodes_; }
  double dx() const { return dx_; }
  double x(int i) const { return i * dx_; }

 private:
  int nodes_;
  double dx_;
};

// Uniform lattice on [0,ell] x [0,1]. The x-boundary columns carry
// Dirichlet data and are eliminated; every y-row is retained, so the
// unknown count is (x_nodes - 2) * y_nodes.
class Grid2D {
 public:
  Grid2D(int x_nodes, int y_nodes, double aspect_ratio);

  int x_nodes() const { return mx_; }
  int y_nodes() const { return ny_; }
  double aspect_ratio() const { return ell_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double x(int j) const { return j * dx_; }
  double y(int k) const { return k * dy_; }
  int unknowns() const { return (mx_ - 2) * ny_; }

 private:
  int mx_;
  int ny_;
  double ell_;
  double dx_;
  double dy_;
};

}  // namespace bratu
