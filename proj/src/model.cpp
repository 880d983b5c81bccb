#include "model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bratu {

namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::domain_error(std::string(name) +
                            " must be finite and strictly positive");
  }
}

}  // namespace

ReactionParam dimensionless_q(const PhysicalParams& p) {
  require_positive(p.heat_release, "heat_release");
  require_positive(p.pre_exponential, "pre_exponential");
  require_positive(p.length, "length");
  require_positive(p.activation_temp, "activation_temp");
  require_positive(p.ambient_temp, "ambient_temp");
  require_positive(p.diffusivity, "diffusivity");

  const double theta = p.activation_temp / p.ambient_temp;
  return {p.heat_release * p.pre_exponential * p.length * p.length *
          p.activation_temp * std::exp(-theta) /
          (p.diffusivity * p.ambient_temp * p.ambient_temp)};
}

double boundary_g(double y) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw std::domain_error("boundary_g: y must lie in [0, 1]");
  }
  return y < 0.5 ? 0.0 : 1.0;
}

Grid1D::Grid1D(int node_count) : nodes_(node_count) {
  if (node_count < 3) {
    throw std::domain_error("Grid1D: need at least 3 nodes");
  }
  dx_ = 1.0 / (node_count - 1);
}

Grid2D::Grid2D(int x_nodes, int y_nodes, double aspect_ratio)
    : mx_(x_nodes), ny_(y_nodes), ell_(aspect_ratio) {
  if (x_nodes < 3) {
    throw std::domain_error("Grid2D: need at least 3 x-nodes");
  }
  if (y_nodes < 3) {
    throw std::domain_error("Grid2D: need at least 3 y-nodes");
  }
  if (!std::isfinite(aspect_ratio) || aspect_ratio <= 0.0) {
    throw std::domain_error("Grid2D: aspect ratio must be positive");
  }
  dx_ = ell_ / (mx_ - 1);
  dy_ = 1.0 / (ny_ - 1);
}

}  // namespace bratu
