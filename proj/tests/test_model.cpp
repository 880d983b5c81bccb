#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "model.hpp"

using namespace bratu;

TEST_CASE("dimensionless_q on unit parameters gives exp(-1)") {
  const PhysicalParams p{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  CHECK(dimensionless_q(p).q == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("dimensionless_q is linear in the heat release") {
  const PhysicalParams base{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  PhysicalParams doubled = base;
  doubled.heat_release = 2.0;
  CHECK(dimensionless_q(doubled).q ==
        doctest::Approx(2.0 * dimensionless_q(base).q).epsilon(1e-15));
}

TEST_CASE("dimensionless_q scales quadratically with the vessel size") {
  PhysicalParams p{0.7, 2.0, 0.3, 1.4, 0.9, 1.1};
  const double q1 = dimensionless_q(p).q;
  p.length *= 2.0;
  CHECK(dimensionless_q(p).q == doctest::Approx(4.0 * q1).epsilon(1e-14));
}

TEST_CASE("dimensionless_q rejects non-positive and non-finite input") {
  PhysicalParams p{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  p.activation_temp = 0.0;
  CHECK_THROWS_AS(dimensionless_q(p), std::domain_error);
  p.activation_temp = -1.0;
  CHECK_THROWS_AS(dimensionless_q(p), std::domain_error);
  p.activation_temp = std::nan("");
  CHECK_THROWS_AS(dimensionless_q(p), std::domain_error);
}

TEST_CASE("boundary_g is the closed-bracket step") {
  CHECK(boundary_g(0.0) == 0.0);
  CHECK(boundary_g(0.49999) == 0.0);
  CHECK(boundary_g(0.5) == 1.0);
  CHECK(boundary_g(1.0) == 1.0);
  CHECK_THROWS_AS(boundary_g(-0.01), std::domain_error);
  CHECK_THROWS_AS(boundary_g(1.01), std::domain_error);
  CHECK_THROWS_AS(boundary_g(std::nan("")), std::domain_error);
}

TEST_CASE("boundary_g takes only {0,1} and is non-decreasing") {
  double prev = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double g = boundary_g(i / 1000.0);
    CHECK((g == 0.0 || g == 1.0));
    CHECK(g >= prev);
    prev = g;
  }
}

TEST_CASE("Grid1D lattice") {
  const Grid1D g(11);
  CHECK(g.dx() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(g.x(0) == 0.0);
  CHECK(g.x(3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(g.x(10) == doctest::Approx(1.0).epsilon(1e-15));

  const Grid1D tiny(3);
  CHECK(tiny.dx() == 0.5);
  CHECK(tiny.x(1) == 0.5);
  CHECK(tiny.x(2) == 1.0);

  CHECK_THROWS_AS(Grid1D(2), std::domain_error);
}

TEST_CASE("Grid1D nodes are strictly increasing and affine in the index") {
  for (int m : {3, 7, 101, 1000}) {
    const Grid1D g(m);
    CHECK(std::abs(g.dx() * (m - 1) - 1.0) <= 1e-15);
    for (int i = 1; i < m; ++i) {
      CHECK(g.x(i) > g.x(i - 1));
      CHECK(g.x(i) == doctest::Approx(i * g.dx()).epsilon(1e-15));
    }
  }
}

TEST_CASE("Grid2D lattice and unknown count") {
  const Grid2D g(11, 11, 1.0);
  CHECK(g.dx() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(g.dy() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(g.unknowns() == 9 * 11);
  CHECK(g.x(10) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.y(10) == doctest::Approx(1.0).epsilon(1e-15));

  const Grid2D wide(11, 6, 2.0);
  CHECK(wide.dx() == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(wide.dy() == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(wide.x(10) == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(Grid2D(2, 11, 1.0), std::domain_error);
  CHECK_THROWS_AS(Grid2D(11, 2, 1.0), std::domain_error);
  CHECK_THROWS_AS(Grid2D(11, 11, 0.0), std::domain_error);
  CHECK_THROWS_AS(Grid2D(11, 11, -1.0), std::domain_error);
}
