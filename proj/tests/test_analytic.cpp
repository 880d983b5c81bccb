#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "analytic.hpp"
#include "errors.hpp"

using namespace bratu;

namespace {

// Independent bisection oracle for the mu-relation, 200 halvings from a
// sign-changing bracket. Everything the implementation is checked against
// below was computed with this.
template <class F>
double bisect200(F f, double lo, double hi) {
  double flo = f(lo);
  REQUIRE(flo * f(hi) <= 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double oracle_mu_star() {
  return bisect200([](double m) { return 1.0 / std::tanh(m) - m; }, 1.0, 2.0);
}

double oracle_mu(double q, Branch branch) {
  const double slope = std::sqrt(2.0 / q);
  auto phi = [&](double m) { return std::cosh(m) - slope * m; };
  const double ms = oracle_mu_star();
  return branch == Branch::Lower ? bisect200(phi, 1e-14, ms)
                                 : bisect200(phi, ms, 50.0);
}

}  // namespace

TEST_CASE("fold point matches the bisection oracle") {
  const double mu_star = oracle_mu_star();
  const double q_crit = 2.0 / (std::sinh(mu_star) * std::sinh(mu_star));

  // Frozen oracle values.
  CHECK(mu_star == doctest::Approx(1.199678640257734).epsilon(1e-14));
  CHECK(q_crit == doctest::Approx(0.8784576797812901).epsilon(1e-14));

  const FoldPoint& fold = critical_point();
  CHECK(fold.mu_star == doctest::Approx(mu_star).epsilon(1e-14));
  CHECK(fold.q_crit == doctest::Approx(q_crit).epsilon(1e-14));

  // Rounds to the three-decimal threshold value.
  CHECK(std::round(fold.q_crit * 1000.0) / 1000.0 == doctest::Approx(0.878));

  // Tangency: at the fold both the relation and its derivative vanish.
  const double slope = std::sqrt(2.0 / fold.q_crit);
  CHECK(std::cosh(fold.mu_star) - slope * fold.mu_star ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::sinh(fold.mu_star) - slope == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("solve_mu finds both branches at q = 0.5") {
  // Frozen from the oracle above.
  CHECK(oracle_mu(0.5, Branch::Lower) ==
        doctest::Approx(0.5893877634693505).epsilon(1e-13));
  CHECK(oracle_mu(0.5, Branch::Upper) ==
        doctest::Approx(2.1267998926782568).epsilon(1e-13));

  const double lower = solve_mu(0.5, Branch::Lower);
  const double upper = solve_mu(0.5, Branch::Upper);
  CHECK(lower == doctest::Approx(0.5893877634693505).epsilon(1e-12));
  CHECK(upper == doctest::Approx(2.1267998926782568).epsilon(1e-12));
  CHECK(lower < critical_point().mu_star);
  CHECK(upper > critical_point().mu_star);
}

TEST_CASE("solve_mu residual criterion over the existence range") {
  for (double q = 0.01; q < critical_point().q_crit - 1e-3; q += 0.035) {
    for (Branch b : {Branch::Lower, Branch::Upper}) {
      const double mu = solve_mu(q, b);
      const double resid = std::abs(std::cosh(mu) - std::sqrt(2.0 / q) * mu);
      CHECK(resid <= 1e-12 * std::max(1.0, std::cosh(mu)));
    }
  }
}

TEST_CASE("solve_mu error cases") {
  CHECK_THROWS_AS(solve_mu(0.0, Branch::Lower), std::domain_error);
  CHECK_THROWS_AS(solve_mu(-0.5, Branch::Lower), std::domain_error);
  CHECK_THROWS_AS(solve_mu(std::nan(""), Branch::Lower), std::domain_error);
  // Above the fold there is no root on either branch.
  CHECK_THROWS_AS(solve_mu(0.9, Branch::Lower), NoRootError);
  CHECK_THROWS_AS(solve_mu(0.9, Branch::Upper), NoRootError);
  CHECK_THROWS_AS(solve_mu(critical_point().q_crit, Branch::Lower), NoRootError);
}

TEST_CASE("lower root increases with q, upper decreases, both meet the fold") {
  const FoldPoint& fold = critical_point();
  double prev_lower = 0.0;
  double prev_upper = 1e9;
  for (double q = 0.05; q < fold.q_crit; q += 0.05) {
    const double lo = solve_mu(q, Branch::Lower);
    const double up = solve_mu(q, Branch::Upper);
    CHECK(lo > prev_lower);
    CHECK(up < prev_upper);
    prev_lower = lo;
    prev_upper = up;
  }
  CHECK(solve_mu(fold.q_crit - 1e-9, Branch::Lower) ==
        doctest::Approx(fold.mu_star).epsilon(1e-4));
  CHECK(solve_mu(fold.q_crit - 1e-9, Branch::Upper) ==
        doctest::Approx(fold.mu_star).epsilon(1e-4));
}

TEST_CASE("closed-form solution values at q = 0.5") {
  const AnalyticSolution u(0.5, Branch::Lower);
  // u(0) = ln(2 mu^2 / q), frozen from the oracle root.
  CHECK(u(0.0) == doctest::Approx(0.3289524213411135).epsilon(1e-12));
  CHECK(std::abs(u(1.0)) <= 1e-12);
  CHECK(u(0.3) == doctest::Approx(u(-0.3)).epsilon(1e-15));  // cosh is even
}

TEST_CASE("closed form satisfies the ODE under centered differences") {
  // The h = 1e-4 second difference amplifies evaluation rounding by 1/h^2,
  // so the oracle evaluates the closed form in extended precision (the
  // implementation's root mu still defines the function under test).
  const long double h = 1e-4L;
  for (double q : {0.1, 0.3, 0.5, 0.7, 0.85}) {
    const AnalyticSolution u(q, Branch::Lower);
    const long double mu = u.mu();
    const long double peak = std::log(2.0L * mu * mu / static_cast<long double>(q));
    auto eval = [&](long double x) {
      return peak - 2.0L * std::log(std::cosh(mu * x));
    };
    for (double x = 0.1; x <= 0.9; x += 0.1) {
      // the double-precision evaluation agrees with the extended one
      CHECK(std::abs(u(x) - static_cast<double>(eval(x))) <=
            1e-14 * (1.0 + std::abs(u(x))));
      const long double upp =
          (eval(x - h) - 2.0L * eval(x) + eval(x + h)) / (h * h);
      const long double resid = upp + q * std::exp(eval(x));
      CHECK(std::abs(static_cast<double>(resid)) <= 1e-8);
    }
  }
}

TEST_CASE("lower branch is decreasing with an insulated left end") {
  for (double q : {0.05, 0.4, 0.8}) {
    const AnalyticSolution u(q, Branch::Lower);
    CHECK(std::abs(u(1.0)) <= 1e-12);
    double prev = u(0.0);
    for (double x = 0.05; x <= 1.0; x += 0.05) {
      CHECK(u(x) < prev);
      prev = u(x);
    }
    // Centered slope at 0 shrinks second order in h.
    const double s1 = (u(0.1) - u(-0.1)) / 0.2;
    const double s2 = (u(0.01) - u(-0.01)) / 0.02;
    CHECK(std::abs(s1) <= 1e-12);
    CHECK(std::abs(s2) <= 1e-13);
  }
}

TEST_CASE("evaluate maps a coordinate list") {
  const AnalyticSolution u(0.5, Branch::Lower);
  const std::vector<double> xs{0.0, 0.25, 1.0};
  const std::vector<double> vals = u.evaluate(xs);
  REQUIRE(vals.size() == 3);
  for (size_t i = 0; i < xs.size(); ++i) {
    CHECK(vals[i] == doctest::Approx(u(xs[i])).epsilon(1e-15));
  }
}
