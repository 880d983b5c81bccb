#include "analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace bratu {

namespace {

// ln(cosh t) without overflow for large |t|.
double log_cosh(double t) {
  const double a = std::abs(t);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

template <class F>
double bisect_to_limit(F f, double lo, double hi) {
  double flo = f(lo);
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;  // interval collapsed
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
}

FoldPoint compute_fold() {
  // coth(mu) - mu is positive at 1 and negative at 2.
  const double mu = bisect_to_limit(
      [](double m) { return 1.0 / std::tanh(m) - m; }, 1.0, 2.0);
  const double sh = std::sinh(mu);
  return {2.0 / (sh * sh), mu};
}

}  // namespace

const FoldPoint& critical_point() {
  static const FoldPoint fold = compute_fold();
  return fold;
}

double solve_mu(double q, Branch branch) {
  if (!std::isfinite(q) || q <= 0.0) {
    throw std::domain_error("solve_mu: q must be finite and positive");
  }
  const FoldPoint& fold = critical_point();
  if (q >= fold.q_crit) {
    throw NoRootError("solve_mu: no root for q = " + std::to_string(q) +
                      " at or above the fold q_crit = " +
                      std::to_string(fold.q_crit));
  }

  const double slope = std::sqrt(2.0 / q);
  auto phi = [&](double m) { return std::cosh(m) - slope * m; };

  // phi > 0 at both bracket ends away from the fold, < 0 at mu_star.
  double lo, hi;
  if (branch == Branch::Lower) {
    lo = 0.0;
    hi = fold.mu_star;
  } else {
    lo = fold.mu_star;
    hi = 50.0;
    if (!(phi(hi) > 0.0)) {
      throw NoRootError("solve_mu: upper root outside the search interval");
    }
  }

  // Bisection to a narrow bracket, then guarded Newton polish.
  double flo = phi(lo);
  for (int it = 0; it < 80 && hi - lo > 1e-10; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = phi(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }

  double mu = 0.5 * (lo + hi);
  double best = std::abs(phi(mu));
  for (int it = 0; it < 12; ++it) {
    const double deriv = std::sinh(mu) - slope;
    if (deriv == 0.0) break;
    const double next = mu - phi(mu) / deriv;
    if (!(next > lo && next < hi)) break;  // keep the bracket
    const double fnext = std::abs(phi(next));
    if (fnext >= best) break;
    mu = next;
    best = fnext;
  }
  return mu;
}

AnalyticSolution::AnalyticSolution(double q, Branch branch)
    : q_(q), mu_(solve_mu(q, branch)), branch_(branch),
      peak_(std::log(2.0 * mu_ * mu_ / q)) {}

double AnalyticSolution::operator()(double x) const {
  return peak_ - 2.0 * log_cosh(mu_ * x);
}

std::vector<double> AnalyticSolution::evaluate(
    std::span<const double> xs) const {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back((*this)(x));
  return out;
}

}  // namespace bratu
