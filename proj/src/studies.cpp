#include "studies.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "analytic.hpp"
#include "errors.hpp"
#include "fd1d.hpp"

namespace bratu {

namespace {

bool converges(double q, const Grid1D& grid, const NewtonConfig& cfg) {
  const Problem1D problem(grid, q);
  return newton_solve(problem, problem.initial_guess(), cfg).report.converged;
}

}  // namespace

SweepResult threshold_sweep(double q_lo, double q_hi, double dq,
                            const Grid1D& grid, const NewtonConfig& cfg) {
  if (!std::isfinite(q_lo) || !std::isfinite(q_hi) || !std::isfinite(dq)) {
    throw std::domain_error("threshold_sweep: parameters must be finite");
  }
  if (!(q_lo > 0.0) || !(q_hi > q_lo) || !(dq > 0.0)) {
    throw std::domain_error(
        "threshold_sweep: need 0 < q_lo < q_hi and dq > 0");
  }

  SweepResult result;
  const int count = static_cast<int>(std::floor((q_hi - q_lo) / dq + 1e-9)) + 1;
  result.q_values.reserve(count);
  result.converged.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double q = q_lo + i * dq;
    result.q_values.push_back(q);
    result.converged.push_back(converges(q, grid, cfg));
  }

  int first_fail = -1;
  for (int i = 0; i < count; ++i) {
    if (!result.converged[i]) {
      first_fail = i;
      break;
    }
  }
  if (first_fail < 0) {
    result.q_star = result.q_values.back();
  } else {
    result.first_failure = result.q_values[first_fail];
    if (first_fail > 0) result.q_star = result.q_values[first_fail - 1];
    for (int i = first_fail + 1; i < count; ++i) {
      if (result.converged[i]) {
        result.non_monotone = true;
        break;
      }
    }
  }
  return result;
}

double refine_threshold(double q_lo_converged, double q_hi_failed,
                        const Grid1D& grid, const NewtonConfig& cfg,
                        double tol_q) {
  if (!std::isfinite(q_lo_converged) || !std::isfinite(q_hi_failed) ||
      !(q_lo_converged > 0.0) || !(q_hi_failed > q_lo_converged)) {
    throw std::domain_error("refine_threshold: invalid bracket");
  }
  if (!(tol_q > 0.0)) {
    throw std::domain_error("refine_threshold: tol_q must be positive");
  }
  if (!converges(q_lo_converged, grid, cfg)) {
    throw std::domain_error(
        "refine_threshold: Newton does not converge at the low bracket end");
  }
  if (converges(q_hi_failed, grid, cfg)) {
    throw std::domain_error(
        "refine_threshold: Newton converges at the high bracket end");
  }

  double lo = q_lo_converged;
  double hi = q_hi_failed;
  while (hi - lo >= tol_q) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at rounding resolution
    if (converges(mid, grid, cfg)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ConvergenceReport convergence_order(double q, int base_nodes, int levels,
                                    const NewtonConfig& cfg) {
  if (!std::isfinite(q) || q <= 0.0 || q >= critical_point().q_crit) {
    throw std::domain_error(
        "convergence_order: q must lie in (0, q_crit)");
  }
  if (base_nodes < 5) {
    throw std::domain_error("convergence_order: base_nodes must be >= 5");
  }
  if (levels < 2) {
    throw std::domain_error("convergence_order: levels must be >= 2");
  }

  const AnalyticSolution exact(q, Branch::Lower);
  ConvergenceReport report;
  int nodes = base_nodes;
  for (int level = 0; level < levels; ++level) {
    const Grid1D grid(nodes);
    const Problem1D problem(grid, q);
    const NewtonResult sol = newton_solve(problem, problem.initial_guess(), cfg);
    if (!sol.report.converged) {
      throw StudyError("convergence_order: Newton failed at level " +
                           std::to_string(level) + " (nodes = " +
                           std::to_string(nodes) + ", failure: " +
                           to_string(sol.report.failure) + ")",
                       level);
    }
    double err = 0.0;
    for (int i = 0; i < problem.size(); ++i) {
      const double x = unknown_x_1d(grid, LeftBoundary::Neumann, i);
      err = std::max(err, std::abs(sol.state[i] - exact(x)));
    }
    report.grid_sizes.push_back(nodes);
    report.errors.push_back(err);
    nodes = 2 * nodes - 1;  // halve the spacing
  }
  for (int i = 0; i + 1 < levels; ++i) {
    report.orders.push_back(
        std::log(report.errors[i] / report.errors[i + 1]) / std::log(2.0));
  }
  return report;
}

}  // namespace bratu
