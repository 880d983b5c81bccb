#include "bratu.h"

#include <cmath>
#include <limits>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "analytic.hpp"
#include "errors.hpp"
#include "fd1d.hpp"
#include "fd2d.hpp"
#include "model.hpp"
#include "newton.hpp"
#include "studies.hpp"

namespace {

thread_local std::string t_last_error;

bratu_status fail(bratu_status status, std::string message) {
  t_last_error = std::move(message);
  return status;
}

// Maps core exceptions onto status codes and stores the message.
template <class Fn>
bratu_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const bratu::NoRootError& e) {
    return fail(BRATU_ERR_NO_ROOT, e.what());
  } catch (const bratu::StudyError& e) {
    return fail(BRATU_ERR_STUDY, e.what());
  } catch (const bratu::SingularSystemError& e) {
    return fail(BRATU_ERR_SINGULAR, e.what());
  } catch (const std::domain_error& e) {
    return fail(BRATU_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BRATU_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BRATU_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BRATU_ERR_INTERNAL, e.what());
  }
}

bratu::NewtonConfig to_config(const bratu_newton_options* opt) {
  bratu::NewtonConfig cfg;
  if (opt != nullptr) {
    cfg.tol = opt->tol;
    cfg.max_iterations = opt->max_iterations;
    cfg.divergence_guard = opt->divergence_guard;
  }
  return cfg;
}

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

extern "C" {

const char* bratu_status_name(bratu_status status) {
  switch (status) {
    case BRATU_OK: return "ok";
    case BRATU_ERR_DOMAIN: return "domain-error";
    case BRATU_ERR_NO_ROOT: return "no-root";
    case BRATU_ERR_NO_CONVERGENCE: return "no-convergence";
    case BRATU_ERR_SINGULAR: return "singular-system";
    case BRATU_ERR_STUDY: return "study-error";
    case BRATU_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* bratu_last_error(void) { return t_last_error.c_str(); }

/* ------------------------------------------------------------------ */

bratu_status bratu_dimensionless_q(double Q, double A_pre, double ell,
                                   double Ta, double T0, double a_diff,
                                   double* q_out) {
  if (q_out == nullptr) return fail(BRATU_ERR_DOMAIN, "q_out is null");
  return guarded([&] {
    *q_out = bratu::dimensionless_q({Q, A_pre, ell, Ta, T0, a_diff}).q;
    return BRATU_OK;
  });
}

bratu_status bratu_boundary_g(double y, double* g_out) {
  if (g_out == nullptr) return fail(BRATU_ERR_DOMAIN, "g_out is null");
  return guarded([&] {
    *g_out = bratu::boundary_g(y);
    return BRATU_OK;
  });
}

bratu_status bratu_critical_point(double* q_crit_out, double* mu_star_out) {
  return guarded([&] {
    const bratu::FoldPoint& fold = bratu::critical_point();
    if (q_crit_out != nullptr) *q_crit_out = fold.q_crit;
    if (mu_star_out != nullptr) *mu_star_out = fold.mu_star;
    return BRATU_OK;
  });
}

bratu_status bratu_solve_mu(double q, bratu_branch branch, double* mu_out) {
  if (mu_out == nullptr) return fail(BRATU_ERR_DOMAIN, "mu_out is null");
  if (branch != BRATU_BRANCH_LOWER && branch != BRATU_BRANCH_UPPER) {
    return fail(BRATU_ERR_DOMAIN, "invalid branch selector");
  }
  return guarded([&] {
    *mu_out = bratu::solve_mu(q, branch == BRATU_BRANCH_LOWER
                                     ? bratu::Branch::Lower
                                     : bratu::Branch::Upper);
    return BRATU_OK;
  });
}

bratu_status bratu_analytic_solution(double q, bratu_branch branch,
                                     const double* xs, size_t count,
                                     double* u_out) {
  if (xs == nullptr || u_out == nullptr) {
    return fail(BRATU_ERR_DOMAIN, "xs / u_out must not be null");
  }
  if (branch != BRATU_BRANCH_LOWER && branch != BRATU_BRANCH_UPPER) {
    return fail(BRATU_ERR_DOMAIN, "invalid branch selector");
  }
  for (size_t i = 0; i < count; ++i) {
    if (!(xs[i] >= 0.0 && xs[i] <= 1.0)) {
      return fail(BRATU_ERR_DOMAIN,
                  "xs[" + std::to_string(i) + "] outside [0, 1]");
    }
  }
  return guarded([&] {
    const bratu::AnalyticSolution sol(q, branch == BRATU_BRANCH_LOWER
                                             ? bratu::Branch::Lower
                                             : bratu::Branch::Upper);
    for (size_t i = 0; i < count; ++i) u_out[i] = sol(xs[i]);
    return BRATU_OK;
  });
}

void bratu_newton_options_defaults(bratu_newton_options* opt) {
  if (opt == nullptr) return;
  const bratu::NewtonConfig cfg;
  opt->tol = cfg.tol;
  opt->max_iterations = cfg.max_iterations;
  opt->divergence_guard = cfg.divergence_guard;
}

}  // extern "C"

/* ------------------------------------------------------------------ */
/* 1D solve handle                                                     */
/* ------------------------------------------------------------------ */

struct bratu_solution1d {
  bratu::Grid1D grid;
  std::vector<double> full_u;  // all nodes, boundary value restored
  bratu::NewtonReport report;
};

extern "C" {

bratu_status bratu_solve_1d(double q, int nodes,
                            const bratu_newton_options* opt,
                            bratu_solution1d** out) {
  if (out == nullptr) return fail(BRATU_ERR_DOMAIN, "out is null");
  *out = nullptr;
  return guarded([&]() -> bratu_status {
    const bratu::Grid1D grid(nodes);
    const bratu::Problem1D problem(grid, q);
    bratu::NewtonResult sol =
        newton_solve(problem, problem.initial_guess(), to_config(opt));

    std::vector<double> full = std::move(sol.state);
    full.push_back(0.0);  // eliminated right boundary
    const bool converged = sol.report.converged;
    *out = new bratu_solution1d{grid, std::move(full), std::move(sol.report)};
    if (converged) return BRATU_OK;
    return fail(BRATU_ERR_NO_CONVERGENCE,
                std::string("Newton did not converge (failure: ") +
                    to_string((*out)->report.failure) + ")");
  });
}

void bratu_solution1d_free(bratu_solution1d* s) { delete s; }

int bratu_solution1d_nodes(const bratu_solution1d* s) {
  return s != nullptr ? s->grid.nodes() : 0;
}

double bratu_solution1d_x(const bratu_solution1d* s, int i) {
  if (s == nullptr || i < 0 || i >= s->grid.nodes()) return nan_value();
  return s->grid.x(i);
}

double bratu_solution1d_u(const bratu_solution1d* s, int i) {
  if (s == nullptr || i < 0 || i >= static_cast<int>(s->full_u.size())) {
    return nan_value();
  }
  return s->full_u[i];
}

int bratu_solution1d_converged(const bratu_solution1d* s) {
  return s != nullptr && s->report.converged ? 1 : 0;
}

int bratu_solution1d_iterations(const bratu_solution1d* s) {
  return s != nullptr ? s->report.iterations : 0;
}

double bratu_solution1d_final_residual(const bratu_solution1d* s) {
  return s != nullptr ? s->report.final_residual() : nan_value();
}

int bratu_solution1d_history_length(const bratu_solution1d* s) {
  return s != nullptr ? static_cast<int>(s->report.residual_history.size())
                      : 0;
}

double bratu_solution1d_history(const bratu_solution1d* s, int i) {
  if (s == nullptr || i < 0 ||
      i >= static_cast<int>(s->report.residual_history.size())) {
    return nan_value();
  }
  return s->report.residual_history[i];
}

const char* bratu_solution1d_failure(const bratu_solution1d* s) {
  return s != nullptr ? to_string(s->report.failure) : "null-handle";
}

}  // extern "C"

/* ------------------------------------------------------------------ */
/* 2D solve handle                                                     */
/* ------------------------------------------------------------------ */

struct bratu_solution2d {
  bratu::Grid2D grid;
  std::vector<double> field;  // x_nodes * y_nodes, y-major
  bratu::NewtonReport report;
};

extern "C" {

bratu_status bratu_solve_2d(double q, double ell, int x_nodes, int y_nodes,
                            const bratu_options2d* opt2d,
                            const bratu_newton_options* opt,
                            bratu_solution2d** out) {
  if (out == nullptr) return fail(BRATU_ERR_DOMAIN, "out is null");
  *out = nullptr;
  return guarded([&]() -> bratu_status {
    const bratu::Grid2D grid(x_nodes, y_nodes, ell);
    bratu::Options2D opts;
    if (opt2d != nullptr) {
      if (opt2d->g_zero != 0) opts.boundary_data = [](double) { return 0.0; };
      opts.paper_literal_bb = opt2d->paper_literal_bb != 0;
    }
    const bratu::Problem2D problem(grid, q, opts);
    bratu::NewtonResult sol =
        newton_solve(problem, problem.initial_guess(), to_config(opt));

    std::vector<double> field = full_field_2d(grid, opts, sol.state);
    const bool converged = sol.report.converged;
    *out = new bratu_solution2d{grid, std::move(field), std::move(sol.report)};
    if (converged) return BRATU_OK;
    return fail(BRATU_ERR_NO_CONVERGENCE,
                std::string("Newton did not converge (failure: ") +
                    to_string((*out)->report.failure) + ")");
  });
}

void bratu_solution2d_free(bratu_solution2d* s) { delete s; }

int bratu_solution2d_x_nodes(const bratu_solution2d* s) {
  return s != nullptr ? s->grid.x_nodes() : 0;
}

int bratu_solution2d_y_nodes(const bratu_solution2d* s) {
  return s != nullptr ? s->grid.y_nodes() : 0;
}

double bratu_solution2d_x(const bratu_solution2d* s, int j) {
  if (s == nullptr || j < 0 || j >= s->grid.x_nodes()) return nan_value();
  return s->grid.x(j);
}

double bratu_solution2d_y(const bratu_solution2d* s, int k) {
  if (s == nullptr || k < 0 || k >= s->grid.y_nodes()) return nan_value();
  return s->grid.y(k);
}

double bratu_solution2d_u(const bratu_solution2d* s, int j, int k) {
  if (s == nullptr || j < 0 || j >= s->grid.x_nodes() || k < 0 ||
      k >= s->grid.y_nodes()) {
    return nan_value();
  }
  return s->field[static_cast<size_t>(k) * s->grid.x_nodes() + j];
}

int bratu_solution2d_converged(const bratu_solution2d* s) {
  return s != nullptr && s->report.converged ? 1 : 0;
}

int bratu_solution2d_iterations(const bratu_solution2d* s) {
  return s != nullptr ? s->report.iterations : 0;
}

double bratu_solution2d_final_residual(const bratu_solution2d* s) {
  return s != nullptr ? s->report.final_residual() : nan_value();
}

int bratu_solution2d_history_length(const bratu_solution2d* s) {
  return s != nullptr ? static_cast<int>(s->report.residual_history.size())
                      : 0;
}

double bratu_solution2d_history(const bratu_solution2d* s, int i) {
  if (s == nullptr || i < 0 ||
      i >= static_cast<int>(s->report.residual_history.size())) {
    return nan_value();
  }
  return s->report.residual_history[i];
}

const char* bratu_solution2d_failure(const bratu_solution2d* s) {
  return s != nullptr ? to_string(s->report.failure) : "null-handle";
}

}  // extern "C"

/* ------------------------------------------------------------------ */
/* Sweep and order-study handles                                       */
/* ------------------------------------------------------------------ */

struct bratu_sweep {
  bratu::SweepResult result;
};

struct bratu_order_study {
  bratu::ConvergenceReport report;
};

extern "C" {

bratu_status bratu_threshold_sweep(double q_min, double q_max, double dq,
                                   int nodes,
                                   const bratu_newton_options* opt,
                                   bratu_sweep** out) {
  if (out == nullptr) return fail(BRATU_ERR_DOMAIN, "out is null");
  *out = nullptr;
  return guarded([&] {
    const bratu::Grid1D grid(nodes);
    *out = new bratu_sweep{
        bratu::threshold_sweep(q_min, q_max, dq, grid, to_config(opt))};
    return BRATU_OK;
  });
}

void bratu_sweep_free(bratu_sweep* s) { delete s; }

int bratu_sweep_count(const bratu_sweep* s) {
  return s != nullptr ? static_cast<int>(s->result.q_values.size()) : 0;
}

double bratu_sweep_q(const bratu_sweep* s, int i) {
  if (s == nullptr || i < 0 ||
      i >= static_cast<int>(s->result.q_values.size())) {
    return nan_value();
  }
  return s->result.q_values[i];
}

int bratu_sweep_point_converged(const bratu_sweep* s, int i) {
  if (s == nullptr || i < 0 ||
      i >= static_cast<int>(s->result.converged.size())) {
    return 0;
  }
  return s->result.converged[i] ? 1 : 0;
}

int bratu_sweep_has_q_star(const bratu_sweep* s) {
  return s != nullptr && s->result.q_star.has_value() ? 1 : 0;
}

double bratu_sweep_q_star(const bratu_sweep* s) {
  return s != nullptr && s->result.q_star ? *s->result.q_star : nan_value();
}

int bratu_sweep_has_first_failure(const bratu_sweep* s) {
  return s != nullptr && s->result.first_failure.has_value() ? 1 : 0;
}

double bratu_sweep_first_failure(const bratu_sweep* s) {
  return s != nullptr && s->result.first_failure ? *s->result.first_failure
                                                 : nan_value();
}

int bratu_sweep_non_monotone(const bratu_sweep* s) {
  return s != nullptr && s->result.non_monotone ? 1 : 0;
}

bratu_status bratu_refine_threshold(double q_lo_converged,
                                    double q_hi_failed, int nodes,
                                    const bratu_newton_options* opt,
                                    double tol_q, double* q_star_out) {
  if (q_star_out == nullptr) {
    return fail(BRATU_ERR_DOMAIN, "q_star_out is null");
  }
  return guarded([&] {
    const bratu::Grid1D grid(nodes);
    *q_star_out = bratu::refine_threshold(q_lo_converged, q_hi_failed, grid,
                                          to_config(opt), tol_q);
    return BRATU_OK;
  });
}

bratu_status bratu_convergence_order(double q, int base_nodes, int levels,
                                     const bratu_newton_options* opt,
                                     bratu_order_study** out) {
  if (out == nullptr) return fail(BRATU_ERR_DOMAIN, "out is null");
  *out = nullptr;
  return guarded([&] {
    *out = new bratu_order_study{
        bratu::convergence_order(q, base_nodes, levels, to_config(opt))};
    return BRATU_OK;
  });
}

void bratu_order_study_free(bratu_order_study* s) { delete s; }

int bratu_order_study_levels(const bratu_order_study* s) {
  return s != nullptr ? static_cast<int>(s->report.grid_sizes.size()) : 0;
}

int bratu_order_study_nodes(const bratu_order_study* s, int level) {
  if (s == nullptr || level < 0 ||
      level >= static_cast<int>(s->report.grid_sizes.size())) {
    return 0;
  }
  return s->report.grid_sizes[level];
}

double bratu_order_study_error(const bratu_order_study* s, int level) {
  if (s == nullptr || level < 0 ||
      level >= static_cast<int>(s->report.errors.size())) {
    return nan_value();
  }
  return s->report.errors[level];
}

double bratu_order_study_order(const bratu_order_study* s, int pair) {
  if (s == nullptr || pair < 0 ||
      pair >= static_cast<int>(s->report.orders.size())) {
    return nan_value();
  }
  return s->report.orders[pair];
}

}  // extern "C"
