/*
 * bratu.h - C interface of libbratu, a finite-difference Newton solver for
 * the steady Bratu ignition problem
 *
 *     laplacian(u) + q * exp(u) = 0
 *
 * in 1D (unit interval, insulated left end) and 2D (rectangular vessel,
 * insulated horizontal walls, step data on the right wall), plus the
 * closed-form 1D reference solution, a threshold sweep for the critical
 * reaction parameter, and a grid-convergence study.
 *
 * All functions return a bratu_status; results are exposed through opaque
 * handles with accessor functions. A handle returned through an out
 * parameter is owned by the caller and must be released with the matching
 * *_free function. On any status other than BRATU_OK a diagnostic message
 * is available from bratu_last_error() (thread local, valid until the next
 * failing call on the same thread).
 */

#ifndef BRATU_H
#define BRATU_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BRATU_BUILD)
#    define BRATU_API __declspec(dllexport)
#  else
#    define BRATU_API __declspec(dllimport)
#  endif
#else
#  define BRATU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bratu_status {
  BRATU_OK = 0,
  BRATU_ERR_DOMAIN = 1,         /* invalid argument or precondition violated */
  BRATU_ERR_NO_ROOT = 2,        /* q at or above the fold, no steady solution */
  BRATU_ERR_NO_CONVERGENCE = 3, /* Newton iteration did not converge */
  BRATU_ERR_SINGULAR = 4,       /* direct linear solve hit a zero pivot */
  BRATU_ERR_STUDY = 5,          /* a grid-study level failed to converge */
  BRATU_ERR_INTERNAL = 6
} bratu_status;

BRATU_API const char *bratu_status_name(bratu_status status);
BRATU_API const char *bratu_last_error(void);

/* ------------------------------------------------------------------ */
/* Parameter model                                                     */
/* ------------------------------------------------------------------ */

/*
 * Dimensionless reaction parameter of the ignition balance:
 *   q = Q * A * ell^2 * Ta * exp(-Ta/T0) / (a * T0^2).
 * Q heat release [K], A_pre pre-exponential factor [1/s], ell
 * characteristic length [m], Ta activation temperature [K], T0 ambient
 * temperature [K], a_diff thermal diffusivity [m^2/s]. All inputs must be
 * finite and strictly positive.
 */
BRATU_API bratu_status bratu_dimensionless_q(double Q, double A_pre,
                                             double ell, double Ta, double T0,
                                             double a_diff, double *q_out);

/* Step data on the x = ell wall: 0 for y in [0,1/2), 1 for y in [1/2,1]. */
BRATU_API bratu_status bratu_boundary_g(double y, double *g_out);

/* ------------------------------------------------------------------ */
/* Closed-form 1D reference solution                                   */
/* ------------------------------------------------------------------ */

/*
 * For 0 < q < q_crit the relation cosh(mu) = sqrt(2/q) * mu has two
 * positive roots; the lower one belongs to the stable branch.
 */
typedef enum bratu_branch {
  BRATU_BRANCH_LOWER = 0,
  BRATU_BRANCH_UPPER = 1
} bratu_branch;

/* Fold point: mu_star solves coth(mu) = mu, q_crit = 2 / sinh(mu_star)^2. */
BRATU_API bratu_status bratu_critical_point(double *q_crit_out,
                                            double *mu_star_out);

/* Requested root of cosh(mu) - sqrt(2/q) * mu on (0, inf).
 * BRATU_ERR_NO_ROOT when q >= q_crit. */
BRATU_API bratu_status bratu_solve_mu(double q, bratu_branch branch,
                                      double *mu_out);

/* u(x) = ln(2 mu^2 / q) - 2 ln(cosh(mu x)) at each of the count
 * coordinates xs[i] in [0,1]; u_out must hold count values. */
BRATU_API bratu_status bratu_analytic_solution(double q, bratu_branch branch,
                                               const double *xs, size_t count,
                                               double *u_out);

/* ------------------------------------------------------------------ */
/* Newton iteration options                                            */
/* ------------------------------------------------------------------ */

typedef struct bratu_newton_options {
  double tol;              /* residual 2-norm stopping threshold */
  int max_iterations;
  double divergence_guard; /* residual growth factor that aborts early */
} bratu_newton_options;

/* tol = 1e-10, max_iterations = 50, divergence_guard = 1e4.
 * Note: on fine grids (1D nodes >~ 150) the rounding floor of the
 * unscaled residual sits above 1e-10; pass a larger tol there. */
BRATU_API void bratu_newton_options_defaults(bratu_newton_options *opt);

/* ------------------------------------------------------------------ */
/* 1D solve                                                            */
/* ------------------------------------------------------------------ */

typedef struct bratu_solution1d bratu_solution1d;

/*
 * Solves u'' + q e^u = 0 on (0,1), u'(0) = 0, u(1) = 0 on a uniform grid
 * with the given node count (>= 3), by Newton iteration from the quadratic
 * initial guess. opt may be NULL for defaults.
 *
 * Returns BRATU_OK when converged, BRATU_ERR_NO_CONVERGENCE when the
 * iteration ran but failed (the handle is still produced so the report can
 * be inspected), BRATU_ERR_DOMAIN for invalid arguments (no handle).
 */
BRATU_API bratu_status bratu_solve_1d(double q, int nodes,
                                      const bratu_newton_options *opt,
                                      bratu_solution1d **out);
BRATU_API void bratu_solution1d_free(bratu_solution1d *s);

/* Full field including the eliminated right boundary value u = 0. */
BRATU_API int bratu_solution1d_nodes(const bratu_solution1d *s);
BRATU_API double bratu_solution1d_x(const bratu_solution1d *s, int i);
BRATU_API double bratu_solution1d_u(const bratu_solution1d *s, int i);

BRATU_API int bratu_solution1d_converged(const bratu_solution1d *s);
BRATU_API int bratu_solution1d_iterations(const bratu_solution1d *s);
BRATU_API double bratu_solution1d_final_residual(const bratu_solution1d *s);
BRATU_API int bratu_solution1d_history_length(const bratu_solution1d *s);
BRATU_API double bratu_solution1d_history(const bratu_solution1d *s, int i);
/* "none", "max-iterations", "non-finite", "singular-linear-solve",
 * "residual-growth" */
BRATU_API const char *bratu_solution1d_failure(const bratu_solution1d *s);

/* ------------------------------------------------------------------ */
/* 2D solve                                                            */
/* ------------------------------------------------------------------ */

typedef struct bratu_solution2d bratu_solution2d;

typedef struct bratu_options2d {
  int g_zero;           /* replace the step wall data by zero */
  int paper_literal_bb; /* scale the boundary vector by 1/dy^2 instead of
                           1/dx^2 (printed-form variant, see README) */
} bratu_options2d;

/*
 * Solves u_xx + u_yy + q e^u = 0 on (0,ell) x (0,1) with u(0,y) = 0,
 * u(ell,y) = g(y), u_y(x,0) = u_y(x,1) = 0 on an x_nodes by y_nodes grid
 * (both >= 3), Newton iteration from the linearized-problem initial guess.
 * Status semantics as for bratu_solve_1d.
 */
BRATU_API bratu_status bratu_solve_2d(double q, double ell, int x_nodes,
                                      int y_nodes,
                                      const bratu_options2d *opt2d,
                                      const bratu_newton_options *opt,
                                      bratu_solution2d **out);
BRATU_API void bratu_solution2d_free(bratu_solution2d *s);

/* Full field including the Dirichlet columns: u(0,y) = 0, u(ell,y) = g(y). */
BRATU_API int bratu_solution2d_x_nodes(const bratu_solution2d *s);
BRATU_API int bratu_solution2d_y_nodes(const bratu_solution2d *s);
BRATU_API double bratu_solution2d_x(const bratu_solution2d *s, int j);
BRATU_API double bratu_solution2d_y(const bratu_solution2d *s, int k);
BRATU_API double bratu_solution2d_u(const bratu_solution2d *s, int j, int k);

BRATU_API int bratu_solution2d_converged(const bratu_solution2d *s);
BRATU_API int bratu_solution2d_iterations(const bratu_solution2d *s);
BRATU_API double bratu_solution2d_final_residual(const bratu_solution2d *s);
BRATU_API int bratu_solution2d_history_length(const bratu_solution2d *s);
BRATU_API double bratu_solution2d_history(const bratu_solution2d *s, int i);
BRATU_API const char *bratu_solution2d_failure(const bratu_solution2d *s);

/* ------------------------------------------------------------------ */
/* Threshold sweep and refinement                                      */
/* ------------------------------------------------------------------ */

typedef struct bratu_sweep bratu_sweep;

/*
 * Runs an independent 1D Newton solve for every q in the ascending
 * arithmetic sequence q_min, q_min + dq, ..., <= q_max and records which
 * converged. q_star is the largest converged q before the first failure.
 */
BRATU_API bratu_status bratu_threshold_sweep(double q_min, double q_max,
                                             double dq, int nodes,
                                             const bratu_newton_options *opt,
                                             bratu_sweep **out);
BRATU_API void bratu_sweep_free(bratu_sweep *s);
BRATU_API int bratu_sweep_count(const bratu_sweep *s);
BRATU_API double bratu_sweep_q(const bratu_sweep *s, int i);
BRATU_API int bratu_sweep_point_converged(const bratu_sweep *s, int i);
BRATU_API int bratu_sweep_has_q_star(const bratu_sweep *s);
BRATU_API double bratu_sweep_q_star(const bratu_sweep *s);
BRATU_API int bratu_sweep_has_first_failure(const bratu_sweep *s);
BRATU_API double bratu_sweep_first_failure(const bratu_sweep *s);
/* 1 when a converged q was seen above a failed one (flags not monotone). */
BRATU_API int bratu_sweep_non_monotone(const bratu_sweep *s);

/*
 * Bisects the convergence predicate between a q that converges and a q
 * that fails until the bracket is narrower than tol_q; returns the final
 * bracket midpoint. BRATU_ERR_DOMAIN when the bracket ends do not behave
 * as required.
 */
BRATU_API bratu_status bratu_refine_threshold(double q_lo_converged,
                                              double q_hi_failed, int nodes,
                                              const bratu_newton_options *opt,
                                              double tol_q,
                                              double *q_star_out);

/* ------------------------------------------------------------------ */
/* Grid-convergence study                                              */
/* ------------------------------------------------------------------ */

typedef struct bratu_order_study bratu_order_study;

/*
 * Solves the 1D problem on grids whose spacing halves each level
 * (nodes_{i+1} = 2 * nodes_i - 1), measures the max-norm error against the
 * lower-branch closed-form solution, and forms pairwise order estimates
 * p_i = log2(error_i / error_{i+1}). BRATU_ERR_STUDY when a level fails.
 */
BRATU_API bratu_status bratu_convergence_order(double q, int base_nodes,
                                               int levels,
                                               const bratu_newton_options *opt,
                                               bratu_order_study **out);
BRATU_API void bratu_order_study_free(bratu_order_study *s);
BRATU_API int bratu_order_study_levels(const bratu_order_study *s);
BRATU_API int bratu_order_study_nodes(const bratu_order_study *s, int level);
BRATU_API double bratu_order_study_error(const bratu_order_study *s,
                                         int level);
/* pair in [0, levels-1) */
BRATU_API double bratu_order_study_order(const bratu_order_study *s, int pair);

#ifdef __cplusplus
}
#endif

#endif /* BRATU_H */
