#pragma once

#include <optional>
#include <vector>

#include "model.hpp"
#include "newton.hpp"

namespace bratu {

// Outcome of the ascending-q convergence sweep. Each flag comes from a
// full independent Newton solve started from the fresh initial guess for
// its own q.
struct SweepResult {
  std::vector<double> q_values;
  std::vector<bool> converged;
  std::optional<double> q_star;         // largest converged q before the
                                        // first failure
  std::optional<double> first_failure;  // smallest q that failed
  bool non_monotone = false;  // a converged q was seen above a failed one
};

// Sweeps q over q_lo, q_lo + dq, ..., <= q_hi on the given grid.
// Throws std::domain_error unless 0 < q_lo < q_hi and dq > 0.
SweepResult threshold_sweep(double q_lo, double q_hi, double dq,
                            const Grid1D& grid, const NewtonConfig& cfg);

// Bisects the convergence predicate until the bracket width drops below
// tol_q; returns the midpoint of the final bracket. The endpoints must
// behave as named (converged at q_lo_converged, failed at q_hi_failed) or
// std::domain_error is thrown.
double refine_threshold(double q_lo_converged, double q_hi_failed,
                        const Grid1D& grid, const NewtonConfig& cfg,
                        double tol_q);

// Grid-level errors against the lower-branch closed form, plus pairwise
// order estimates p_i = log2(errors[i] / errors[i+1]). Spacing halves
// between consecutive grids.
struct ConvergenceReport {
  std::vector<int> grid_sizes;
  std::vector<double> errors;  // max norm on each grid's own nodes
  std::vector<double> orders;
};

// Requires 0 < q < q_crit, base_nodes >= 5, levels >= 2. Throws StudyError
// naming the level when a Newton solve fails.
ConvergenceReport convergence_order(double q, int base_nodes, int levels,
                                    const NewtonConfig& cfg);

}  // namespace bratu
