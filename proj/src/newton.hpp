#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bratu {

// Exponentials of state entries above this threshold are treated as a
// divergence signal rather than evaluated.
inline constexpr double kExpOverflow = 700.0;

// Outcome of a residual / Jacobian evaluation or of one linear step.
// Residual evaluations never report Singular.
enum class EvalStatus { Ok, Overflow, Singular };

struct NewtonConfig {
  double tol = 1e-10;             // residual 2-norm stopping threshold
  int max_iterations = 50;
  double divergence_guard = 1e4;  // growth factor that aborts the iteration
};

enum class NewtonFailure {
  None,
  MaxIterations,
  NonFinite,
  SingularLinearSolve,
  ResidualGrowth,
};

inline const char* to_string(NewtonFailure f) {
  switch (f) {
    case NewtonFailure::None: return "none";
    case NewtonFailure::MaxIterations: return "max-iterations";
    case NewtonFailure::NonFinite: return "non-finite";
    case NewtonFailure::SingularLinearSolve: return "singular-linear-solve";
    case NewtonFailure::ResidualGrowth: return "residual-growth";
  }
  return "unknown";
}

// residual_history[0] is the residual of the initial state; one entry is
// appended per iteration, so iterations == residual_history.size() - 1.
struct NewtonReport {
  bool converged = false;
  int iterations = 0;
  std::vector<double> residual_history;
  NewtonFailure failure = NewtonFailure::None;

  double final_residual() const { return residual_history.back(); }
};

struct NewtonResult {
  std::vector<double> state;  // last iterate, whatever the outcome
  NewtonReport report;
};

inline double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Plain undamped Newton iteration on N(u) = 0.
//
// Problem must provide:
//   int size() const;
//   EvalStatus residual(std::span<const double> u, std::span<double> out) const;
//   EvalStatus newton_step(std::span<const double> u,
//                          std::span<const double> res,
//                          std::span<double> step) const;  // J(u) step = -res
//
// The residual norm recorded per iteration is evaluated at the post-update
// iterate. Stops on ||N(u)||_2 < tol, or on the failure recorded in the
// report: residual growth beyond cfg.divergence_guard, a non-finite
// residual (exp overflow), a singular linear solve, or the iteration cap.
template <class Problem>
NewtonResult newton_solve(const Problem& problem, std::vector<double> u0,
                          const NewtonConfig& cfg = {}) {
  if (!(cfg.tol > 0.0)) {
    throw std::domain_error("newton_solve: tol must be positive");
  }
  if (cfg.max_iterations < 1) {
    throw std::domain_error("newton_solve: max_iterations must be >= 1");
  }
  if (!(cfg.divergence_guard > 1.0)) {
    throw std::domain_error("newton_solve: divergence_guard must exceed 1");
  }
  const int n = problem.size();
  if (static_cast<int>(u0.size()) != n) {
    throw std::invalid_argument("newton_solve: state dimension mismatch");
  }
  for (double v : u0) {
    if (!std::isfinite(v)) {
      throw std::domain_error("newton_solve: initial state must be finite");
    }
  }

  NewtonResult out;
  NewtonReport& rep = out.report;
  std::vector<double>& u = u0;
  std::vector<double> res(n), step(n);
  rep.residual_history.reserve(cfg.max_iterations + 1);

  auto record = [&](EvalStatus st) {
    const double nr =
        st == EvalStatus::Ok ? norm2(res)
                             : std::numeric_limits<double>::infinity();
    rep.residual_history.push_back(nr);
    return nr;
  };

  double nr = record(problem.residual(u, res));
  if (!std::isfinite(nr)) {
    rep.failure = NewtonFailure::NonFinite;
  } else if (nr < cfg.tol) {
    rep.converged = true;
  } else {
    for (int l = 1; l <= cfg.max_iterations; ++l) {
      const EvalStatus st = problem.newton_step(u, res, step);
      if (st == EvalStatus::Overflow) {
        rep.failure = NewtonFailure::NonFinite;
        break;
      }
      if (st == EvalStatus::Singular) {
        rep.failure = NewtonFailure::SingularLinearSolve;
        break;
      }
      for (int i = 0; i < n; ++i) u[i] += step[i];

      const double prev = nr;
      nr = record(problem.residual(u, res));
      if (!std::isfinite(nr)) {
        rep.failure = NewtonFailure::NonFinite;
        break;
      }
      if (nr < cfg.tol) {
        rep.converged = true;
        break;
      }
      if (nr > cfg.divergence_guard * prev) {
        rep.failure = NewtonFailure::ResidualGrowth;
        break;
      }
    }
    if (!rep.converged && rep.failure == NewtonFailure::None) {
      rep.failure = NewtonFailure::MaxIterations;
    }
  }

  rep.iterations = static_cast<int>(rep.residual_history.size()) - 1;
  out.state = std::move(u);
  return out;
}

}  // namespace bratu
