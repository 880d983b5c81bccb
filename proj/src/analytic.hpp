#pragma once

#include <span>
#include <vector>

namespace bratu {

// The 1D problem u'' + q e^u = 0, u'(0) = 0, u(1) = 0 has the closed form
//
//   u(x) = ln(2 mu^2 / q) - 2 ln(cosh(mu x)),
//
// where mu is a positive root of cosh(mu) = sqrt(2/q) * mu. Two roots
// exist for 0 < q < q_crit and merge at the fold; above it there is no
// steady solution. Lower is the stable branch and the default downstream.
enum class Branch { Lower, Upper };

struct FoldPoint {
  double q_crit;   // 2 / sinh(mu_star)^2
  double mu_star;  // unique positive root of coth(mu) - mu
};

// Fold of the mu-relation, from the tangency of cosh(mu) and
// sqrt(2/q) * mu. Computed once, then cached.
const FoldPoint& critical_point();

// Requested root of phi(mu) = cosh(mu) - sqrt(2/q) * mu; bracketed
// bisection on (0, mu_star) resp. (mu_star, 50), then Newton polish to
// |phi| <= 1e-12 * max(1, cosh mu).
// Throws std::domain_error (q <= 0 or non-finite), NoRootError (q >= q_crit).
double solve_mu(double q, Branch branch);

class AnalyticSolution {
 public:
  explicit AnalyticSolution(double q, Branch branch = Branch::Lower);

  double q() const { return q_; }
  double mu() const { return mu_; }
  Branch branch() const { return branch_; }

  // Defined for any finite x; the boundary-value solution restricts x to
  // [0,1] but evenness in x is meaningful (and tested) outside it.
  double operator()(double x) const;
  std::vector<double> evaluate(std::span<const double> xs) const;

 private:
  double q_;
  double mu_;
  Branch branch_;
  double peak_;  // u(0) = ln(2 mu^2 / q)
};

}  // namespace bratu
