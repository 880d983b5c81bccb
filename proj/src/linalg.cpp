#include "linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace bratu {

void TriDiagSystem::multiply(std::span<const double> x,
                             std::span<double> out) const {
  const int n = size();
  assert(static_cast<int>(x.size()) == n &&
         static_cast<int>(out.size()) == n);
  for (int i = 0; i < n; ++i) {
    double v = diag[i] * x[i];
    if (i > 0) v += sub[i - 1] * x[i - 1];
    if (i + 1 < n) v += sup[i] * x[i + 1];
    out[i] = v;
  }
}

std::vector<double> solve_tridiag(const TriDiagSystem& sys,
                                  std::span<const double> rhs) {
  const int n = sys.size();
  if (static_cast<int>(rhs.size()) != n) {
    throw std::invalid_argument("solve_tridiag: dimension mismatch");
  }
  std::vector<double> c(n > 1 ? n - 1 : 0);
  std::vector<double> x(n);

  double piv = sys.diag[0];
  if (!(std::abs(piv) > kPivotFloor)) {
    throw SingularSystemError("solve_tridiag: zero pivot at row 0");
  }
  if (n > 1) c[0] = sys.sup[0] / piv;
  x[0] = rhs[0] / piv;

  for (int i = 1; i < n; ++i) {
    piv = sys.diag[i] - sys.sub[i - 1] * c[i - 1];
    if (!(std::abs(piv) > kPivotFloor)) {
      throw SingularSystemError("solve_tridiag: zero pivot at row " +
                                std::to_string(i));
    }
    if (i + 1 < n) c[i] = sys.sup[i] / piv;
    x[i] = (rhs[i] - sys.sub[i - 1] * x[i - 1]) / piv;
  }
  for (int i = n - 2; i >= 0; --i) {
    x[i] -= c[i] * x[i + 1];
  }
  return x;
}

BandedSystem::BandedSystem(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1) {
  if (n < 1 || kl < 0 || ku < 0) {
    throw std::invalid_argument("BandedSystem: invalid shape");
  }
  ab_.assign(static_cast<size_t>(ldab_) * n_, 0.0);
}

double BandedSystem::at(int i, int j) const {
  assert(i >= 0 && i < n_ && j >= 0 && j < n_);
  if (i - j > kl_ || j - i > ku_) return 0.0;
  return ab_[static_cast<size_t>(j) * ldab_ + (kl_ + ku_ + i - j)];
}

double& BandedSystem::ref(int i, int j) {
  assert(i >= 0 && i < n_ && j >= 0 && j < n_);
  assert(i - j <= kl_ && j - i <= ku_);
  return ab_[static_cast<size_t>(j) * ldab_ + (kl_ + ku_ + i - j)];
}

void BandedSystem::multiply(std::span<const double> x,
                            std::span<double> out) const {
  assert(static_cast<int>(x.size()) == n_ &&
         static_cast<int>(out.size()) == n_);
  for (int i = 0; i < n_; ++i) {
    double v = 0.0;
    const int lo = std::max(0, i - kl_);
    const int hi = std::min(n_ - 1, i + ku_);
    for (int j = lo; j <= hi; ++j) {
      v += ab_[static_cast<size_t>(j) * ldab_ + (kl_ + ku_ + i - j)] * x[j];
    }
    out[i] = v;
  }
}

// Factor-and-solve in one pass on a copy of the band storage; standard
// banded LU with partial pivoting, U widens to kl+ku superdiagonals.
std::vector<double> solve_banded(const BandedSystem& sys,
                                 std::span<const double> rhs) {
  const int n = sys.size();
  if (static_cast<int>(rhs.size()) != n) {
    throw std::invalid_argument("solve_banded: dimension mismatch");
  }
  const int kl = sys.lower_bandwidth();
  const int ku = sys.upper_bandwidth();
  const int ldab = sys.leading_dimension();
  const int kv = kl + ku;  // storage row of the diagonal

  std::vector<double> ab = sys.storage();
  std::vector<int> piv(n);
  auto entry = [&](int i, int j) -> double& {
    return ab[static_cast<size_t>(j) * ldab + (kv + i - j)];
  };

  int ju = 0;  // last column touched by eliminations so far
  for (int j = 0; j < n; ++j) {
    const int km = std::min(kl, n - 1 - j);  // subdiagonal count in column j
    int ip = 0;
    double pmax = std::abs(entry(j, j));
    for (int i = 1; i <= km; ++i) {
      const double v = std::abs(entry(j + i, j));
      if (v > pmax) {
        pmax = v;
        ip = i;
      }
    }
    piv[j] = j + ip;
    if (!(pmax > kPivotFloor)) {
      throw SingularSystemError("solve_banded: zero pivot at column " +
                                std::to_string(j));
    }
    ju = std::max(ju, std::min(j + ku + ip, n - 1));
    if (ip != 0) {
      for (int jj = j; jj <= ju; ++jj) {
        std::swap(entry(j, jj), entry(j + ip, jj));
      }
    }
    if (km > 0) {
      const double dinv = 1.0 / entry(j, j);
      for (int i = 1; i <= km; ++i) entry(j + i, j) *= dinv;
      for (int jj = j + 1; jj <= ju; ++jj) {
        const double f = entry(j, jj);
        if (f != 0.0) {
          for (int i = 1; i <= km; ++i) {
            entry(j + i, jj) -= f * entry(j + i, j);
          }
        }
      }
    }
  }

  std::vector<double> x(rhs.begin(), rhs.end());
  for (int j = 0; j < n; ++j) {
    if (piv[j] != j) std::swap(x[j], x[piv[j]]);
    const int km = std::min(kl, n - 1 - j);
    for (int i = 1; i <= km; ++i) x[j + i] -= entry(j + i, j) * x[j];
  }
  for (int j = n - 1; j >= 0; --j) {
    x[j] /= entry(j, j);
    const int top = std::max(0, j - kv);
    for (int i = top; i < j; ++i) x[i] -= entry(i, j) * x[j];
  }
  return x;
}

}  // namespace bratu
