#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dense_oracle.hpp"
#include "errors.hpp"
#include "fd1d.hpp"
#include "fd2d.hpp"
#include "linalg.hpp"
#include "model.hpp"

using namespace bratu;

namespace {

double backward_error(const std::vector<double>& residual_terms,
                      double norm_a, const std::vector<double>& x,
                      const std::vector<double>& b) {
  double rinf = 0.0, xinf = 0.0, binf = 0.0;
  for (double v : residual_terms) rinf = std::max(rinf, std::abs(v));
  for (double v : x) xinf = std::max(xinf, std::abs(v));
  for (double v : b) binf = std::max(binf, std::abs(v));
  return rinf / (norm_a * xinf + binf);
}

double inf_norm_tridiag(const TriDiagSystem& t) {
  double m = 0.0;
  const int n = t.size();
  for (int i = 0; i < n; ++i) {
    double row = std::abs(t.diag[i]);
    if (i > 0) row += std::abs(t.sub[i - 1]);
    if (i + 1 < n) row += std::abs(t.sup[i]);
    m = std::max(m, row);
  }
  return m;
}

double inf_norm_banded(const BandedSystem& b) {
  double m = 0.0;
  for (int i = 0; i < b.size(); ++i) {
    double row = 0.0;
    for (int j = 0; j < b.size(); ++j) row += std::abs(b.at(i, j));
    m = std::max(m, row);
  }
  return m;
}

}  // namespace

TEST_CASE("solve_tridiag on the identity returns the rhs") {
  TriDiagSystem id;
  id.diag.assign(5, 1.0);
  id.sub.assign(4, 0.0);
  id.sup.assign(4, 0.0);
  const std::vector<double> rhs{1.0, -2.0, 3.5, 0.0, 7.0};
  CHECK(solve_tridiag(id, rhs) == rhs);
}

TEST_CASE("solve_tridiag round-trips the assembled 1D operator") {
  const Grid1D grid(4);
  const TriDiagSystem a = assemble_matrix_1d(grid);
  const std::vector<double> x{1.0, 2.0, 3.0};
  std::vector<double> b(3);
  a.multiply(x, b);
  const std::vector<double> got = solve_tridiag(a, b);
  for (int i = 0; i < 3; ++i) {
    CHECK(got[i] == doctest::Approx(x[i]).epsilon(1e-13));
  }
}

TEST_CASE("solve_tridiag agrees with dense elimination on random systems") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  const int n = 50;
  for (int rep = 0; rep < 5; ++rep) {
    TriDiagSystem t;
    t.diag.resize(n);
    t.sub.resize(n - 1);
    t.sup.resize(n - 1);
    for (int i = 0; i < n - 1; ++i) {
      t.sub[i] = entry(rng);
      t.sup[i] = entry(rng);
    }
    for (int i = 0; i < n; ++i) {
      // strictly diagonally dominant
      double off = 0.0;
      if (i > 0) off += std::abs(t.sub[i - 1]);
      if (i + 1 < n) off += std::abs(t.sup[i]);
      t.diag[i] = (entry(rng) > 0 ? 1 : -1) * (off + 1.0 + std::abs(entry(rng)));
    }
    std::vector<double> b(n);
    for (double& v : b) v = entry(rng);

    testutil::DenseMatrix d(n);
    for (int i = 0; i < n; ++i) {
      d(i, i) = t.diag[i];
      if (i > 0) d(i, i - 1) = t.sub[i - 1];
      if (i + 1 < n) d(i, i + 1) = t.sup[i];
    }
    const std::vector<double> want = testutil::dense_solve(d, b);
    const std::vector<double> got = solve_tridiag(t, b);
    for (int i = 0; i < n; ++i) {
      CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }

    // componentwise backward error
    std::vector<double> res(n);
    t.multiply(got, res);
    for (int i = 0; i < n; ++i) res[i] -= b[i];
    CHECK(backward_error(res, inf_norm_tridiag(t), got, b) <= 1e-13);
  }
}

TEST_CASE("solve_tridiag detects a zero pivot") {
  TriDiagSystem t;
  t.diag = {0.0, 1.0};
  t.sub = {1.0};
  t.sup = {1.0};
  const std::vector<double> rhs{1.0, 1.0};
  CHECK_THROWS_AS(solve_tridiag(t, rhs), SingularSystemError);
}

TEST_CASE("solve_banded on the identity returns the rhs") {
  BandedSystem id(4, 1, 1);
  for (int i = 0; i < 4; ++i) id.ref(i, i) = 1.0;
  const std::vector<double> rhs{4.0, 3.0, 2.0, 1.0};
  const std::vector<double> got = solve_banded(id, rhs);
  for (int i = 0; i < 4; ++i) CHECK(got[i] == rhs[i]);
}

TEST_CASE("solve_banded round-trips the assembled 2D operator") {
  const Grid2D grid(4, 3, 1.0);
  const BandedSystem a = assemble_matrix_2d(grid);
  std::vector<double> x(a.size());
  for (int i = 0; i < a.size(); ++i) x[i] = 0.3 * i - 1.0;
  std::vector<double> b(a.size());
  a.multiply(x, b);
  const std::vector<double> got = solve_banded(a, b);
  for (int i = 0; i < a.size(); ++i) {
    CHECK(got[i] == doctest::Approx(x[i]).epsilon(1e-12));
  }
}

TEST_CASE("solve_banded agrees with dense elimination on the 2D operator") {
  const Grid2D grid(6, 5, 1.0);
  const BandedSystem a = assemble_matrix_2d(grid);
  const int n = a.size();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::vector<double> b(n);
  for (double& v : b) v = entry(rng);

  testutil::DenseMatrix d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d(i, j) = a.at(i, j);
  }
  const std::vector<double> want = testutil::dense_solve(d, b);
  const std::vector<double> got = solve_banded(a, b);
  for (int i = 0; i < n; ++i) {
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-11));
  }

  std::vector<double> res(n);
  a.multiply(got, res);
  for (int i = 0; i < n; ++i) res[i] -= b[i];
  CHECK(backward_error(res, inf_norm_banded(a), got, b) <= 1e-13);
}

TEST_CASE("solve_banded pivots when the leading entry vanishes") {
  // Zero on the first diagonal entry forces a row swap immediately.
  BandedSystem a(4, 2, 1);
  a.ref(0, 0) = 0.0;
  a.ref(0, 1) = 2.0;
  a.ref(1, 0) = 1.0;
  a.ref(1, 1) = -1.0;
  a.ref(1, 2) = 0.5;
  a.ref(2, 0) = -3.0;
  a.ref(2, 1) = 1.0;
  a.ref(2, 2) = 2.0;
  a.ref(2, 3) = 1.0;
  a.ref(3, 1) = 4.0;
  a.ref(3, 2) = -2.0;
  a.ref(3, 3) = 1.5;
  const std::vector<double> b{1.0, 0.0, 2.0, -1.0};

  testutil::DenseMatrix d(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) d(i, j) = a.at(i, j);
  }
  const std::vector<double> want = testutil::dense_solve(d, b);
  const std::vector<double> got = solve_banded(a, b);
  for (int i = 0; i < 4; ++i) {
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
  }
}

TEST_CASE("solve_banded agrees with dense elimination on random bands") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int rep = 0; rep < 4; ++rep) {
    const int n = 12 + 3 * rep;
    const int kl = 1 + rep % 3;
    const int ku = 1 + (rep + 1) % 3;
    BandedSystem a(n, kl, ku);
    testutil::DenseMatrix d(n);
    for (int i = 0; i < n; ++i) {
      for (int j = std::max(0, i - kl); j <= std::min(n - 1, i + ku); ++j) {
        const double v = entry(rng);
        a.ref(i, j) = v;
        d(i, j) = v;
      }
      d(i, i) += 4.0;  // keep it comfortably nonsingular
      a.ref(i, i) += 4.0;
    }
    std::vector<double> b(n);
    for (double& v : b) v = entry(rng);
    const std::vector<double> want = testutil::dense_solve(d, b);
    const std::vector<double> got = solve_banded(a, b);
    for (int i = 0; i < n; ++i) {
      CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-11));
    }
  }
}

TEST_CASE("solve_banded reports a singular system") {
  BandedSystem a(3, 1, 1);
  a.ref(0, 0) = 1.0;
  a.ref(1, 1) = 1.0;
  // row 2 left entirely zero
  const std::vector<double> b{1.0, 1.0, 1.0};
  CHECK_THROWS_AS(solve_banded(a, b), SingularSystemError);
}
