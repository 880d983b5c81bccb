#pragma once

#include <span>
#include <vector>

namespace bratu {

// Pivots with magnitude at or below this floor abort a direct solve.
inline constexpr double kPivotFloor = 1e-300;

// Tridiagonal operator; sub and sup have length size()-1.
struct TriDiagSystem {
  std::vector<double> sub;
  std::vector<double> diag;
  std::vector<double> sup;

  int size() const { return static_cast<int>(diag.size()); }
  void multiply(std::span<const double> x, std::span<double> out) const;
};

// Thomas elimination without pivoting; throws SingularSystemError on a
// pivot below kPivotFloor.
std::vector<double> solve_tridiag(const TriDiagSystem& sys,
                                  std::span<const double> rhs);

// General banded matrix with kl sub- and ku super-diagonals, stored
// column-wise with the extra kl rows of headroom the fill-in of partial
// pivoting needs.
class BandedSystem {
 public:
  BandedSystem(int n, int kl, int ku);

  int size() const { return n_; }
  int lower_bandwidth() const { return kl_; }
  int upper_bandwidth() const { return ku_; }

  // In-band accessors; at() reads 0 outside the band, ref() requires the
  // entry to be inside it.
  double at(int i, int j) const;
  double& ref(int i, int j);

  void multiply(std::span<const double> x, std::span<double> out) const;

  const std::vector<double>& storage() const { return ab_; }
  int leading_dimension() const { return ldab_; }

 private:
  int n_;
  int kl_;
  int ku_;
  int ldab_;
  std::vector<double> ab_;
};

// Banded LU with partial pivoting; same error contract as solve_tridiag.
std::vector<double> solve_banded(const BandedSystem& sys,
                                 std::span<const double> rhs);

}  // namespace bratu
