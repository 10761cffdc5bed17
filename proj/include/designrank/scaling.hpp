#pragma once

#include <cstdint>
#include <vector>

#include "designrank/matrix.hpp"

namespace designrank {

// Outcome of an alternating row/column normalization run. The deviation
// metric is one-sided, matching the scaling targets (row sums at most 1,
// column sums at least m/n):
//
//   metric = max( max_i(rowsum_i - 1), max_j(m/n - colsum_j), 0 )
//
// The returned coefficients and scaled matrix are the best state observed
// (minimal metric), so the postconditions hold at achieved_eps exactly and
// enlarging max_iters can never worsen achieved_eps.
template <typename MatrixT>
struct ScalingOutcome {
  std::vector<double> row_coeffs;  // positive
  std::vector<double> col_coeffs;  // positive
  MatrixT scaled;
  std::size_t iterations = 0;      // full row+column passes performed
  double achieved_eps = 0.0;
  bool converged = false;
};

using SinkhornResult = ScalingOutcome<Matrix<double>>;
using L2ScalingResult = ScalingOutcome<ComplexMatrix>;

// Alternating l1 scaling toward row sums 1 and column sums m/n.
// Requires entrywise nonnegative input with no all-zero row or column and
// eps > 0. Iterates row pass then column pass until the metric is <= eps or
// max_iters passes elapse; non-convergence is reported, not thrown.
SinkhornResult sinkhorn_l1(const Matrix<double>& a, double eps,
                           std::size_t max_iters = 100000);

// Squared-l2 scaling of a complex matrix: runs sinkhorn_l1 on the entrywise
// squared moduli and applies the square roots of its coefficients, so scaled
// rows have squared norm <= 1 + eps and scaled columns >= m/n - eps at
// convergence. Same preconditions, via the squared matrix.
L2ScalingResult scale_l2(const ComplexMatrix& a, double eps,
                         std::size_t max_iters = 100000);

}  // namespace designrank
