#pragma once

#include <cstdint>
#include <vector>

#include "designrank/matrix.hpp"

namespace designrank {

enum class RankMethod { svd_threshold, bareiss_exact, modular_elimination };

struct RankResult {
  std::size_t value = 0;
  RankMethod method = RankMethod::svd_threshold;
  double tolerance = 0.0;                    // svd_threshold only
  std::vector<double> singular_values;       // svd_threshold only
};

// Numerical rank: singular values above
// tol_factor * max(m,n) * sigma_max * machine-epsilon.
RankResult numerical_rank(const ComplexMatrix& a, double tol_factor = 1.0);

// Exact rank by fraction-free (Bareiss) elimination: rows are cleared to
// integers first, pivots are the first nonzero in column order.
RankResult exact_rank_rational(const RationalMatrix& a);

// Rank over F_p by Gaussian elimination with the same pivot rule.
RankResult rank_mod_p(const FpMatrix& a);

}  // namespace designrank
