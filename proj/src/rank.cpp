#include "designrank/rank.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "designrank/fp.hpp"

namespace designrank {

RankResult numerical_rank(const ComplexMatrix& a, double tol_factor) {
  Eigen::MatrixXcd e(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        throw std::invalid_argument("numerical_rank: non-finite entry");
      e(i, j) = a(i, j);
    }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  const auto& sv = svd.singularValues();

  RankResult r;
  r.method = RankMethod::svd_threshold;
  r.singular_values.assign(sv.data(), sv.data() + sv.size());
  double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  r.tolerance = tol_factor * static_cast<double>(std::max(a.rows(), a.cols())) *
                sigma_max * std::numeric_limits<double>::epsilon();
  r.value = 0;
  for (double s : r.singular_values)
    if (s > r.tolerance) ++r.value;
  return r;
}

// One-step Bareiss over the integers. Row contents are pre-cleared to
// integers (multiplying a row by its denominator lcm preserves rank), after
// which every intermediate entry is a minor of the starting matrix and the
// division by the previous pivot is exact.
RankResult exact_rank_rational(const RationalMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Matrix<BigInt> w(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j)
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(
                                            a(i, j)));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a(i, j);
      w(i, j) = boost::multiprecision::numerator(x) *
                (l / boost::multiprecision::denominator(x));
    }
  }

  BigInt prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && w(piv, col) == 0) ++piv;
    if (piv == m) continue;
    if (piv != rank)
      for (std::size_t j = col; j < n; ++j) std::swap(w(piv, j), w(rank, j));

    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        BigInt t = w(rank, col) * w(i, j) - w(i, col) * w(rank, j);
        w(i, j) = t / prev_pivot;
      }
      w(i, col) = 0;
    }
    prev_pivot = w(rank, col);
    ++rank;
  }

  RankResult r;
  r.method = RankMethod::bareiss_exact;
  r.value = rank;
  return r;
}

RankResult rank_mod_p(const FpMatrix& a) {
  PrimeField f(a.modulus);
  Matrix<std::uint64_t> w = a.values;
  const std::size_t m = w.rows(), n = w.cols();

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && w(piv, col) == 0) ++piv;
    if (piv == m) continue;
    if (piv != rank)
      for (std::size_t j = col; j < n; ++j) std::swap(w(piv, j), w(rank, j));

    std::uint64_t inv = f.inv(w(rank, col));
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (w(i, col) == 0) continue;
      std::uint64_t factor = f.mul(w(i, col), inv);
      for (std::size_t j = col; j < n; ++j)
        w(i, j) = f.sub(w(i, j), f.mul(factor, w(rank, j)));
    }
    ++rank;
  }

  RankResult r;
  r.method = RankMethod::modular_elimination;
  r.value = rank;
  return r;
}

}  // namespace designrank
