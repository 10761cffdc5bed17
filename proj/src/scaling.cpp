#include "designrank/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace designrank {

namespace {

double deviation_metric(const Matrix<double>& a, const std::vector<double>& rho,
                        const std::vector<double>& gamma, double target_col) {
  const std::size_t m = a.rows(), n = a.cols();
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += rho[i] * gamma[j] * a(i, j);
    worst = std::max(worst, s - 1.0);
  }
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += rho[i] * gamma[j] * a(i, j);
    worst = std::max(worst, target_col - s);
  }
  return worst;
}

bool all_finite_positive(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x) || x <= 0.0) return false;
  return true;
}

}  // namespace

SinkhornResult sinkhorn_l1(const Matrix<double>& a, double eps,
                           std::size_t max_iters) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0 || n == 0) throw std::invalid_argument("sinkhorn_l1: empty matrix");
  if (!(eps > 0.0)) throw std::invalid_argument("sinkhorn_l1: eps must be > 0");

  for (std::size_t i = 0; i < m; ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) < 0.0)
        throw std::invalid_argument("sinkhorn_l1: negative entry");
      nz |= a(i, j) > 0.0;
    }
    if (!nz) throw std::invalid_argument("sinkhorn_l1: all-zero row");
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool nz = false;
    for (std::size_t i = 0; i < m; ++i) nz |= a(i, j) > 0.0;
    if (!nz) throw std::invalid_argument("sinkhorn_l1: all-zero column");
  }

  const double target_col = static_cast<double>(m) / static_cast<double>(n);
  std::vector<double> rho(m, 1.0), gamma(n, 1.0);
  std::vector<double> best_rho = rho, best_gamma = gamma;
  double best_metric = deviation_metric(a, rho, gamma, target_col);
  std::size_t iters = 0;
  bool converged = false;

  while (!converged && iters < max_iters) {
    // Row pass: force row sums to exactly 1.
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += gamma[j] * a(i, j);
      rho[i] = 1.0 / s;
    }
    // Column pass: force column sums to exactly m/n.
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += rho[i] * a(i, j);
      gamma[j] = target_col / s;
    }
    ++iters;

    if (!all_finite_positive(rho) || !all_finite_positive(gamma)) break;

    double metric = deviation_metric(a, rho, gamma, target_col);
    if (metric < best_metric) {
      best_metric = metric;
      best_rho = rho;
      best_gamma = gamma;
    }
    converged = metric <= eps;
  }

  SinkhornResult out;
  out.row_coeffs = std::move(best_rho);
  out.col_coeffs = std::move(best_gamma);
  out.scaled = Matrix<double>(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.scaled(i, j) = out.row_coeffs[i] * out.col_coeffs[j] * a(i, j);
  out.iterations = iters;
  out.achieved_eps = best_metric;
  out.converged = converged;
  return out;
}

L2ScalingResult scale_l2(const ComplexMatrix& a, double eps,
                         std::size_t max_iters) {
  Matrix<double> sq(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sq(i, j) = std::norm(a(i, j));

  SinkhornResult base = sinkhorn_l1(sq, eps, max_iters);

  L2ScalingResult out;
  out.row_coeffs.resize(a.rows());
  out.col_coeffs.resize(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    out.row_coeffs[i] = std::sqrt(base.row_coeffs[i]);
  for (std::size_t j = 0; j < a.cols(); ++j)
    out.col_coeffs[j] = std::sqrt(base.col_coeffs[j]);
  out.scaled = ComplexMatrix(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.scaled(i, j) = out.row_coeffs[i] * out.col_coeffs[j] * a(i, j);
  out.iterations = base.iterations;
  out.achieved_eps = base.achieved_eps;
  out.converged = base.converged;
  return out;
}

}  // namespace designrank
