#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "designrank/matrix.hpp"
#include "designrank/rank.hpp"
#include "designrank/scaling.hpp"

using namespace designrank;

namespace {

double row_sum(const Matrix<double>& a, std::size_t i) {
  double s = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j);
  return s;
}

double col_sum(const Matrix<double>& a, std::size_t j) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, j);
  return s;
}

double row_sq_norm(const ComplexMatrix& a, std::size_t i) {
  double s = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return s;
}

double col_sq_norm(const ComplexMatrix& a, std::size_t j) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += std::norm(a(i, j));
  return s;
}

// Direct check of the one-sided postconditions at the reported accuracy.
void check_l1_postconditions(const Matrix<double>& a, const SinkhornResult& r) {
  double ratio = double(a.rows()) / double(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    CHECK(row_sum(r.scaled, i) <= 1.0 + r.achieved_eps + 1e-12);
  for (std::size_t j = 0; j < a.cols(); ++j)
    CHECK(col_sum(r.scaled, j) >= ratio - r.achieved_eps - 1e-12);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      CHECK(r.scaled(i, j) ==
            doctest::Approx(r.row_coeffs[i] * r.col_coeffs[j] * a(i, j))
                .epsilon(1e-12));
}

}  // namespace

TEST_CASE("l1 scaling of the 2x1 ones column balances in one pass") {
  Matrix<double> a(2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  SinkhornResult r = sinkhorn_l1(a, 1e-6);
  REQUIRE(r.converged);
  CHECK(r.iterations == 1);
  CHECK(row_sum(r.scaled, 0) == doctest::Approx(1.0));
  CHECK(row_sum(r.scaled, 1) == doctest::Approx(1.0));
  CHECK(col_sum(r.scaled, 0) == doctest::Approx(2.0));  // m/n = 2
}

TEST_CASE("l1 scaling of diag(2, 8) reaches the identity") {
  Matrix<double> a(2, 2);
  a(0, 0) = 2;
  a(1, 1) = 8;
  SinkhornResult r = sinkhorn_l1(a, 1e-9);
  REQUIRE(r.converged);
  CHECK(r.scaled(0, 0) == doctest::Approx(1.0));
  CHECK(r.scaled(1, 1) == doctest::Approx(1.0));
  CHECK(r.scaled(0, 1) == 0.0);
  CHECK(r.scaled(1, 0) == 0.0);
}

TEST_CASE("l1 scaling fixed point of the 4x2 all-ones matrix") {
  Matrix<double> a(4, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) a(i, j) = 1;
  SinkhornResult r = sinkhorn_l1(a, 1e-6);
  REQUIRE(r.converged);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(r.scaled(i, j) == doctest::Approx(0.5));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(row_sum(r.scaled, i) == doctest::Approx(1.0));
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(col_sum(r.scaled, j) == doctest::Approx(2.0));
}

TEST_CASE("l1 scaling rejects zero rows, zero columns, negative entries") {
  Matrix<double> zrow(2, 2);
  zrow(0, 0) = 1;
  zrow(0, 1) = 1;
  CHECK_THROWS(sinkhorn_l1(zrow, 1e-6));
  Matrix<double> zcol(2, 2);
  zcol(0, 0) = 1;
  zcol(1, 0) = 1;
  CHECK_THROWS(sinkhorn_l1(zcol, 1e-6));
  Matrix<double> neg(1, 1);
  neg(0, 0) = -1;
  CHECK_THROWS(sinkhorn_l1(neg, 1e-6));
}

TEST_CASE("l2 scaling of a 2x2 diagonal with values 3 and 1/5") {
  ComplexMatrix a(2, 2);
  a(0, 0) = 3.0;
  a(1, 1) = 0.2;
  L2ScalingResult r = scale_l2(a, 1e-9);
  REQUIRE(r.converged);
  CHECK(std::abs(r.scaled(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(r.scaled(1, 1)) == doctest::Approx(1.0));
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(row_sq_norm(r.scaled, i) == doctest::Approx(1.0));
    CHECK(col_sq_norm(r.scaled, i) == doctest::Approx(1.0));
  }
}

TEST_CASE("l2 scaling of the all-ones 4x2 gives squared modulus 1/2") {
  ComplexMatrix a(4, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) a(i, j) = Complex(1, 0);
  L2ScalingResult r = scale_l2(a, 1e-6);
  REQUIRE(r.converged);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(std::norm(r.scaled(i, j)) == doctest::Approx(0.5));
}

TEST_CASE("l2 scaling stalls on a pattern violating property-S") {
  // Zero block rows {1,2} x col {1}: 2/3 + 1/2 > 1, so no scaling exists.
  ComplexMatrix a(3, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(2, 0) = 1;
  L2ScalingResult r = scale_l2(a, 1e-6, 100000);
  CHECK_FALSE(r.converged);
  CHECK(r.achieved_eps > 1e-6);
}

TEST_CASE("scaling preserves the zero pattern and the numerical rank") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t m = 3 + rng() % 4, n = 2 + rng() % 3;
    if (m < n) std::swap(m, n);
    ComplexMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = Complex(1.0 + double(rng() % 8), double(rng() % 3));
    L2ScalingResult r = scale_l2(a, 1e-8);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK((a(i, j) == Complex(0, 0)) == (r.scaled(i, j) == Complex(0, 0)));
    CHECK(numerical_rank(a).value == numerical_rank(r.scaled).value);
    for (double c : r.row_coeffs) CHECK(c > 0.0);
    for (double c : r.col_coeffs) CHECK(c > 0.0);
  }
}

TEST_CASE("l1 postconditions hold at the reported accuracy") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t m = 2 + rng() % 5, n = 2 + rng() % 5;
    Matrix<double> a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 + double(rng() % 9);
    SinkhornResult r = sinkhorn_l1(a, 1e-7);
    check_l1_postconditions(a, r);
  }
}

TEST_CASE("doubling max_iters never worsens the achieved accuracy") {
  ComplexMatrix a(3, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(2, 0) = 1;  // non-convergent fixture: accuracy keeps improving
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t iters : {100, 200, 400, 800}) {
    L2ScalingResult r = scale_l2(a, 1e-12, iters);
    CHECK(r.achieved_eps <= prev + 1e-15);
    prev = r.achieved_eps;
  }
}
