#include "designrank/matrix.hpp"

#include <stdexcept>

#include "designrank/fp.hpp"

namespace designrank {

namespace {

void require_nonempty(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("matrix dimensions must be >= 1");
}

}  // namespace

std::string ScalarDomain::name() const {
  switch (kind) {
    case DomainKind::complex_float:
      return "complex-float";
    case DomainKind::exact_rational:
      return "exact-rational";
    case DomainKind::prime_field:
      return "prime-field";
  }
  return "?";
}

ScalarMatrix::ScalarMatrix(ComplexMatrix m) : storage_(std::move(m)) {
  require_nonempty(rows(), cols());
}

ScalarMatrix::ScalarMatrix(RationalMatrix m) : storage_(std::move(m)) {
  require_nonempty(rows(), cols());
}

ScalarMatrix::ScalarMatrix(FpMatrix m) : storage_(std::move(m)) {
  require_nonempty(rows(), cols());
  const FpMatrix& fp = std::get<FpMatrix>(storage_);
  if (!is_prime_u64(fp.modulus))
    throw std::domain_error("prime-field modulus " +
                            std::to_string(fp.modulus) + " is not prime");
  for (std::size_t i = 0; i < fp.values.rows(); ++i)
    for (std::size_t j = 0; j < fp.values.cols(); ++j)
      if (fp.values(i, j) >= fp.modulus)
        throw std::invalid_argument("prime-field residue out of range");
}

ScalarDomain ScalarMatrix::domain() const {
  if (std::holds_alternative<ComplexMatrix>(storage_))
    return ScalarDomain::complex_float();
  if (std::holds_alternative<RationalMatrix>(storage_))
    return ScalarDomain::exact_rational();
  return ScalarDomain::prime_field(std::get<FpMatrix>(storage_).modulus);
}

std::size_t ScalarMatrix::rows() const {
  return std::visit(
      [](const auto& m) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, FpMatrix>)
          return m.values.rows();
        else
          return m.rows();
      },
      storage_);
}

std::size_t ScalarMatrix::cols() const {
  return std::visit(
      [](const auto& m) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, FpMatrix>)
          return m.values.cols();
        else
          return m.cols();
      },
      storage_);
}

const ComplexMatrix& ScalarMatrix::as_complex() const {
  if (!std::holds_alternative<ComplexMatrix>(storage_))
    throw std::invalid_argument("matrix is not in the complex-float domain");
  return std::get<ComplexMatrix>(storage_);
}

const RationalMatrix& ScalarMatrix::as_rational() const {
  if (!std::holds_alternative<RationalMatrix>(storage_))
    throw std::invalid_argument("matrix is not in the exact-rational domain");
  return std::get<RationalMatrix>(storage_);
}

const FpMatrix& ScalarMatrix::as_prime_field() const {
  if (!std::holds_alternative<FpMatrix>(storage_))
    throw std::invalid_argument("matrix is not in a prime-field domain");
  return std::get<FpMatrix>(storage_);
}

ComplexMatrix to_complex(const RationalMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = Complex(static_cast<double>(a(i, j)), 0.0);
  return out;
}

}  // namespace designrank
