#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "designrank/numeric.hpp"

namespace designrank {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T init = T())
      : rows_(rows), cols_(cols), data_(rows * cols, init) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<Complex>;
using RationalMatrix = Matrix<Rational>;

// Residues are canonical in [0, modulus).
struct FpMatrix {
  std::uint64_t modulus = 0;
  Matrix<std::uint64_t> values;
};

enum class DomainKind { complex_float, exact_rational, prime_field };

struct ScalarDomain {
  DomainKind kind = DomainKind::complex_float;
  std::uint64_t modulus = 0;  // prime_field only

  static ScalarDomain complex_float() { return {DomainKind::complex_float, 0}; }
  static ScalarDomain exact_rational() {
    return {DomainKind::exact_rational, 0};
  }
  static ScalarDomain prime_field(std::uint64_t p) {
    return {DomainKind::prime_field, p};
  }

  std::string name() const;
  bool operator==(const ScalarDomain&) const = default;
};

// Runtime-tagged matrix for file I/O and CLI dispatch. Algorithms take the
// concrete Matrix<T> they need; this wrapper only carries values across the
// text-format boundary. Dimensions are always >= 1.
class ScalarMatrix {
 public:
  using Storage = std::variant<ComplexMatrix, RationalMatrix, FpMatrix>;

  explicit ScalarMatrix(ComplexMatrix m);
  explicit ScalarMatrix(RationalMatrix m);
  explicit ScalarMatrix(FpMatrix m);

  ScalarDomain domain() const;
  std::size_t rows() const;
  std::size_t cols() const;

  const Storage& storage() const { return storage_; }

  const ComplexMatrix& as_complex() const;
  const RationalMatrix& as_rational() const;
  const FpMatrix& as_prime_field() const;

 private:
  Storage storage_;
};

ComplexMatrix to_complex(const RationalMatrix& a);

}  // namespace designrank
