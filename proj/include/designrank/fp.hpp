#pragma once

#include <cstdint>

namespace designrank {

bool is_prime_u64(std::uint64_t n);

// Arithmetic modulo a prime p with canonical residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);  // throws std::domain_error if composite

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t reduce_signed(std::int64_t a) const;

 private:
  std::uint64_t p_;
};

}  // namespace designrank
