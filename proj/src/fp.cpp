#include "designrank/fp.hpp"

#include <stdexcept>

namespace designrank {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; the listed bases decide primality for all
// 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p))
    throw std::domain_error("prime-field modulus " + std::to_string(p) +
                            " is not prime");
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
  u64 s = a + b;
  if (s >= p_ || s < a) s -= p_;
  return s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const {
  return a >= b ? a - b : a + (p_ - b);
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
  return mulmod(a, b, p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  return powmod(a, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero residue");
  return powmod(a % p_, p_ - 2, p_);
}

std::uint64_t PrimeField::neg(std::uint64_t a) const {
  return a == 0 ? 0 : p_ - a;
}

std::uint64_t PrimeField::reduce_signed(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<u64>(r);
}

}  // namespace designrank
