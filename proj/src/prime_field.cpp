#include "gauss2/prime_field.hpp"

namespace gauss2 {

namespace {

Elt mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<Elt>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t acc = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

// Deterministic Miller-Rabin; this witness set decides primality for all
// 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
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
  if (p >= (1ull << 62))
    throw InvalidModulus("modulus too large: must fit below 2^62");
  if (p < 3 || (p & 1) == 0)
    throw InvalidModulus("modulus must be an odd prime");
  if (!is_prime(p)) throw InvalidModulus("modulus is not prime");
}

Elt PrimeField::pow(Elt base, std::uint64_t exp) const {
  return powmod(base, exp, p_);
}

Elt PrimeField::inv(Elt a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

}  // namespace gauss2
