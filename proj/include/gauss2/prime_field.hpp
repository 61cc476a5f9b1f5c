#ifndef GAUSS2_PRIME_FIELD_HPP
#define GAUSS2_PRIME_FIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace gauss2 {

/// Residue in [0, p). All matrix/polynomial entries use this carrier type;
/// the owning PrimeField supplies the arithmetic.
using Elt = std::uint64_t;

struct InvalidModulus : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Arithmetic modulo an odd prime p. p is capped below 2^62 so that sums of
/// two residues never overflow and products fit in an unsigned 128-bit
/// intermediate.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Elt reduce(std::uint64_t x) const { return x % p_; }

  Elt add(Elt a, Elt b) const {
    Elt s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p_ - b; }

  Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }

  Elt mul(Elt a, Elt b) const {
    return static_cast<Elt>(static_cast<unsigned __int128>(a) * b % p_);
  }

  Elt pow(Elt base, std::uint64_t exp) const;

  /// Multiplicative inverse via Fermat exponentiation; a must be nonzero.
  Elt inv(Elt a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

}  // namespace gauss2

#endif
