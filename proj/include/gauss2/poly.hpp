#ifndef GAUSS2_POLY_HPP
#define GAUSS2_POLY_HPP

#include <span>
#include <vector>

#include "gauss2/prime_field.hpp"

namespace gauss2 {

/// Univariate dense polynomial over a prime field, coefficients by ascending
/// degree. The zero polynomial is the empty coefficient vector; trailing
/// zeros are trimmed on construction.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elt> coeffs);

  static Poly constant(Elt c);

  /// Monic product of (t - r) over the given roots (empty list gives 1).
  /// The coefficient of t^(n-h) is the signed elementary symmetric function
  /// of degree h in the roots.
  static Poly from_roots(std::span<const Elt> roots, const PrimeField& F);

  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Elt coeff(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : 0;
  }

  std::span<const Elt> coeffs() const { return coeffs_; }

  bool operator==(const Poly&) const = default;

 private:
  std::vector<Elt> coeffs_;
};

Poly add(const Poly& a, const Poly& b, const PrimeField& F);

/// Schoolbook product; degrees here never exceed a few dozen.
Poly mul(const Poly& a, const Poly& b, const PrimeField& F);

Poly scale(const Poly& a, Elt c, const PrimeField& F);

/// Horner evaluation.
Elt eval(const Poly& a, Elt x, const PrimeField& F);

/// Formal derivative. For the degrees this project produces (< p) the degree
/// drops by exactly one on nonconstant input.
Poly derivative(const Poly& a, const PrimeField& F);

}  // namespace gauss2

#endif
