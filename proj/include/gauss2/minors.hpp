#ifndef GAUSS2_MINORS_HPP
#define GAUSS2_MINORS_HPP

#include <string>

#include "gauss2/quadric.hpp"

namespace gauss2 {

/// One of the two determinant base cases of the genus induction: the square
/// matrix actually eliminated and its determinant mod the working prime.
struct MinorCase {
  std::string label;  // "N" or "N'"
  unsigned g = 0;
  std::uint64_t prime = 0;
  Matrix matrix;  // 15x15 for N, 24x24 for N'
  Elt value = 0;
};

/// Ideal system extended by the four power-sum rows
/// (alpha_{k,i}^h + alpha_{k,j}^h), ordered (k=1,h=2), (k=1,h=3),
/// (k=2,h=2), (k=2,h=3). Size (2g+1) x binom(g,2).
Matrix build_Y(const CurveFamily& fam);

/// build_Y extended by the three mixed rows of the unit point:
/// a1_i a2_j + a1_j a2_i, then the squared-first and squared-second
/// variants. Size (2g+4) x binom(g,2).
Matrix build_Y_prime(const CurveFamily& fam);

/// Determinant of the first 2g+1 = 15 columns of build_Y at genus 7 with the
/// built-in parameter lists. The reference value is 4 mod 5; row and column
/// order follow the construction above since the sign depends on them.
MinorCase minor_N(const PrimeField& F);

/// Determinant of the first 2g+4 = 24 columns of build_Y_prime at genus 10.
/// Reference value 16 mod 23.
MinorCase minor_N_prime(const PrimeField& F);

}  // namespace gauss2

#endif
