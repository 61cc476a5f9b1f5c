#ifndef GAUSS2_TESTS_ORACLES_HPP
#define GAUSS2_TESTS_ORACLES_HPP

// Independent reference computations for the test suite. These deliberately
// avoid the library's construction paths so the two sides of each check are
// computed differently.

#include <random>
#include <span>
#include <vector>

#include "gauss2/matrix.hpp"
#include "gauss2/poly.hpp"
#include "gauss2/prime_field.hpp"

namespace gauss2::testing {

// e_h(roots) by direct enumeration of all h-subsets.
inline Elt elementary_symmetric_bruteforce(std::span<const Elt> roots,
                                           unsigned h, const PrimeField& F) {
  if (h == 0) return 1;
  if (h > roots.size()) return 0;
  Elt total = 0;
  std::vector<std::size_t> idx(h);
  for (std::size_t i = 0; i < h; ++i) idx[i] = i;
  while (true) {
    Elt prod = 1;
    for (std::size_t i : idx) prod = F.mul(prod, roots[i]);
    total = F.add(total, prod);
    // next combination
    std::size_t i = h;
    while (i-- > 0) {
      if (idx[i] != i + roots.size() - h) {
        ++idx[i];
        for (std::size_t j = i + 1; j < h; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return total;
    }
  }
}

// (-1)^h e_h.
inline Elt signed_elementary_symmetric(std::span<const Elt> roots, unsigned h,
                                       const PrimeField& F) {
  const Elt e = elementary_symmetric_bruteforce(roots, h, F);
  return h % 2 == 0 ? e : F.neg(e);
}

inline Elt det2(Elt a, Elt b, Elt c, Elt d, const PrimeField& F) {
  return F.sub(F.mul(a, d), F.mul(b, c));
}

// Term-by-term power sum, no Horner.
inline Elt eval_naive(const Poly& a, Elt x, const PrimeField& F) {
  Elt total = 0;
  for (std::size_t n = 0; n < a.coeffs().size(); ++n)
    total = F.add(total, F.mul(a.coeff(n), F.pow(x, n)));
  return total;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols,
                            const PrimeField& F, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng() % F.modulus();
  return m;
}

inline std::vector<Elt> to_vec(std::span<const Elt> s) {
  return {s.begin(), s.end()};
}

inline Matrix from_rows(std::vector<std::vector<Elt>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

}  // namespace gauss2::testing

#endif
