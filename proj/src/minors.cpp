#include "gauss2/minors.hpp"

namespace gauss2 {

namespace {

Matrix power_sum_rows(const CurveFamily& fam) {
  const unsigned g = fam.genus();
  const PrimeField& F = fam.field();
  Matrix m(4, pair_count(g));
  std::size_t row = 0;
  for (int k = 1; k <= 2; ++k)
    for (unsigned h = 2; h <= 3; ++h, ++row)
      for (std::size_t pos = 0; pos < m.cols(); ++pos) {
        const PairIndex pair = pair_at(pos, g);
        m.at(row, pos) = F.add(F.pow(fam.alpha(k, pair.i), h),
                               F.pow(fam.alpha(k, pair.j), h));
      }
  return m;
}

Matrix mixed_rows(const CurveFamily& fam) {
  const unsigned g = fam.genus();
  const PrimeField& F = fam.field();
  Matrix m(3, pair_count(g));
  for (std::size_t pos = 0; pos < m.cols(); ++pos) {
    const PairIndex pair = pair_at(pos, g);
    const Elt a1i = fam.alpha(1, pair.i), a1j = fam.alpha(1, pair.j);
    const Elt a2i = fam.alpha(2, pair.i), a2j = fam.alpha(2, pair.j);
    m.at(0, pos) = F.add(F.mul(a1i, a2j), F.mul(a1j, a2i));
    m.at(1, pos) =
        F.add(F.mul(F.mul(a1i, a1i), a2j), F.mul(F.mul(a1j, a1j), a2i));
    m.at(2, pos) =
        F.add(F.mul(a1i, F.mul(a2j, a2j)), F.mul(a1j, F.mul(a2i, a2i)));
  }
  return m;
}

}  // namespace

Matrix build_Y(const CurveFamily& fam) {
  return vstack(build_Z(fam).Z, power_sum_rows(fam));
}

Matrix build_Y_prime(const CurveFamily& fam) {
  return vstack(build_Y(fam), mixed_rows(fam));
}

MinorCase minor_N(const PrimeField& F) {
  const unsigned g = 7;
  const CurveFamily fam = paper_family_unchecked(g, F);
  Matrix square = take_first_columns(build_Y(fam), 2 * g + 1);
  const Elt value = determinant(square, F);
  return MinorCase{"N", g, F.modulus(), std::move(square), value};
}

MinorCase minor_N_prime(const PrimeField& F) {
  const unsigned g = 10;
  const CurveFamily fam = paper_family_unchecked(g, F);
  Matrix square = take_first_columns(build_Y_prime(fam), 2 * g + 4);
  const Elt value = determinant(square, F);
  return MinorCase{"N'", g, F.modulus(), std::move(square), value};
}

}  // namespace gauss2
