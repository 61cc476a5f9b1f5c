#include "gauss2/quadric.hpp"

#include <algorithm>
#include <vector>

namespace gauss2 {

Matrix build_U(const CurveFamily& fam, int k) {
  const unsigned g = fam.genus();
  const std::size_t cols = pair_count(g);
  Matrix u(g - 1, cols);
  for (std::size_t pos = 0; pos < cols; ++pos) {
    const PairIndex pair = pair_at(pos, g);
    for (unsigned h = 0; h + 2 <= g; ++h)
      u.at(h, pos) = q_coeff(fam, k, h, pair);
  }
  return u;
}

Matrix build_P_rows(const CurveFamily& fam, int k) {
  const unsigned g = fam.genus();
  const std::size_t cols = pair_count(g);
  Matrix m(g - 1, cols);
  for (std::size_t pos = 0; pos < cols; ++pos) {
    const PairIndex pair = pair_at(pos, g);
    const Poly omitted = component_poly_omitting(fam, k, pair.i, pair.j);
    for (unsigned h = 0; h + 2 <= g; ++h)
      m.at(h, pos) = omitted.coeff(g - 2 - h);
  }
  return m;
}

IdealSystem build_Z(const CurveFamily& fam) {
  const unsigned g = fam.genus();
  const Matrix u1 = build_U(fam, 1);
  const Matrix u2 = build_U(fam, 2);
  // W = rows h = 1..g-2 of the k=2 conditions.
  Matrix w(g - 2, u2.cols());
  for (unsigned h = 1; h + 2 <= g; ++h) {
    auto src = u2.row(h);
    std::copy(src.begin(), src.end(), w.row(h - 1).begin());
  }
  Matrix z = vstack(u1, w);
  Echelon ref = echelonize(z, fam.field());
  const std::size_t r0 = ref.rank;
  return IdealSystem{fam, std::move(z), std::move(ref), r0};
}

bool vandermonde_minor_check(const CurveFamily& fam, int k) {
  const unsigned g = fam.genus();
  const PrimeField& F = fam.field();
  // Pairs (1,2)..(1,g) occupy exactly the first g-1 columns.
  const Matrix sub = take_first_columns(build_U(fam, k), g - 1);
  const Elt det = determinant(sub, F);
  Elt prod = 1;
  for (unsigned i = 2; i <= g; ++i)
    for (unsigned j = i + 1; j <= g; ++j)
      prod = F.mul(prod, F.sub(fam.alpha(k, j), fam.alpha(k, i)));
  return det == prod;
}

bool verify_pq_identity(const CurveFamily& fam) {
  const unsigned g = fam.genus();
  const PrimeField& F = fam.field();
  const std::size_t cols = pair_count(g);
  for (int k = 1; k <= 2; ++k) {
    const Poly full = component_poly(fam, k);  // c_{k,m} = coeff of t^(g-m)
    for (std::size_t pos = 0; pos < cols; ++pos) {
      const PairIndex pair = pair_at(pos, g);
      const Poly omitted = component_poly_omitting(fam, k, pair.i, pair.j);
      std::vector<Elt> q(g - 1);
      for (unsigned h = 0; h + 2 <= g; ++h) q[h] = q_coeff(fam, k, h, pair);
      // Row P_{k,n} against sum_m c_{k,m} Q_{k,n+m}; in the h = g-2-n
      // indexing this is p_h = sum_m c_m q_{h-m}.
      for (unsigned h = 0; h + 2 <= g; ++h) {
        Elt rhs = 0;
        for (unsigned m = 0; m <= h; ++m)
          rhs = F.add(rhs, F.mul(full.coeff(g - m), q[h - m]));
        if (omitted.coeff(g - 2 - h) != rhs) return false;
      }
    }
  }
  return true;
}

}  // namespace gauss2
