#ifndef GAUSS2_QUADRIC_HPP
#define GAUSS2_QUADRIC_HPP

#include "gauss2/curve.hpp"
#include "gauss2/matrix.hpp"

namespace gauss2 {

/// The linear system cutting out the quadrics through the canonical binary
/// curve, in the power-sum (q) form, with its echelon form and rank r0.
/// For a generic family r0 = 2g-3 and the solution space has dimension
/// binom(g-2,2).
struct IdealSystem {
  CurveFamily fam;
  Matrix Z;       // (2g-3) x binom(g,2)
  Echelon Zref;
  std::size_t r0 = 0;
};

/// Quadric conditions for one component: rows h = 0..g-2 (row 0 all ones),
/// entry q_{k,h;i,j} at the column of pair (i,j). Size (g-1) x binom(g,2).
Matrix build_U(const CurveFamily& fam, int k);

/// Same rows in the punctured-elementary-symmetric (p) form; row h carries
/// p_{k,h;i,j}. Rank-equivalent to build_U by the unipotent base change.
Matrix build_P_rows(const CurveFamily& fam, int k);

/// Stack of U (k=1, h=0..g-2) over the k=2 rows h=1..g-2. The all-ones row
/// h=0 is shared by both components and appears once.
IdealSystem build_Z(const CurveFamily& fam);

/// Checks that the (g-1)x(g-1) minor of U on the columns of pairs
/// (1,2)..(1,g) equals the Vandermonde product of alpha_{k,2}..alpha_{k,g}.
bool vandermonde_minor_check(const CurveFamily& fam, int k);

/// Checks the convolution identity tying the two coefficient families
/// together: row P_{k,n} equals sum_{m=0}^{g-2-n} c_{k,m} Q_{k,n+m}, for both
/// k and every n. Entrywise exact.
bool verify_pq_identity(const CurveFamily& fam);

}  // namespace gauss2

#endif
