#ifndef GAUSS2_GAUSS_MAP_HPP
#define GAUSS2_GAUSS_MAP_HPP

#include <cstdint>

#include "gauss2/quadric.hpp"

namespace gauss2 {

/// Equations of the non-torsion part of the 2nd Gaussian map: for each
/// component k the coefficients of t^0..t^(2g-6) of
/// R_k(t) = sum_{i<j} s_{ij} (prod_{m != i,j} (t - alpha_{k,m}))^2.
/// r1 is the rank of these rows stacked under the ideal system.
struct NuSystem {
  Matrix matrix;  // 2(2g-5) x binom(g,2)
  Echelon stacked;
  std::size_t r1 = 0;
};

/// Torsion equations: three rows per coordinate node (h = 1..g) built from
/// first/second derivative values of the omitted-root products, then three
/// rows for the unit point. r2 caps the rank chain.
struct TorsionSystem {
  Matrix matrix;  // 3(g+1) x binom(g,2)
  Echelon stacked;
  std::size_t r2 = 0;
};

/// Per-genus record of the rank chain r0 <= r1 <= r2 and the derived
/// dimensions and maximal-rank verdicts.
struct RankReport {
  unsigned g = 0;
  std::uint64_t prime = 0;
  std::size_t r0 = 0;
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  std::size_t dim_I2 = 0;      // binom(g,2) - r0
  std::size_t dim_ker_nu = 0;  // binom(g,2) - r1
  std::size_t rank_nu = 0;     // r1 - r0, at most 4g-10
  std::size_t corank_nu = 0;   // (4g-10) - rank_nu
  std::size_t rank_tau = 0;    // r2 - r1, at most 3g+3
  std::size_t corank_tau = 0;  // (3g+3) - rank_tau
  bool mu_injective = false;   // r2 == binom(g,2)
  bool mu_surjective = false;  // corank_nu == 0 and corank_tau == 0

  bool nu_injective() const { return dim_ker_nu == 0; }
  bool nu_surjective() const { return corank_nu == 0; }
};

NuSystem build_nu(const IdealSystem& ideal);

/// 3(g+1) x binom(g,2) torsion matrix (node rows first, unit point last).
Matrix build_torsion(const CurveFamily& fam);

TorsionSystem build_torsion_system(const IdealSystem& ideal,
                                   const NuSystem& nu);

/// Samples `trials` vectors from the null space of the ideal system and
/// checks that R_k, expanded at its full apparent degree 2g-4, vanishes
/// above degree 2g-6 for both components.
bool degree_drop_check(const IdealSystem& ideal, unsigned trials,
                       std::uint64_t seed);

/// On null-space samples, checks the closed forms of the two leading
/// coefficients: R at degree 2g-6 equals -sum (a_i^2 + a_j^2) s_ij and at
/// degree 2g-7 equals 2 c_1 R_{2g-6} - 2 sum (a_i^3 + a_j^3) s_ij.
bool leading_coeff_closed_forms(const IdealSystem& ideal, unsigned trials,
                                std::uint64_t seed);

/// Full chain r0 -> r1 -> r2 with derived quantities and verdicts.
RankReport rank_report(const CurveFamily& fam);

}  // namespace gauss2

#endif
