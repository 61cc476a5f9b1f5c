#include "gauss2/gauss_map.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <vector>

namespace gauss2 {

namespace {

// (prod_{m != i,j} (t - alpha_{k,m}))^2 for every pair, reused by the row
// builder and the sampled checks.
std::vector<Poly> squared_omitted_products(const CurveFamily& fam, int k) {
  const unsigned g = fam.genus();
  const PrimeField& F = fam.field();
  std::vector<Poly> out;
  out.reserve(pair_count(g));
  for (std::size_t pos = 0; pos < pair_count(g); ++pos) {
    const PairIndex pair = pair_at(pos, g);
    const Poly b = component_poly_omitting(fam, k, pair.i, pair.j);
    out.push_back(mul(b, b, F));
  }
  return out;
}

// R_k at full apparent degree 2g-4 for a concrete solution vector s.
Poly nu_polynomial(const std::vector<Poly>& squares, std::span<const Elt> s,
                   const PrimeField& F) {
  Poly acc;
  for (std::size_t pos = 0; pos < squares.size(); ++pos) {
    if (s[pos] == 0) continue;
    acc = add(acc, scale(squares[pos], s[pos], F), F);
  }
  return acc;
}

}  // namespace

NuSystem build_nu(const IdealSystem& ideal) {
  const CurveFamily& fam = ideal.fam;
  const unsigned g = fam.genus();
  const std::size_t rows_per_curve = 2 * g - 5;  // n = 0..2g-6
  Matrix m(2 * rows_per_curve, pair_count(g));
  for (int k = 1; k <= 2; ++k) {
    const auto squares = squared_omitted_products(fam, k);
    const std::size_t base = static_cast<std::size_t>(k - 1) * rows_per_curve;
    for (std::size_t pos = 0; pos < squares.size(); ++pos)
      for (std::size_t n = 0; n < rows_per_curve; ++n)
        m.at(base + n, pos) = squares[pos].coeff(n);
  }
  Echelon stacked = rank_of_stack(ideal.Zref, m, fam.field());
  const std::size_t r1 = stacked.rank;
  return NuSystem{std::move(m), std::move(stacked), r1};
}

Matrix build_torsion(const CurveFamily& fam) {
  const unsigned g = fam.genus();
  const PrimeField& F = fam.field();
  const std::size_t cols = pair_count(g);

  // phi1e[k-1][i-1][h-1], phi2e likewise: first and second derivatives of
  // the omitted-root products evaluated at the node parameters.
  std::vector<std::vector<std::vector<Elt>>> phi1e(2), phi2e(2);
  for (int k = 1; k <= 2; ++k) {
    phi1e[k - 1].resize(g);
    phi2e[k - 1].resize(g);
    for (unsigned i = 1; i <= g; ++i) {
      const Poly phi = component_poly_omitting(fam, k, i);
      const Poly d1 = derivative(phi, F);
      const Poly d2 = derivative(d1, F);
      auto& e1 = phi1e[k - 1][i - 1];
      auto& e2 = phi2e[k - 1][i - 1];
      e1.resize(g);
      e2.resize(g);
      for (unsigned h = 1; h <= g; ++h) {
        e1[h - 1] = eval(d1, fam.alpha(k, h), F);
        e2[h - 1] = eval(d2, fam.alpha(k, h), F);
      }
    }
  }

  const auto sym = [&](const std::vector<std::vector<Elt>>& a,
                       const std::vector<std::vector<Elt>>& b, PairIndex p,
                       unsigned h) {
    return F.add(F.mul(a[p.i - 1][h - 1], b[p.j - 1][h - 1]),
                 F.mul(a[p.j - 1][h - 1], b[p.i - 1][h - 1]));
  };

  Matrix m(3 * (g + 1), cols);
  for (std::size_t pos = 0; pos < cols; ++pos) {
    const PairIndex pair = pair_at(pos, g);
    for (unsigned h = 1; h <= g; ++h) {
      const std::size_t row = 3 * (h - 1);
      m.at(row + 0, pos) = sym(phi1e[0], phi1e[1], pair, h);
      m.at(row + 1, pos) = sym(phi2e[0], phi1e[1], pair, h);
      m.at(row + 2, pos) = sym(phi1e[0], phi2e[1], pair, h);
    }
    // Unit point rows.
    const Elt a1i = fam.alpha(1, pair.i), a1j = fam.alpha(1, pair.j);
    const Elt a2i = fam.alpha(2, pair.i), a2j = fam.alpha(2, pair.j);
    const std::size_t row = 3 * static_cast<std::size_t>(g);
    m.at(row + 0, pos) = F.add(F.mul(a1i, a2j), F.mul(a1j, a2i));
    m.at(row + 1, pos) =
        F.add(F.mul(F.mul(a1i, a1i), a2j), F.mul(F.mul(a1j, a1j), a2i));
    m.at(row + 2, pos) =
        F.add(F.mul(a1i, F.mul(a2j, a2j)), F.mul(a1j, F.mul(a2i, a2i)));
  }
  return m;
}

TorsionSystem build_torsion_system(const IdealSystem& ideal,
                                   const NuSystem& nu) {
  Matrix m = build_torsion(ideal.fam);
  Echelon stacked = rank_of_stack(nu.stacked, m, ideal.fam.field());
  const std::size_t r2 = stacked.rank;
  return TorsionSystem{std::move(m), std::move(stacked), r2};
}

bool degree_drop_check(const IdealSystem& ideal, unsigned trials,
                       std::uint64_t seed) {
  const CurveFamily& fam = ideal.fam;
  const unsigned g = fam.genus();
  const PrimeField& F = fam.field();
  std::mt19937_64 rng(seed);
  std::array<std::vector<Poly>, 2> squares = {squared_omitted_products(fam, 1),
                                              squared_omitted_products(fam, 2)};
  for (unsigned t = 0; t < trials; ++t) {
    const std::vector<Elt> s = kernel_sample(ideal.Zref, F, rng);
    for (int k = 1; k <= 2; ++k) {
      const Poly r = nu_polynomial(squares[k - 1], s, F);
      // Apparent degree is 2g-4; everything above 2g-6 must cancel.
      if (r.degree() > static_cast<int>(2 * g - 6)) return false;
    }
  }
  return true;
}

bool leading_coeff_closed_forms(const IdealSystem& ideal, unsigned trials,
                                std::uint64_t seed) {
  const CurveFamily& fam = ideal.fam;
  const unsigned g = fam.genus();
  const PrimeField& F = fam.field();
  std::mt19937_64 rng(seed);
  std::array<std::vector<Poly>, 2> squares = {squared_omitted_products(fam, 1),
                                              squared_omitted_products(fam, 2)};
  for (unsigned t = 0; t < trials; ++t) {
    const std::vector<Elt> s = kernel_sample(ideal.Zref, F, rng);
    for (int k = 1; k <= 2; ++k) {
      const Poly r = nu_polynomial(squares[k - 1], s, F);
      Elt sum_sq = 0;   // sum (a_i^2 + a_j^2) s_ij
      Elt sum_cube = 0; // sum (a_i^3 + a_j^3) s_ij
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        if (s[pos] == 0) continue;
        const PairIndex pair = pair_at(pos, g);
        const Elt ai = fam.alpha(k, pair.i), aj = fam.alpha(k, pair.j);
        sum_sq = F.add(sum_sq,
                       F.mul(F.add(F.mul(ai, ai), F.mul(aj, aj)), s[pos]));
        sum_cube = F.add(
            sum_cube,
            F.mul(F.add(F.mul(F.mul(ai, ai), ai), F.mul(F.mul(aj, aj), aj)),
                  s[pos]));
      }
      const Elt lead = F.neg(sum_sq);
      const Elt c1 = c_coeff(fam, k, 1);
      // On the kernel, R at 2g-7 is 2 c_1 R_{2g-6} - 2 sum (a_i^3+a_j^3) s_ij.
      const Elt next =
          F.sub(F.mul(F.add(c1, c1), lead), F.add(sum_cube, sum_cube));
      if (r.coeff(2 * g - 6) != lead) return false;
      if (r.coeff(2 * g - 7) != next) return false;
    }
  }
  return true;
}

RankReport rank_report(const CurveFamily& fam) {
  const unsigned g = fam.genus();
  const std::size_t n_pairs = pair_count(g);
  const IdealSystem ideal = build_Z(fam);
  const NuSystem nu = build_nu(ideal);
  const TorsionSystem tau = build_torsion_system(ideal, nu);

  // Target of the map splits as 2(2g-5) non-torsion plus 3(g+1) torsion
  // dimensions, 7(g-1) in total.
  if (2 * (2 * g - 5) + 3 * (g + 1) != 7 * (g - 1))
    throw std::logic_error("target dimension bookkeeping violated");

  RankReport rep;
  rep.g = g;
  rep.prime = fam.field().modulus();
  rep.r0 = ideal.r0;
  rep.r1 = nu.r1;
  rep.r2 = tau.r2;
  rep.dim_I2 = n_pairs - rep.r0;
  rep.dim_ker_nu = n_pairs - rep.r1;
  rep.rank_nu = rep.r1 - rep.r0;
  rep.corank_nu = (4 * g - 10) - rep.rank_nu;
  rep.rank_tau = rep.r2 - rep.r1;
  rep.corank_tau = (3 * g + 3) - rep.rank_tau;
  rep.mu_injective = rep.r2 == n_pairs;
  rep.mu_surjective = rep.corank_nu == 0 && rep.corank_tau == 0;
  return rep;
}

}  // namespace gauss2
