#include <random>

#include "doctest.h"
#include "gauss2/quadric.hpp"
#include "oracles.hpp"

using namespace gauss2;

namespace {
const PrimeField F109(109);
}

TEST_CASE("build_U shape and entries at genus 4") {
  const CurveFamily fam = paper_family(4, F109);
  for (int k = 1; k <= 2; ++k) {
    const Matrix u = build_U(fam, k);
    CHECK(u.rows() == 3);
    CHECK(u.cols() == 6);
    for (std::size_t c = 0; c < u.cols(); ++c) CHECK(u.at(0, c) == 1);
    CHECK(u.at(1, pair_position({1, 2}, 4)) ==
          F109.add(fam.alpha(k, 1), fam.alpha(k, 2)));
    CHECK(echelonize(u, F109).rank == 3);
  }
}

TEST_CASE("ideal system ranks on the paper family") {
  {
    const IdealSystem ideal = build_Z(paper_family(4, F109));
    CHECK(ideal.r0 == 5);
    CHECK(pair_count(4) - ideal.r0 == 1);
  }
  {
    const IdealSystem ideal = build_Z(paper_family(18, F109));
    CHECK(ideal.r0 == 33);
    CHECK(pair_count(18) - ideal.r0 == 120);
  }
  for (unsigned g = 4; g <= 18; ++g) {
    const IdealSystem ideal = build_Z(paper_family(g, F109));
    CHECK(ideal.Z.rows() == 2 * g - 3);
    CHECK(ideal.Z.cols() == pair_count(g));
  }
}

TEST_CASE("Z stacks the k=1 rows over the k=2 rows without the shared row") {
  const unsigned g = 6;
  const CurveFamily fam = paper_family(g, F109);
  const IdealSystem ideal = build_Z(fam);
  const Matrix u1 = build_U(fam, 1);
  const Matrix u2 = build_U(fam, 2);
  for (std::size_t c = 0; c < pair_count(g); ++c) {
    for (unsigned h = 0; h + 2 <= g; ++h)
      CHECK(ideal.Z.at(h, c) == u1.at(h, c));
    for (unsigned h = 1; h + 2 <= g; ++h)
      CHECK(ideal.Z.at(g - 1 + (h - 1), c) == u2.at(h, c));
  }
}

TEST_CASE("column truncation shapes used by the minor cases") {
  {
    const IdealSystem ideal = build_Z(paper_family(7, F109));
    const Matrix sub = take_first_columns(ideal.Z, 15);
    CHECK(ideal.Z.cols() == 21);
    CHECK(sub.rows() == 11);
    CHECK(sub.cols() == 15);
  }
  {
    const IdealSystem ideal = build_Z(paper_family(10, F109));
    const Matrix sub = take_first_columns(ideal.Z, 24);
    CHECK(ideal.Z.cols() == 45);
    CHECK(sub.rows() == 17);
    CHECK(sub.cols() == 24);
  }
}

TEST_CASE("vandermonde minor: hand case and full sweep") {
  // alpha = [0,1,2,3]: the product over 1 <= i < j is (2-1)(3-1)(3-2) = 2.
  const CurveFamily tiny(4, F109, {0, 1, 2, 3}, {10, 20, 30, 40});
  const Matrix sub = take_first_columns(build_U(tiny, 1), 3);
  CHECK(determinant(sub, F109) == 2);
  CHECK(vandermonde_minor_check(tiny, 1));

  for (unsigned g = 4; g <= 18; ++g) {
    const CurveFamily fam = paper_family(g, F109);
    CHECK(vandermonde_minor_check(fam, 1));
    CHECK(vandermonde_minor_check(fam, 2));
  }
}

TEST_CASE("pq convolution identity: special rows and full check") {
  const CurveFamily fam = paper_family(6, F109);
  const unsigned g = 6;
  for (int k = 1; k <= 2; ++k)
    for (std::size_t pos = 0; pos < pair_count(g); ++pos) {
      const PairIndex pair = pair_at(pos, g);
      // Row n = g-2 (h = 0): P equals Q outright.
      CHECK(p_coeff(fam, k, 0, pair) == q_coeff(fam, k, 0, pair));
      // Row n = g-3 (h = 1): P = Q + c_1 * (all-ones row).
      CHECK(p_coeff(fam, k, 1, pair) ==
            F109.add(q_coeff(fam, k, 1, pair), c_coeff(fam, k, 1)));
    }

  for (unsigned gg = 4; gg <= 18; ++gg)
    CHECK(verify_pq_identity(paper_family(gg, F109)));
}

TEST_CASE("p-form and q-form systems have equal rank") {
  for (int t = 0; t < 5; ++t) {
    const CurveFamily fam = random_family(8, F109, 300 + t);
    for (int k = 1; k <= 2; ++k) {
      CHECK(echelonize(build_U(fam, k), F109).rank ==
            echelonize(build_P_rows(fam, k), F109).rank);
    }
  }
}

TEST_CASE("ideal kernel vectors annihilate both components") {
  std::mt19937_64 rng(33);
  for (const unsigned g : {4u, 7u, 12u}) {
    const CurveFamily fam = paper_family(g, F109);
    const IdealSystem ideal = build_Z(fam);
    for (int t = 0; t < 5; ++t) {
      const std::vector<Elt> s = kernel_sample(ideal.Zref, F109, rng);
      for (int k = 1; k <= 2; ++k) {
        Poly acc;
        for (std::size_t pos = 0; pos < s.size(); ++pos) {
          if (s[pos] == 0) continue;
          const PairIndex pair = pair_at(pos, g);
          acc = add(acc,
                    scale(component_poly_omitting(fam, k, pair.i, pair.j),
                          s[pos], F109),
                    F109);
        }
        CHECK(acc.is_zero());
      }
    }
  }
}
