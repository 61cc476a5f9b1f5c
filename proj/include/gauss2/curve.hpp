#ifndef GAUSS2_CURVE_HPP
#define GAUSS2_CURVE_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gauss2/poly.hpp"
#include "gauss2/prime_field.hpp"

namespace gauss2 {

/// Unknowns s_{ij} are indexed by pairs 1 <= i < j <= g; the lexicographic
/// rank of the pair is the matrix column.
struct PairIndex {
  unsigned i;
  unsigned j;
  bool operator==(const PairIndex&) const = default;
};

std::size_t pair_count(unsigned g);
std::size_t pair_position(PairIndex p, unsigned g);
PairIndex pair_at(std::size_t pos, unsigned g);

/// A binary curve datum: genus g plus the two parameter lists alpha[k][i]
/// (k = 1,2; i = 1..g) as residues. Within each list the g values must be
/// pairwise distinct (the nodes are distinct points on each component);
/// collisions across the two lists are harmless and only flagged.
class CurveFamily {
 public:
  CurveFamily(unsigned g, PrimeField field, std::vector<Elt> alpha1,
              std::vector<Elt> alpha2);

  /// Skips the within-list distinctness check. Matrix entries are integer
  /// polynomials in the parameters, so determinant evaluations stay valid at
  /// primes where the reduced lists collide.
  static CurveFamily unchecked(unsigned g, PrimeField field,
                               std::vector<Elt> alpha1,
                               std::vector<Elt> alpha2);

  unsigned genus() const { return g_; }
  const PrimeField& field() const { return field_; }

  /// k is 1 or 2.
  std::span<const Elt> roots(int k) const { return alpha_[check_k(k)]; }

  /// 1-based i.
  Elt alpha(int k, unsigned i) const { return alpha_[check_k(k)][i - 1]; }

  bool has_cross_list_collision() const { return cross_collision_; }

 private:
  CurveFamily(unsigned g, PrimeField field, std::vector<Elt> alpha1,
              std::vector<Elt> alpha2, bool check_distinct);
  static std::size_t check_k(int k);

  unsigned g_;
  PrimeField field_;
  std::array<std::vector<Elt>, 2> alpha_;
  bool cross_collision_ = false;
};

/// The fixed parameter lists used for the reference verification runs,
/// truncated to the first g entries and reduced mod p. 4 <= g <= 18.
CurveFamily paper_family(unsigned g, const PrimeField& F);

/// Same lists without the distinctness check (for minor evaluations at small
/// primes where the reduced values repeat).
CurveFamily paper_family_unchecked(unsigned g, const PrimeField& F);

/// Two lists of g distinct residues each, sampled deterministically from the
/// seed. Requires p > g.
CurveFamily random_family(unsigned g, const PrimeField& F, std::uint64_t seed);

/// Plain text format: line 1 = g, line 2 = g integers (alpha_1),
/// line 3 = g integers (alpha_2), whitespace separated.
CurveFamily family_from_stream(std::istream& in, const PrimeField& F);
CurveFamily family_from_file(const std::string& path, const PrimeField& F);

/// q_{k,h;i,j} = sum_{m=0}^{h} alpha_{k,i}^m alpha_{k,j}^(h-m), the
/// two-variable complete homogeneous sum of degree h. 0 <= h <= g-2.
Elt q_coeff(const CurveFamily& fam, int k, unsigned h, PairIndex pair);

/// p_{k,h;i,j} = (-1)^h e_h(alpha_{k,m} : m != i,j), read off as the
/// coefficient of t^(g-2-h) in the root product omitting i and j.
Elt p_coeff(const CurveFamily& fam, int k, unsigned h, PairIndex pair);

/// c_{k,h}: coefficient of t^(g-h) in the full root product.
Elt c_coeff(const CurveFamily& fam, int k, unsigned h);

/// Monic polynomial with all g parameters of component k as roots.
Poly component_poly(const CurveFamily& fam, int k);

/// Root product omitting index i (1-based): the numerator of the i-th
/// Lagrange-style coordinate on component k.
Poly component_poly_omitting(const CurveFamily& fam, int k, unsigned i);

/// Root product omitting both i and j.
Poly component_poly_omitting(const CurveFamily& fam, int k, unsigned i,
                             unsigned j);

}  // namespace gauss2

#endif
