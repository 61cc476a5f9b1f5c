#include "gauss2/curve.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gauss2 {

std::size_t pair_count(unsigned g) {
  return static_cast<std::size_t>(g) * (g - 1) / 2;
}

std::size_t pair_position(PairIndex p, unsigned g) {
  if (!(1 <= p.i && p.i < p.j && p.j <= g))
    throw std::out_of_range("pair_position: need 1 <= i < j <= g");
  const std::size_t i = p.i, j = p.j;
  const std::size_t offset = (i - 1) * g - (i - 1) * i / 2;
  return offset + (j - i - 1);
}

PairIndex pair_at(std::size_t pos, unsigned g) {
  for (unsigned i = 1; i < g; ++i) {
    const std::size_t span = g - i;
    if (pos < span) return PairIndex{i, static_cast<unsigned>(i + 1 + pos)};
    pos -= span;
  }
  throw std::out_of_range("pair_at: position exceeds pair count");
}

namespace {

void require_genus(unsigned g) {
  if (g < 4) throw std::out_of_range("genus must be at least 4");
}

bool has_duplicate(std::span<const Elt> v) {
  std::vector<Elt> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

}  // namespace

CurveFamily::CurveFamily(unsigned g, PrimeField field, std::vector<Elt> alpha1,
                         std::vector<Elt> alpha2, bool check_distinct)
    : g_(g), field_(field), alpha_{std::move(alpha1), std::move(alpha2)} {
  require_genus(g);
  for (auto& list : alpha_) {
    if (list.size() != g)
      throw std::invalid_argument("parameter list length must equal genus");
    for (Elt& x : list) x = field_.reduce(x);
    if (check_distinct && has_duplicate(list))
      throw InvalidModulus("parameter list has repeats mod p");
  }
  for (Elt x : alpha_[0])
    if (std::find(alpha_[1].begin(), alpha_[1].end(), x) != alpha_[1].end()) {
      cross_collision_ = true;
      break;
    }
}

CurveFamily::CurveFamily(unsigned g, PrimeField field, std::vector<Elt> alpha1,
                         std::vector<Elt> alpha2)
    : CurveFamily(g, field, std::move(alpha1), std::move(alpha2), true) {}

CurveFamily CurveFamily::unchecked(unsigned g, PrimeField field,
                                   std::vector<Elt> alpha1,
                                   std::vector<Elt> alpha2) {
  return CurveFamily(g, field, std::move(alpha1), std::move(alpha2), false);
}

std::size_t CurveFamily::check_k(int k) {
  if (k != 1 && k != 2) throw std::out_of_range("component index must be 1 or 2");
  return static_cast<std::size_t>(k - 1);
}

namespace {

constexpr std::array<Elt, 18> kPaperAlpha1 = {3,  12, 21, 29, 37, 41, 43, 46, 54,
                                              62, 65, 72, 81, 85, 89, 94, 97, 105};
constexpr std::array<Elt, 18> kPaperAlpha2 = {6,  18, 24, 36, 39, 42, 45, 52, 60,
                                              63, 71, 80, 84, 86, 91, 96, 104, 108};

std::array<std::vector<Elt>, 2> paper_lists(unsigned g) {
  require_genus(g);
  if (g > 18) throw std::out_of_range("built-in parameter lists stop at genus 18");
  return {std::vector<Elt>(kPaperAlpha1.begin(), kPaperAlpha1.begin() + g),
          std::vector<Elt>(kPaperAlpha2.begin(), kPaperAlpha2.begin() + g)};
}

}  // namespace

CurveFamily paper_family(unsigned g, const PrimeField& F) {
  auto lists = paper_lists(g);
  return CurveFamily(g, F, std::move(lists[0]), std::move(lists[1]));
}

CurveFamily paper_family_unchecked(unsigned g, const PrimeField& F) {
  auto lists = paper_lists(g);
  return CurveFamily::unchecked(g, F, std::move(lists[0]), std::move(lists[1]));
}

CurveFamily random_family(unsigned g, const PrimeField& F, std::uint64_t seed) {
  require_genus(g);
  if (F.modulus() <= g)
    throw InvalidModulus("modulus must exceed genus to fit distinct residues");
  std::mt19937_64 rng(seed);
  std::array<std::vector<Elt>, 2> lists;
  for (auto& list : lists) {
    std::unordered_set<Elt> seen;
    while (list.size() < g) {
      Elt x = rng() % F.modulus();
      if (seen.insert(x).second) list.push_back(x);
    }
  }
  return CurveFamily(g, F, std::move(lists[0]), std::move(lists[1]));
}

CurveFamily family_from_stream(std::istream& in, const PrimeField& F) {
  long long g_raw;
  if (!(in >> g_raw) || g_raw < 0)
    throw std::runtime_error("family file: cannot read genus");
  const unsigned g = static_cast<unsigned>(g_raw);
  require_genus(g);
  std::array<std::vector<Elt>, 2> lists;
  for (auto& list : lists) {
    list.reserve(g);
    for (unsigned i = 0; i < g; ++i) {
      long long v;
      if (!(in >> v))
        throw std::runtime_error("family file: expected 2*g integers after genus");
      const Elt r = F.reduce(static_cast<std::uint64_t>(std::llabs(v)));
      list.push_back(v < 0 ? F.neg(r) : r);
    }
  }
  return CurveFamily(g, F, std::move(lists[0]), std::move(lists[1]));
}

CurveFamily family_from_file(const std::string& path, const PrimeField& F) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  return family_from_stream(in, F);
}

Elt q_coeff(const CurveFamily& fam, int k, unsigned h, PairIndex pair) {
  const PrimeField& F = fam.field();
  const Elt ai = fam.alpha(k, pair.i);
  const Elt aj = fam.alpha(k, pair.j);
  // sum of ai^m aj^(h-m): walk m upward keeping running powers.
  Elt ai_pow = 1;
  Elt acc = 0;
  for (unsigned m = 0; m <= h; ++m) {
    acc = F.add(acc, F.mul(ai_pow, F.pow(aj, h - m)));
    ai_pow = F.mul(ai_pow, ai);
  }
  return acc;
}

Elt p_coeff(const CurveFamily& fam, int k, unsigned h, PairIndex pair) {
  if (h > fam.genus() - 2) throw std::out_of_range("p_coeff: h exceeds g-2");
  const Poly omitted = component_poly_omitting(fam, k, pair.i, pair.j);
  return omitted.coeff(fam.genus() - 2 - h);
}

Elt c_coeff(const CurveFamily& fam, int k, unsigned h) {
  if (h > fam.genus()) throw std::out_of_range("c_coeff: h exceeds g");
  return component_poly(fam, k).coeff(fam.genus() - h);
}

Poly component_poly(const CurveFamily& fam, int k) {
  return Poly::from_roots(fam.roots(k), fam.field());
}

Poly component_poly_omitting(const CurveFamily& fam, int k, unsigned i) {
  auto roots = fam.roots(k);
  std::vector<Elt> kept;
  kept.reserve(roots.size() - 1);
  for (std::size_t m = 0; m < roots.size(); ++m)
    if (m + 1 != i) kept.push_back(roots[m]);
  return Poly::from_roots(kept, fam.field());
}

Poly component_poly_omitting(const CurveFamily& fam, int k, unsigned i,
                             unsigned j) {
  auto roots = fam.roots(k);
  std::vector<Elt> kept;
  kept.reserve(roots.size() - 2);
  for (std::size_t m = 0; m < roots.size(); ++m)
    if (m + 1 != i && m + 1 != j) kept.push_back(roots[m]);
  return Poly::from_roots(kept, fam.field());
}

}  // namespace gauss2
