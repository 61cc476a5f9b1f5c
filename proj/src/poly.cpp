#include "gauss2/poly.hpp"

#include <algorithm>

namespace gauss2 {

Poly::Poly(std::vector<Elt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Elt c) { return Poly(std::vector<Elt>{c}); }

Poly Poly::from_roots(std::span<const Elt> roots, const PrimeField& F) {
  std::vector<Elt> c;
  c.reserve(roots.size() + 1);
  c.push_back(1);
  for (Elt r : roots) {
    c.push_back(0);
    for (std::size_t i = c.size(); i-- > 1;)
      c[i] = F.sub(c[i - 1], F.mul(r, c[i]));
    c[0] = F.mul(F.neg(r), c[0]);
  }
  return Poly(std::move(c));
}

Poly add(const Poly& a, const Poly& b, const PrimeField& F) {
  std::vector<Elt> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly mul(const Poly& a, const Poly& b, const PrimeField& F) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Elt> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Elt ai = a.coeff(i);
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(ai, b.coeff(j)));
  }
  return Poly(std::move(c));
}

Poly scale(const Poly& a, Elt c, const PrimeField& F) {
  std::vector<Elt> out(a.coeffs().begin(), a.coeffs().end());
  for (Elt& x : out) x = F.mul(x, c);
  return Poly(std::move(out));
}

Elt eval(const Poly& a, Elt x, const PrimeField& F) {
  Elt acc = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    acc = F.add(F.mul(acc, x), a.coeff(i));
  return acc;
}

Poly derivative(const Poly& a, const PrimeField& F) {
  if (a.coeffs().size() <= 1) return Poly{};
  std::vector<Elt> c(a.coeffs().size() - 1, 0);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    c[i - 1] = F.mul(F.reduce(i), a.coeff(i));
  return Poly(std::move(c));
}

}  // namespace gauss2
