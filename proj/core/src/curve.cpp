#include "hypzeta/curve.hpp"

#include <cassert>

#include "hypzeta/bezout.hpp"
#include "hypzeta/errors.hpp"

namespace hypzeta {

curve parse_curve(const std::vector<mpz_class>& coeffs) {
  if (coeffs.size() < 4 || coeffs.size() % 2 != 0)
    fail(errc::even_degree, "need a monic polynomial of odd degree >= 3, got " +
                                std::to_string(coeffs.size()) + " coefficients");
  if (coeffs.back() != 1) fail(errc::not_monic, "leading coefficient must be 1");

  curve c;
  c.Q = poly(coeffs);
  c.g = (c.Q.degree() - 1) / 2;
  c.c0 = coeffs.front();

  c.delta = sylvester_resultant(c.Q, c.Q.derivative());
  if (c.delta == 0) fail(errc::not_squarefree, "Q has a repeated factor (resultant is zero)");

  std::vector<mpz_class> top(coeffs.begin(), coeffs.end() - 1);  // drop x^(2g+1)
  c.Ptop = poly(std::move(top));
  std::vector<mpz_class> bot(coeffs.begin() + 1, coeffs.end());  // (Q - c0)/x
  c.Pbot = poly(std::move(bot));

  assert(c.Ptop.degree() <= 2 * c.g);
  assert(c.Pbot.degree() <= 2 * c.g);
  assert(poly{1}.shifted(static_cast<unsigned>(2 * c.g + 1)) + c.Ptop == c.Q);
  assert(c.Pbot.shifted(1) + poly(std::vector<mpz_class>{c.c0}) == c.Q);
  return c;
}

std::vector<std::vector<mpz_class>> poly_pow_coeffs(const curve& c, int mu) {
  assert(mu >= 1);
  std::vector<std::vector<mpz_class>> C(mu);
  poly power{1};
  for (int j = 0; j < mu; ++j) {
    C[j] = power.coeffs();
    if (C[j].empty()) C[j].push_back(0);
    if (j + 1 < mu) power = power * c.Q;
  }
  return C;
}

}  // namespace hypzeta
