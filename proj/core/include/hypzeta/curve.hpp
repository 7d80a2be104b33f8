#pragma once

#include <gmpxx.h>

#include <vector>

#include "hypzeta/poly.hpp"

namespace hypzeta {

// A hyperelliptic curve y^2 = Q(x), Q monic squarefree of odd degree
// 2g+1, together with the derived constants every later stage consumes.
struct curve {
  poly Q;           // monic, degree 2g+1
  int g = 0;        // genus, (deg Q - 1)/2
  mpz_class delta;  // Sylvester resultant of (Q, Q'), nonzero
  mpz_class c0;     // constant term of Q
  poly Ptop;        // Q = x^(2g+1) + Ptop, deg Ptop <= 2g
  poly Pbot;        // Q = c0 + x*Pbot,    deg Pbot <= 2g
};

// Builds a curve from ascending coefficients. Throws errc::even_degree
// when the degree is not an odd number >= 3, errc::not_monic when the
// leading coefficient is not 1, and errc::not_squarefree when the
// resultant vanishes.
curve parse_curve(const std::vector<mpz_class>& coeffs);

// C[j][r] = coefficient of x^r in Q^j, exactly, for 0 <= j < mu.
std::vector<std::vector<mpz_class>> poly_pow_coeffs(const curve& c, int mu);

}  // namespace hypzeta
