#pragma once

#include <gmpxx.h>

#include <vector>

#include "hypzeta/poly.hpp"

namespace hypzeta {

// Cofactor family for a coprime pair (F, G), m = deg F, n = deg G:
//   F*R[i] + G*S[i] = delta * x^i   for 0 <= i < m+n,
// with deg R[i] < n, deg S[i] < m and delta the Sylvester resultant.
struct bezout_data {
  mpz_class delta;
  std::vector<poly> R;
  std::vector<poly> S;
};

// (m+n) x (m+n) Sylvester matrix of (F, G): n shifted copies of F's
// coefficient column, then m shifted copies of G's.
std::vector<std::vector<mpz_class>> sylvester_matrix(const poly& F, const poly& G);

// det of the Sylvester matrix, computed modulo enough small primes and
// reconstructed by CRT. Returns 0 exactly when F and G share a factor.
mpz_class sylvester_resultant(const poly& F, const poly& G);

// Deterministic Bezout cofactors: solve the i = 0 instance by extended gcd
// in F_p[x] for every good prime p below a bound beta, derive i >= 1 by
// shift-and-reduce, and reconstruct signed coefficients with balanced CRT.
// beta is the smallest power of two exceeding the Hadamard coefficient
// bound plus log2(|delta| * ||F|| * ||G||) + 2, doubled until the good
// prime product covers the bound; beta_bits_override forces a floor (used
// to check that the output is independent of beta).
// Throws errc::not_coprime when the resultant vanishes.
bezout_data bezout_cofactors(const poly& F, const poly& G, unsigned beta_bits_override = 0);

}  // namespace hypzeta
