#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hypzeta/frobenius.hpp"

namespace hypzeta {

enum class lpoly_status { computed, fallback, bad };

const char* lpoly_status_name(lpoly_status s) noexcept;

// One per-prime output record. For good primes `a` holds the 2g+1
// coefficients of P(T) = sum a_i T^i with a_0 = 1; empty for bad primes.
struct lpoly_record {
  uint64_t p = 0;
  lpoly_status status = lpoly_status::bad;
  std::vector<mpz_class> a;
};

// e_1..e_{2g} mod p^mu: elementary symmetric functions of the eigenvalues
// of F, from the traces of F, F^2, ..., F^{2g} via Newton's identities.
// Throws errc::non_invertible_small_integer if some k <= 2g shares a
// factor with p (impossible for main-range primes).
std::vector<mpz_class> charpoly_mod(const frob_matrix& F, int g);

// Exact L-polynomial from the e_i residues: balanced lifts under the Weil
// bound |a_i| <= binom(2g,i) p^(i/2) for i <= g, functional equation
// a_{2g-i} = p^(g-i) a_i for the rest, and a residue consistency check on
// the completed upper half.
lpoly_record lift_weil_lpoly(const std::vector<mpz_class>& e, uint64_t p, int g, int mu);

// Asserts the record invariants (functional equation, Weil bounds);
// throws the matching error on violation. Called before any emission.
void validate_record(const lpoly_record& rec, int g);

}  // namespace hypzeta
