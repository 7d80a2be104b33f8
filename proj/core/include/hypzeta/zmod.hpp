#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>

#include "hypzeta/errors.hpp"

namespace hypzeta {

// Canonical residue of x in [0, m), m > 0.
inline mpz_class zmod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Inverse of x mod m; throws `code` when gcd(x, m) != 1.
inline mpz_class inv_mod(const mpz_class& x, const mpz_class& m, errc code) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()))
    fail(code, "no inverse of " + x.get_str() + " modulo " + m.get_str());
  return r;
}

inline mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline mpz_class pow_mod(const mpz_class& base, const mpz_class& e, const mpz_class& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Representative of x + mZ in (-m/2, m/2]. Requires m odd, so the tie
// residue m/2 cannot occur.
inline mpz_class balanced_lift(const mpz_class& x, const mpz_class& m) {
  assert(mpz_odd_p(m.get_mpz_t()));
  mpz_class r = zmod(x, m);
  if (2 * r > m) r -= m;
  return r;
}

// p-adic valuation of a nonzero integer.
inline int valuation(mpz_class x, const mpz_class& p) {
  assert(x != 0);
  int v = 0;
  mpz_class q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    x = q;
    ++v;
  }
}

}  // namespace hypzeta
