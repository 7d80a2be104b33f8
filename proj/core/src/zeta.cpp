#include "hypzeta/zeta.hpp"

#include <cassert>

#include "hypzeta/errors.hpp"
#include "hypzeta/zmod.hpp"

namespace hypzeta {

const char* lpoly_status_name(lpoly_status s) noexcept {
  switch (s) {
    case lpoly_status::computed: return "computed";
    case lpoly_status::fallback: return "fallback";
    case lpoly_status::bad: return "bad";
  }
  return "?";
}

std::vector<mpz_class> charpoly_mod(const frob_matrix& F, int g) {
  const mpz_class pz(static_cast<unsigned long>(F.p));
  const mpz_class mod = pow_ui(pz, static_cast<unsigned long>(F.mu));
  const int deg = 2 * g;

  // Power sums s_k = tr(F^k).
  std::vector<mpz_class> s(static_cast<std::size_t>(deg) + 1);
  int_mat power = F.m;
  s[1] = zmod(power.trace(), mod);
  for (int k = 2; k <= deg; ++k) {
    power = mul_mod(power, F.m, mod);
    s[static_cast<std::size_t>(k)] = zmod(power.trace(), mod);
  }

  // Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i.
  std::vector<mpz_class> e(static_cast<std::size_t>(deg) + 1);
  e[0] = 1;
  for (int k = 1; k <= deg; ++k) {
    mpz_class sum = 0;
    for (int i = 1; i <= k; ++i) {
      mpz_class term = e[static_cast<std::size_t>(k - i)] * s[static_cast<std::size_t>(i)];
      if (i % 2 == 0) term = -term;
      sum += term;
    }
    mpz_class kinv = inv_mod(mpz_class(k), mod, errc::non_invertible_small_integer);
    e[static_cast<std::size_t>(k)] = zmod(sum * kinv, mod);
  }
  return {e.begin() + 1, e.end()};
}

lpoly_record lift_weil_lpoly(const std::vector<mpz_class>& e, uint64_t p, int g, int mu) {
  assert(static_cast<int>(e.size()) == 2 * g);
  const mpz_class pz(static_cast<unsigned long>(p));
  const mpz_class mod = pow_ui(pz, static_cast<unsigned long>(mu));

  lpoly_record rec;
  rec.p = p;
  rec.status = lpoly_status::computed;
  rec.a.assign(static_cast<std::size_t>(2 * g) + 1, 0);
  rec.a[0] = 1;

  for (int i = 1; i <= g; ++i) {
    mpz_class ai = balanced_lift(e[static_cast<std::size_t>(i - 1)], mod);
    if (i % 2 != 0) ai = -ai;
    // Exact Weil test: a_i^2 <= binom(2g,i)^2 p^i.
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * g),
                 static_cast<unsigned long>(i));
    if (ai * ai > binom * binom * pow_ui(pz, static_cast<unsigned long>(i)))
      fail(errc::weil_bound_violation,
           "a_" + std::to_string(i) + " = " + ai.get_str() + " exceeds the Weil bound at p=" +
               std::to_string(p));
    rec.a[static_cast<std::size_t>(i)] = ai;
  }
  for (int i = 0; i < g; ++i)
    rec.a[static_cast<std::size_t>(2 * g - i)] =
        pow_ui(pz, static_cast<unsigned long>(g - i)) * rec.a[static_cast<std::size_t>(i)];

  // The completed upper half must agree with the computed residues.
  for (int k = g + 1; k <= 2 * g; ++k) {
    mpz_class expect = rec.a[static_cast<std::size_t>(k)];
    if (k % 2 != 0) expect = -expect;  // e_k = (-1)^k a_k
    if (zmod(expect, mod) != e[static_cast<std::size_t>(k - 1)])
      fail(errc::functional_equation_mismatch,
           "e_" + std::to_string(k) + " residue disagrees with the functional equation at p=" +
               std::to_string(p));
  }
  return rec;
}

void validate_record(const lpoly_record& rec, int g) {
  if (rec.status == lpoly_status::bad) return;
  assert(static_cast<int>(rec.a.size()) == 2 * g + 1);
  const mpz_class pz(static_cast<unsigned long>(rec.p));
  if (rec.a[0] != 1)
    fail(errc::functional_equation_mismatch, "a_0 != 1 at p=" + std::to_string(rec.p));
  for (int i = 0; i <= g; ++i) {
    mpz_class lhs = rec.a[static_cast<std::size_t>(2 * g - i)];
    mpz_class rhs = pow_ui(pz, static_cast<unsigned long>(g - i)) * rec.a[static_cast<std::size_t>(i)];
    if (lhs != rhs)
      fail(errc::functional_equation_mismatch,
           "functional equation fails at i=" + std::to_string(i) + ", p=" + std::to_string(rec.p));
  }
  for (int i = 0; i <= 2 * g; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * g),
                 static_cast<unsigned long>(i));
    const mpz_class& ai = rec.a[static_cast<std::size_t>(i)];
    if (ai * ai > binom * binom * pow_ui(pz, static_cast<unsigned long>(i)))
      fail(errc::weil_bound_violation,
           "Weil bound fails at i=" + std::to_string(i) + ", p=" + std::to_string(rec.p));
  }
}

}  // namespace hypzeta
