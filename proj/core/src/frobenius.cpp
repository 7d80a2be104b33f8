#include "hypzeta/frobenius.hpp"

#include <cassert>
#include <map>

#include "hypzeta/errors.hpp"
#include "hypzeta/parallel.hpp"
#include "hypzeta/rtree.hpp"
#include "hypzeta/zmod.hpp"

namespace hypzeta {

int precision_mu(int g) {
  assert(g >= 1);
  // smallest mu with 9^mu >= 3^g * 4^(2g+1)
  mpz_class rhs = pow_ui(mpz_class(3), g) * pow_ui(mpz_class(4), 2 * g + 1);
  int mu = 1;
  mpz_class lhs = 9;
  while (lhs < rhs) {
    lhs *= 9;
    ++mu;
  }
  return mu;
}

int rho_bound(const admissible_pair& pr) {
  return (pr.b - 1) / 2 + std::max(0, 2 * pr.a - pr.b);
}

uint64_t small_prime_cutoff(int g, int mu) {
  return static_cast<uint64_t>(2 * g + 1) * (4 * mu - 1);
}

std::vector<mpz_class> alpha_coeffs(int mu, const mpz_class& modulus, uint64_t p) {
  assert(mu >= 1);
  // binom(-1/2, k) = prod_{i<k} (-1/2 - i)/(i+1); evaluate the finite sums
  // with exact rationals (denominators are powers of two), then reduce.
  std::vector<mpq_class> binom_half(mu);
  binom_half[0] = 1;
  for (int k = 1; k < mu; ++k)
    binom_half[k] = binom_half[k - 1] * mpq_class(-(2 * k - 1), 2 * k);

  std::vector<mpz_class> out(mu);
  for (int j = 0; j < mu; ++j) {
    mpq_class a = 0;
    for (int k = j; k < mu; ++k) {
      mpz_class ckj;
      mpz_bin_uiui(ckj.get_mpz_t(), k, j);
      mpq_class term = binom_half[k] * ckj;
      if ((j + k) % 2 != 0) term = -term;
      a += term;
    }
    a.canonicalize();
    if (mpz_divisible_ui_p(a.get_den().get_mpz_t(), p))
      fail(errc::non_invertible_denominator,
           "alpha denominator shares a factor with p=" + std::to_string(p));
    mpz_class den_inv = inv_mod(a.get_den(), modulus, errc::non_invertible_denominator);
    out[j] = zmod(a.get_num() * den_inv, modulus);
  }
  return out;
}

frob_context make_frob_context(const curve& c) {
  frob_context f;
  f.mu = precision_mu(c.g);
  f.cutoff = small_prime_cutoff(c.g, f.mu);
  f.pairs = admissible_pairs(c.g, f.mu, c.c0);
  f.rho.reserve(f.pairs.size());
  f.rho_star = 0;
  for (const auto& pr : f.pairs) {
    f.rho.push_back(rho_bound(pr));
    f.rho_star = std::max(f.rho_star, f.rho.back());
  }
  f.C = poly_pow_coeffs(c, f.mu);
  f.pair_offset.resize(static_cast<std::size_t>(f.mu));
  f.pair_a_lo.resize(static_cast<std::size_t>(f.mu));
  std::size_t off = 0;
  for (int j = 0; j < f.mu; ++j) {
    f.pair_offset[static_cast<std::size_t>(j)] = off;
    f.pair_a_lo[static_cast<std::size_t>(j)] = (c.c0 == 0) ? j + 1 : 1;
    off += static_cast<std::size_t>((2 * c.g + 1) * (j + 1) - 1 -
                                    f.pair_a_lo[static_cast<std::size_t>(j)] + 1);
  }
  assert(off == f.pairs.size());
  return f;
}

namespace {

// Main-range primes: odd, above the cutoff, good reduction, and coprime
// to c0 when c0 != 0 (those go through the fallback path instead).
std::vector<uint64_t> main_range_primes(const curve& c, const frob_context& fctx, uint64_t N) {
  std::vector<uint64_t> out;
  if (N < 3) return out;
  for (uint64_t p : sieve_primes(N)) {
    if (p <= fctx.cutoff) continue;
    if (zmod(c.delta, p) == 0) continue;
    if (c.c0 != 0 && zmod(c.c0, p) == 0) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace

u_table compute_u_table(const reduction_context& rctx, const frob_context& fctx, uint64_t N,
                        int threads, run_stats* stats) {
  const curve& c = rctx.c();
  const int n = 2 * c.g + 1;

  u_table ut;
  ut.pairs = fctx.pairs;
  ut.rho = fctx.rho;
  ut.primes = main_range_primes(c, fctx, N);
  ut.entries.assign(ut.pairs.size(), {});
  if (ut.primes.empty()) return ut;

  const uint64_t n_even = N + (N % 2);
  const uint64_t B = n_even / 2;
  assert(B >= 2);

  for (std::size_t pi = 0; pi < ut.pairs.size(); ++pi) {
    const admissible_pair pr = ut.pairs[pi];
    const int rho = ut.rho[pi];
    const int lambda_m = fctx.mu + rho;
    const int lambda_d = fctx.mu + 2 * rho;  // extra digits keep the unit exact

    // Sequence index 0 is the final reduction block, index r >= 1 the r-th
    // zero block; the tree then yields M_0 M_1 ... M_{(p-1)/2} per prime.
    std::vector<int_mat> mats(B);
    std::vector<int_mat> scalars(B);
    parallel_for(B, threads, [&](std::size_t r) {
      int_mat m;
      mpz_class d;
      if (r == 0)
        final_reduction_matrix(rctx, pr, m, d);
      else
        reduce_to_zero_matrix(rctx, pr, static_cast<int64_t>(r), m, d);
      mats[r] = std::move(m);
      scalars[r] = int_mat(1);
      scalars[r].at(0, 0) = std::move(d);
    });

    auto m_leaves = accumulating_remainder_tree(std::move(mats), lambda_m, &ut.primes, threads);
    auto d_leaves = accumulating_remainder_tree(std::move(scalars), lambda_d, &ut.primes, threads);

    std::vector<u_entry>& row = ut.entries[pi];
    row.assign(ut.primes.size(), u_entry{});
    parallel_for(ut.primes.size(), threads, [&](std::size_t k) {
      const uint64_t p = ut.primes[k];
      const mpz_class pz(static_cast<unsigned long>(p));
      const mpz_class mod_m = pow_ui(pz, static_cast<unsigned long>(lambda_m));
      const int_mat& mleaf = m_leaves.at(p);
      const mpz_class& dleaf = d_leaves.at(p).at(0, 0);

      if (dleaf == 0)
        fail(errc::valuation_overflow,
             "denominator product vanishes mod p^lambda at p=" + std::to_string(p));
      const int e = valuation(dleaf, pz);
      if (e > rho)
        fail(errc::valuation_overflow, "v_p(D) = " + std::to_string(e) + " exceeds rho = " +
                                           std::to_string(rho) + " at p=" + std::to_string(p));
      mpz_class unit = dleaf / pow_ui(pz, static_cast<unsigned long>(e));
      mpz_class unit_inv = inv_mod(zmod(unit, mod_m), mod_m, errc::valuation_overflow);

      u_entry ue;
      ue.e = e;
      ue.coords.resize(n);
      for (int i = 0; i < n; ++i) ue.coords[i] = zmod(mleaf.at(i, 0) * unit_inv, mod_m);
      assert(ue.coords[0] == 0);
      row[k] = std::move(ue);
    });
    if (stats) stats->valuation_checks += ut.primes.size();
  }
  return ut;
}

frob_matrix assemble_frobenius(const curve& c, uint64_t p, std::size_t prime_idx,
                               const u_table& ut, const frob_context& fctx, run_stats* stats) {
  const int g = c.g;
  const int n = 2 * g + 1;
  const mpz_class pz(static_cast<unsigned long>(p));
  const mpz_class mod_mu = pow_ui(pz, static_cast<unsigned long>(fctx.mu));
  const mpz_class mod_star = pow_ui(pz, static_cast<unsigned long>(fctx.mu + fctx.rho_star));
  const mpz_class p_rho_star = pow_ui(pz, static_cast<unsigned long>(fctx.rho_star));

  const auto alpha = alpha_coeffs(fctx.mu, mod_star, p);

  // alpha_j * C_{j,r} mod p^(mu+rho*), shared by all columns.
  std::vector<std::vector<mpz_class>> ac(static_cast<std::size_t>(fctx.mu));
  for (int j = 0; j < fctx.mu; ++j) {
    const auto& Cj = fctx.C[static_cast<std::size_t>(j)];
    ac[static_cast<std::size_t>(j)].resize(Cj.size());
    for (std::size_t r = 0; r < Cj.size(); ++r)
      if (Cj[r] != 0)
        ac[static_cast<std::size_t>(j)][r] = zmod(alpha[static_cast<std::size_t>(j)] * Cj[r], mod_star);
  }
  // p^(1 + rho* - e) for every possible valuation shift.
  std::vector<mpz_class> pshift(static_cast<std::size_t>(fctx.rho_star) + 1);
  for (int e = 0; e <= fctx.rho_star; ++e)
    pshift[static_cast<std::size_t>(e)] = pow_ui(pz, static_cast<unsigned long>(1 + fctx.rho_star - e));

  frob_matrix out;
  out.p = p;
  out.mu = fctx.mu;
  out.m = int_mat(2 * g);

  std::vector<mpz_class> acc(n);
  mpz_class coef;
  for (int i = 0; i < 2 * g; ++i) {
    for (auto& v : acc) v = 0;
    for (int j = 0; j < fctx.mu; ++j) {
      const auto& acj = ac[static_cast<std::size_t>(j)];
      for (std::size_t r = 0; r < acj.size(); ++r) {
        if (acj[r] == 0) continue;
        const u_entry& ue =
            ut.entries[fctx.pair_idx(i + static_cast<int>(r) + 1, j)][prime_idx];
        // p^(1 + rho* - e) * alpha_j * C_{j,r} * coords, exact mod p^(mu+rho*)
        coef = zmod(acj[r] * pshift[static_cast<std::size_t>(ue.e)], mod_star);
        if (coef == 0) continue;
        for (int k = 1; k < n; ++k)  // coords[0] is identically zero
          mpz_addmul(acc[k].get_mpz_t(), coef.get_mpz_t(), ue.coords[k].get_mpz_t());
      }
    }
    // T_i = acc / p^rho*; failure to divide exactly signals an upstream bug.
    for (int k = 1; k < n; ++k) {
      mpz_class v = zmod(acc[k], mod_star);
      mpz_class q, rem;
      mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), p_rho_star.get_mpz_t());
      if (rem != 0)
        fail(errc::integrality_failure, "column " + std::to_string(i) + " entry " +
                                            std::to_string(k) + " not divisible by p^rho* at p=" +
                                            std::to_string(p));
      if (stats) stats->integrality_checks += 1;
      out.m.at(k - 1, i) = zmod(q, mod_mu);
    }
  }
  return out;
}

}  // namespace hypzeta
