#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <vector>

#include "hypzeta/curve.hpp"
#include "hypzeta/mat.hpp"
#include "hypzeta/reduction.hpp"

namespace hypzeta {

// Pipeline counters surfaced to callers; the valuation and integrality
// counts exist so runs can report that the runtime assertions actually
// fired zero violations over nonzero checks. Atomic because records are
// produced by a parallel map.
struct run_stats {
  std::atomic<uint64_t> primes_total{0};
  std::atomic<uint64_t> bad{0};
  std::atomic<uint64_t> fallback{0};
  std::atomic<uint64_t> computed{0};
  std::atomic<uint64_t> valuation_checks{0};
  std::atomic<uint64_t> integrality_checks{0};
  std::atomic<uint64_t> verified{0};
};

// Smallest mu with 3^(2 mu) >= 3^g * 2^(2(2g+1)); the uniform p-adic
// precision that lets Weil bounds pin the L-polynomial for every p >= 3.
int precision_mu(int g);

// Valuation bound rho = (b-1)/2 + max(0, 2a - b) on the denominator
// product of the pair's reduction path.
int rho_bound(const admissible_pair& pr);

// Primes p <= (2g+1)(4 mu - 1) are below the main range.
uint64_t small_prime_cutoff(int g, int mu);

// alpha_0..alpha_{mu-1} modulo `modulus` = p^lambda for an odd prime p:
// alpha_j = sum_{k=j}^{mu-1} (-1)^{j+k} binom(-1/2, k) binom(k, j), whose
// denominators are powers of two. Throws errc::non_invertible_denominator
// when a denominator is not invertible (p = 2 or a leaked small prime).
std::vector<mpz_class> alpha_coeffs(int mu, const mpz_class& modulus, uint64_t p);

// Reduced differential U_p^{a,b}: coords are canonical residues mod
// p^(mu+rho) with coords[0] = 0, and U = p^(-e) * coords with
// 0 <= e <= rho the valuation of the denominator product.
struct u_entry {
  std::vector<mpz_class> coords;
  int e = 0;
};

// U values for every admissible pair and every main-range prime.
struct u_table {
  std::vector<admissible_pair> pairs;
  std::vector<int> rho;             // per pair
  std::vector<uint64_t> primes;     // main-range primes < N, ascending
  std::vector<std::vector<u_entry>> entries;  // [pair][prime index]
};

// Precomputed per-curve data for assembling Frobenius matrices.
struct frob_context {
  int mu = 0;
  int rho_star = 0;                      // max rho over the pair set
  uint64_t cutoff = 0;                   // small-prime cutoff M
  std::vector<admissible_pair> pairs;    // sorted by (b, a)
  std::vector<int> rho;                  // per pair
  std::vector<std::vector<mpz_class>> C; // C[j] = coefficients of Q^j
  std::vector<std::size_t> pair_offset;  // index of the first pair with b = 2j+1
  std::vector<int> pair_a_lo;            // lowest a enumerated for that b

  // Index of (a, 2j+1) in `pairs`.
  std::size_t pair_idx(int a, int j) const {
    return pair_offset[static_cast<std::size_t>(j)] +
           static_cast<std::size_t>(a - pair_a_lo[static_cast<std::size_t>(j)]);
  }
};

frob_context make_frob_context(const curve& c);

// Runs one matrix tree at lambda = mu + rho and one scalar tree at
// lambda = mu + 2 rho per pair (the scalar tree needs the extra digits so
// the denominator's unit part stays exact after stripping p^e) and fills
// the U-table for all main-range primes p < N: odd, p > cutoff, p not
// dividing delta, and p not dividing c0 when c0 != 0.
// Throws errc::valuation_overflow if any denominator valuation exceeds rho.
u_table compute_u_table(const reduction_context& rctx, const frob_context& fctx, uint64_t N,
                        int threads = 1, run_stats* stats = nullptr);

// 2g x 2g matrix of Frobenius acting on the cohomology basis, entries
// canonical residues mod p^mu; column i holds the coordinates of the
// reduction of the i-th basis differential's image.
struct frob_matrix {
  uint64_t p = 0;
  int mu = 0;
  int_mat m;
};

// Evaluates the Frobenius expansion sum_{j,r} p alpha_j C_{j,r} U^{i+r+1, 2j+1}
// at scale p^rho_star with an exact divisibility check on the way back down.
// Throws errc::integrality_failure if the scaled sum is not divisible.
frob_matrix assemble_frobenius(const curve& c, uint64_t p, std::size_t prime_idx,
                               const u_table& ut, const frob_context& fctx,
                               run_stats* stats = nullptr);

}  // namespace hypzeta
