#include "hypzeta/bezout.hpp"

#include <cassert>
#include <cstdint>
#include <functional>
#include <utility>

#include "hypzeta/errors.hpp"
#include "hypzeta/rtree.hpp"
#include "hypzeta/zmod.hpp"

#include "fp_poly.hpp"

namespace hypzeta {

namespace {

using fpx::fp_poly;
using fpx::invmod;
using fpx::mulmod;

fp_poly reduce_poly(const poly& f, uint64_t p) {
  fp_poly r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = zmod(f.coeffs()[i], p).get_ui();
  fpx::trim(r);
  return r;
}

// Determinant over F_p by Gaussian elimination, row-major input.
uint64_t fp_det(std::vector<std::vector<uint64_t>> m, uint64_t p) {
  std::size_t dim = m.size();
  uint64_t det = 1 % p;
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t pivot = k;
    while (pivot < dim && m[pivot][k] == 0) ++pivot;
    if (pivot == dim) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = (p - det) % p;
    }
    det = mulmod(det, m[k][k], p);
    uint64_t inv = invmod(m[k][k], p);
    for (std::size_t i = k + 1; i < dim; ++i) {
      if (m[i][k] == 0) continue;
      uint64_t f = mulmod(m[i][k], inv, p);
      for (std::size_t j = k; j < dim; ++j) {
        uint64_t s = mulmod(f, m[k][j], p);
        m[i][j] = (m[i][j] + p - s) % p;
      }
    }
  }
  return det;
}

// Incremental CRT with a balanced final representative in (-J/2, J/2].
struct crt_state {
  std::vector<uint64_t> primes;
  std::vector<mpz_class> partial;      // partial[k] = p_0 * ... * p_{k-1}
  std::vector<uint64_t> partial_invs;  // inv(partial[k]) mod p_k
  mpz_class modulus;

  explicit crt_state(std::vector<uint64_t> ps) : primes(std::move(ps)) {
    partial.resize(primes.size());
    partial_invs.resize(primes.size());
    mpz_class acc = 1;
    for (std::size_t k = 0; k < primes.size(); ++k) {
      partial[k] = acc;
      partial_invs[k] = invmod(zmod(acc, primes[k]).get_ui(), primes[k]);
      acc *= primes[k];
    }
    modulus = acc;
  }

  mpz_class reconstruct(const std::vector<uint64_t>& residues) const {
    mpz_class x = 0;
    for (std::size_t k = 0; k < primes.size(); ++k) {
      uint64_t p = primes[k];
      uint64_t xr = zmod(x, p).get_ui();
      uint64_t t = mulmod((residues[k] + p - xr) % p, partial_invs[k], p);
      x += t * partial[k];
    }
    if (2 * x > modulus) x -= modulus;
    return x;
  }
};

// Product over columns of max(1, L1 column norm); bounds |det| and every
// minor of the matrix (Hadamard, since L2 <= L1).
mpz_class column_product_bound(const std::vector<std::vector<mpz_class>>& cols) {
  mpz_class h = 1;
  for (const auto& col : cols) {
    mpz_class s = 0;
    for (const auto& v : col) s += abs(v);
    if (s > 1) h *= s;
  }
  return h;
}

// Smallest prefix of the odd primes, optionally filtered, whose product
// exceeds `need`. Extends the sieve limit as required.
std::vector<uint64_t> prime_prefix_covering(const mpz_class& need, uint64_t start_limit,
                                            const std::function<bool(uint64_t)>& keep) {
  uint64_t limit = start_limit < 8 ? 8 : start_limit;
  for (;;) {
    std::vector<uint64_t> used;
    mpz_class prod = 1;
    for (uint64_t p : sieve_primes(limit)) {
      if (p == 2 || !keep(p)) continue;
      used.push_back(p);
      prod *= p;
      if (prod > need) return used;
    }
    limit *= 2;
  }
}

}  // namespace

std::vector<std::vector<mpz_class>> sylvester_matrix(const poly& F, const poly& G) {
  assert(!F.is_zero() && !G.is_zero());
  const int m = F.degree(), n = G.degree();
  const int dim = m + n;
  std::vector<std::vector<mpz_class>> cols(dim, std::vector<mpz_class>(dim, 0));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k <= m; ++k) cols[j][j + k] = F.coeff(k);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k) cols[n + j][j + k] = G.coeff(k);
  return cols;
}

mpz_class sylvester_resultant(const poly& F, const poly& G) {
  assert(!F.is_zero() && !G.is_zero());
  if (F.degree() + G.degree() == 0) return 1;  // empty matrix
  auto cols = sylvester_matrix(F, G);
  const std::size_t dim = cols.size();

  mpz_class need = 2 * column_product_bound(cols) + 1;
  auto primes = prime_prefix_covering(need, 64, [](uint64_t) { return true; });

  std::vector<uint64_t> residues(primes.size());
  for (std::size_t k = 0; k < primes.size(); ++k) {
    uint64_t p = primes[k];
    std::vector<std::vector<uint64_t>> rows(dim, std::vector<uint64_t>(dim));
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) rows[i][j] = zmod(cols[j][i], p).get_ui();
    residues[k] = fp_det(std::move(rows), p);
  }
  return crt_state(primes).reconstruct(residues);
}

bezout_data bezout_cofactors(const poly& F, const poly& G, unsigned beta_bits_override) {
  assert(!F.is_zero() && !G.is_zero());
  const int m = F.degree(), n = G.degree();
  const int count = m + n;

  mpz_class delta = sylvester_resultant(F, G);
  if (delta == 0) fail(errc::not_coprime, "resultant of the pair vanishes");
  if (count == 0) return {delta, {}, {}};

  // Every R_i, S_i coefficient is a signed minor of the Sylvester matrix
  // (Cramer), so the column-norm product bounds them all.
  mpz_class coeff_bound = column_product_bound(sylvester_matrix(F, G));
  mpz_class need = 2 * coeff_bound + 1;

  mpz_class size_term = abs(delta) * std::max(mpz_class(1), poly_norm(F)) *
                        std::max(mpz_class(1), poly_norm(G));
  std::size_t beta_bits = mpz_sizeinbase(coeff_bound.get_mpz_t(), 2) +
                          mpz_sizeinbase(size_term.get_mpz_t(), 2) + 2;
  if (beta_bits_override > beta_bits) beta_bits = beta_bits_override;
  uint64_t beta = 4;
  while (beta <= beta_bits) beta *= 2;

  auto is_good = [&](uint64_t p) {
    return zmod(delta, p) != 0 && zmod(F.leading(), p) != 0 && zmod(G.leading(), p) != 0;
  };
  auto primes = prime_prefix_covering(need, beta, is_good);

  // Per-coefficient residue rows: R_i contributes n slots, S_i contributes m.
  const std::size_t r_flat = static_cast<std::size_t>(count) * n;
  const std::size_t s_flat = static_cast<std::size_t>(count) * m;
  std::vector<std::vector<uint64_t>> r_res(r_flat, std::vector<uint64_t>(primes.size()));
  std::vector<std::vector<uint64_t>> s_res(s_flat, std::vector<uint64_t>(primes.size()));

  for (std::size_t k = 0; k < primes.size(); ++k) {
    uint64_t p = primes[k];
    fp_poly Fp = reduce_poly(F, p);
    fp_poly Gp = reduce_poly(G, p);
    uint64_t delta_p = zmod(delta, p).get_ui();

    fp_poly g, u, v;
    fpx::xgcd(Fp, Gp, p, g, u, v);
    assert(g.size() == 1);  // coprime modulo a good prime
    fp_poly Ri = fpx::scale(std::move(u), delta_p, p);
    fp_poly Si = fpx::scale(std::move(v), delta_p, p);

    for (int i = 0; i < count; ++i) {
      if (i > 0) {
        Ri.insert(Ri.begin(), 0);  // multiply by x, then reduce
        Si.insert(Si.begin(), 0);
        fpx::trim(Ri);
        fpx::trim(Si);
        Ri = fpx::mod(std::move(Ri), Gp, p);
        Si = fpx::mod(std::move(Si), Fp, p);
      }
      for (int c = 0; c < n; ++c)
        r_res[static_cast<std::size_t>(i) * n + c][k] =
            c < static_cast<int>(Ri.size()) ? Ri[c] : 0;
      for (int c = 0; c < m; ++c)
        s_res[static_cast<std::size_t>(i) * m + c][k] =
            c < static_cast<int>(Si.size()) ? Si[c] : 0;
    }
  }

  crt_state crt(primes);
  bezout_data out;
  out.delta = delta;
  out.R.reserve(count);
  out.S.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<mpz_class> rc(n), sc(m);
    for (int c = 0; c < n; ++c) rc[c] = crt.reconstruct(r_res[static_cast<std::size_t>(i) * n + c]);
    for (int c = 0; c < m; ++c) sc[c] = crt.reconstruct(s_res[static_cast<std::size_t>(i) * m + c]);
    out.R.emplace_back(std::move(rc));
    out.S.emplace_back(std::move(sc));
  }

  // Cheap one-time self check; a failure here is an internal bug.
  for (int i = 0; i < count; ++i) {
    poly lhs = F * out.R[static_cast<std::size_t>(i)] + G * out.S[static_cast<std::size_t>(i)];
    poly rhs = (delta * poly{1}).shifted(static_cast<unsigned>(i));
    if (!(lhs == rhs))
      fail(errc::not_coprime, "internal: Bezout identity failed at i=" + std::to_string(i));
    assert(out.R[static_cast<std::size_t>(i)].degree() < n);
    assert(out.S[static_cast<std::size_t>(i)].degree() < m);
  }
  return out;
}

}  // namespace hypzeta
