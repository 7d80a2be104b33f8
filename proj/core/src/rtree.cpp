#include "hypzeta/rtree.hpp"

#include <cassert>
#include <sstream>

#include "hypzeta/errors.hpp"
#include "hypzeta/parallel.hpp"
#include "hypzeta/zmod.hpp"

namespace hypzeta {

std::vector<uint64_t> sieve_primes(uint64_t limit) {
  assert(limit >= 2);
  if (limit <= 2) return {};
  std::vector<uint8_t> composite(limit, 0);
  std::vector<uint64_t> primes;
  for (uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (uint64_t j = i * i; j < limit; j += i) composite[j] = 1;
  }
  return primes;
}

tree_interval u_interval(uint64_t B, int level, uint64_t node) {
  auto bound = [&](uint64_t j) -> uint64_t {
    unsigned __int128 num = static_cast<unsigned __int128>(j) * B;
    unsigned __int128 den = static_cast<unsigned __int128>(1) << level;
    return static_cast<uint64_t>((num + den - 1) / den);  // ceil
  };
  return {bound(node), bound(node + 1)};
}

tree_config describe_tree(const std::vector<int_mat>& M, int lambda) {
  tree_config cfg;
  cfg.B = M.size() + (M.size() % 2);
  cfg.n = M.empty() ? 0 : M.front().dim();
  cfg.lambda = lambda;
  for (const auto& m : M) {
    mpz_class norm = m.l1_column_norm();
    cfg.tau_bound = std::max(cfg.tau_bound, mpz_sizeinbase(norm.get_mpz_t(), 2));
  }
  return cfg;
}

std::string tree_shape_string(uint64_t B) {
  int ell = 0;
  while ((uint64_t{1} << ell) < B) ++ell;
  std::ostringstream os;
  os << "B=" << B << " depth=" << ell << "\n";
  for (int i = 0; i <= ell; ++i) {
    uint64_t nodes = uint64_t{1} << i;
    uint64_t wmin = B, wmax = 0, nonempty = 0;
    for (uint64_t j = 0; j < nodes; ++j) {
      auto u = u_interval(B, i, j);
      uint64_t w = u.hi - u.lo;
      if (w) ++nonempty;
      wmin = std::min(wmin, w);
      wmax = std::max(wmax, w);
    }
    os << "level " << i << ": " << nodes << " nodes, " << nonempty
       << " nonempty, widths " << wmin << ".." << wmax << "\n";
  }
  return os.str();
}

std::map<uint64_t, int_mat> accumulating_remainder_tree(std::vector<int_mat> M, int lambda,
                                                        const std::vector<uint64_t>* primes,
                                                        int threads) {
  assert(lambda >= 1);
  assert(!M.empty());
  const int n = M.front().dim();
  for (const auto& m : M)
    if (m.dim() != n) fail(errc::dimension_mismatch, "tree inputs must share one dimension");

  if (M.size() % 2 != 0) M.push_back(int_mat::identity(n));  // M_B = I convention
  const uint64_t B = M.size();

  int ell = 0;
  while ((uint64_t{1} << ell) < B) ++ell;

  std::vector<uint64_t> prime_list;
  if (primes) {
    prime_list = *primes;
  } else {
    for (uint64_t p : sieve_primes(2 * B))
      if (p >= 3) prime_list.push_back(p);
  }
#ifndef NDEBUG
  for (uint64_t p : prime_list) {
    assert(p >= 3 && p % 2 == 1 && p < 2 * B);
    assert((p - 1) / 2 < B);  // p < 2B forces this; cannot fail
  }
#endif
  if (prime_list.empty()) return {};

  // P tree, bottom-up. Leaf j holds p^lambda when U_{ell,j} = {(p-1)/2}.
  std::vector<std::vector<mpz_class>> P(static_cast<std::size_t>(ell) + 1);
  P[ell].assign(uint64_t{1} << ell, mpz_class(1));
  for (uint64_t p : prime_list) {
    uint64_t k = (p - 1) / 2;
    uint64_t j = static_cast<uint64_t>((static_cast<unsigned __int128>(k) << ell) / B);
    assert(u_interval(B, ell, j).lo <= k && k < u_interval(B, ell, j).hi);
    P[ell][j] = pow_ui(mpz_class(p), static_cast<unsigned long>(lambda));
  }
  for (int i = ell - 1; i >= 0; --i) {
    uint64_t nodes = uint64_t{1} << i;
    P[i].assign(nodes, mpz_class(1));
    parallel_for(nodes, threads, [&](std::size_t j) { P[i][j] = P[i + 1][2 * j] * P[i + 1][2 * j + 1]; });
  }

  // A tree, bottom-up; the root level is never consumed, so stop at level 1.
  // Leaf j holds M_{k+1} for U_{ell,j} = {k}; empty leaves hold I.
  std::vector<std::vector<int_mat>> A(static_cast<std::size_t>(ell) + 1);
  A[ell].assign(uint64_t{1} << ell, int_mat());
  parallel_for(uint64_t{1} << ell, threads, [&](std::size_t j) {
    auto u = u_interval(B, ell, static_cast<uint64_t>(j));
    if (u.hi == u.lo) {
      A[ell][j] = int_mat::identity(n);
    } else {
      uint64_t k = u.lo;
      // M[0] stays behind for the C root; every other input is consumed here.
      A[ell][j] = (k + 1 < B) ? std::move(M[k + 1]) : int_mat::identity(n);
    }
  });
  for (int i = ell - 1; i >= 1; --i) {
    uint64_t nodes = uint64_t{1} << i;
    A[i].assign(nodes, int_mat());
    parallel_for(nodes, threads, [&](std::size_t j) { A[i][j] = A[i + 1][2 * j] * A[i + 1][2 * j + 1]; });
  }

  // C tree, top-down. Nodes whose modulus is 1 own no primes and are skipped.
  std::vector<int_mat> C_cur(1);
  C_cur[0] = M[0];
  C_cur[0].reduce_mod(P[0][0]);
  for (int i = 0; i < ell; ++i) {
    uint64_t child_nodes = uint64_t{1} << (i + 1);
    std::vector<int_mat> C_next(child_nodes);
    parallel_for(child_nodes, threads, [&](std::size_t c) {
      uint64_t parent = c / 2;
      if (P[i][parent] == 1 || P[i + 1][c] == 1) return;
      if (c % 2 == 0) {
        C_next[c] = C_cur[parent];
        C_next[c].reduce_mod(P[i + 1][c]);
      } else {
        C_next[c] = mul_mod(C_cur[parent], A[i + 1][c - 1], P[i + 1][c]);
      }
    });
    C_cur = std::move(C_next);
    A[i + 1].clear();  // last use of this level
    A[i + 1].shrink_to_fit();
  }

  std::map<uint64_t, int_mat> out;
  for (uint64_t p : prime_list) {
    uint64_t k = (p - 1) / 2;
    uint64_t j = static_cast<uint64_t>((static_cast<unsigned __int128>(k) << ell) / B);
    out.emplace(p, std::move(C_cur[j]));
  }
  return out;
}

}  // namespace hypzeta
