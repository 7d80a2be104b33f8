#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "hypzeta/curve.hpp"
#include "hypzeta/mat.hpp"
#include "hypzeta/reduction.hpp"
#include "hypzeta/zeta.hpp"

namespace hypzeta {

// F_{p^n} with the lexicographically smallest monic irreducible modulus
// (odometer order on the coefficient tuple, most significant digit
// first). Elements are coefficient vectors of length n over Z/pZ.
class fq {
 public:
  using elem = std::vector<uint64_t>;

  fq(uint64_t p, int n);

  uint64_t p() const { return p_; }
  int n() const { return n_; }
  uint64_t order() const { return q_; }
  // Lower coefficients m_0..m_{n-1} of the modulus x^n + m_{n-1}x^{n-1} + ... + m_0.
  const std::vector<uint64_t>& modulus() const { return mod_; }

  elem zero() const { return elem(static_cast<std::size_t>(n_), 0); }
  elem one() const;
  elem from_index(uint64_t idx) const;  // digit i (base p) is the x^i coefficient
  bool is_zero(const elem& a) const;

  elem add(const elem& a, const elem& b) const;
  elem sub(const elem& a, const elem& b) const;
  elem mul(const elem& a, const elem& b) const;
  elem pow(elem a, uint64_t e) const;

  // Quadratic character chi(u) = u^((q-1)/2) as -1, 0, +1.
  int chi(const elem& a) const;

 private:
  uint64_t p_;
  int n_;
  uint64_t q_;
  std::vector<uint64_t> mod_;
};

// #X(F_{p^n}) for the curve's reduction mod p, by brute force: one point
// at infinity plus sum over x of 1 + chi(Q(x)). Requires p odd and good;
// throws errc::budget_exceeded when p^n > 2^budget_bits.
int64_t point_count(const curve& c, uint64_t p, int n, int budget_bits = 25);

// Exact L-polynomial from the counts N_1..N_g via integer Newton
// identities and the functional equation; status is fallback.
lpoly_record lpoly_from_counts(uint64_t p, int g, const std::vector<int64_t>& counts);

// Plain left-to-right product M_0 ... M_{k_max} reduced mod p^lambda at
// every step; equivalence oracle for the remainder tree.
int_mat direct_mod_product(const std::vector<int_mat>& M, uint64_t p, std::size_t k_max,
                           int lambda);

// Exact-rational reduction of x^(pa-1) y^(-pb+1) dx/y down to W_{-1,0}
// along the same block path the matrix pipeline uses. Throws
// errc::budget_exceeded when p > max_p.
std::vector<mpq_class> exact_U(const reduction_context& rctx, const admissible_pair& pr,
                               uint64_t p, uint64_t max_p = 211);

// Brute-force L-polynomial for a good prime outside the main range.
lpoly_record fallback_lpoly(const curve& c, uint64_t p, int budget_bits = 25);

}  // namespace hypzeta
