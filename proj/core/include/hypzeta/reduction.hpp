#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "hypzeta/bezout.hpp"
#include "hypzeta/curve.hpp"
#include "hypzeta/mat.hpp"

namespace hypzeta {

// Entry of a reduction matrix over Z[s,t]: c0 + cs*s + ct*t.
struct lin_entry {
  mpz_class c0, cs, ct;
};

// (2g+1) x (2g+1) matrix whose entries have total degree <= 1 in (s,t).
class lin_mat {
 public:
  lin_mat() = default;
  explicit lin_mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  int dim() const { return n_; }
  lin_entry& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const lin_entry& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<lin_entry> a_;
};

// Entrywise substitution of integers for (s, t).
int_mat eval_linmat(const lin_mat& m, int64_t s, int64_t t);
void eval_linmat_into(int_mat& out, const lin_mat& m, int64_t s, int64_t t);

// Kinds of one-step reduction maps between the spaces W_{s,t}:
//   horizontal: W_{s,t} -> W_{s-1,t},   scale D_H(s,t) = (2g+1)(2t-1) - 2s
//   diagonal:   W_{s,t} -> W_{s-1,t-1}, scale delta * (2t-1)
//   vertical:   W_{s,t} -> W_{s,t-1},   scale c0 * delta * (2t-1)
enum class step_kind { horizontal, diagonal, vertical };

// The three reduction matrices of a curve plus the data needed to apply
// them; built once and shared by matrix construction and the rational
// oracle. M_V is only built when c0 != 0.
class reduction_context {
 public:
  explicit reduction_context(const curve& c);

  const curve& c() const { return *curve_; }
  const bezout_data& bezout() const { return bz_; }
  const lin_mat& horizontal() const { return mh_; }
  const lin_mat& diagonal() const { return md_; }
  const lin_mat& vertical() const;  // throws errc::zero_constant_term if c0 = 0

  mpz_class dh(int64_t s, int64_t t) const;  // (2g+1)(2t-1) - 2s
  // Scale of one step applied at (s, t).
  mpz_class step_scale(step_kind k, int64_t s, int64_t t) const;
  // Matrix of one step applied at (s, t).
  void step_matrix_into(int_mat& out, step_kind k, int64_t s, int64_t t) const;

 private:
  const curve* curve_;
  bezout_data bz_;
  lin_mat mh_, md_, mv_;
  bool has_vertical_ = false;
};

// Standalone builders (the context calls these).
lin_mat build_horizontal(const curve& c);
lin_mat build_diagonal(const curve& c, const bezout_data& bz);
lin_mat build_vertical(const curve& c, const bezout_data& bz);  // requires c0 != 0

// Exponent pair (a, b) indexing the differentials x^(pa-1) y^(-pb+1) dx/y.
struct admissible_pair {
  int a = 0;
  int b = 0;  // odd
  bool diag_then_horiz() const { return b <= 2 * a; }
  bool operator==(const admissible_pair&) const = default;
};

// All pairs needed by the Frobenius expansion at precision mu: b = 2j+1
// for 0 <= j < mu, 1 <= a <= (2g+1)(j+1) - 1, with the extra lower bound
// a >= j+1 when c0 = 0. Sorted by (b, a).
std::vector<admissible_pair> admissible_pairs(int g, int mu, const mpz_class& c0);

// The kinds making up one block of the reduction path, in application
// order: pair block r >= 1 steps W_{a(2r+1)-1, (b(2r+1)-1)/2} down to
// W_{a(2r-1)-1, (b(2r-1)-1)/2}; the final block lands in W_{-1,0}.
std::vector<step_kind> zero_block_kinds(const admissible_pair& pr);
std::vector<step_kind> final_block_kinds(const admissible_pair& pr);

// Matrix M and scale D of the r-th reduction block (r >= 1), composed in
// the application order of the block's steps.
void reduce_to_zero_matrix(const reduction_context& ctx, const admissible_pair& pr, int64_t r,
                           int_mat& M, mpz_class& D);

// Matrix and scale of the final block W_{a-1,(b-1)/2} -> W_{-1,0}; the
// first row of M is identically zero.
void final_reduction_matrix(const reduction_context& ctx, const admissible_pair& pr, int_mat& M,
                            mpz_class& D);

// A differential in W_{s,t}: coords are against the basis
// (x^s y^{-2t} dx/y, ..., x^{s+2g} y^{-2t} dx/y); coords[0] = 0 when s = -1.
struct differential_vector {
  int64_t s = 0;
  int64_t t = 0;
  std::vector<mpq_class> coords;
};

// Exact-rational reduction oracle: applies the steps in order, each legal
// from the current (s, t) (s >= 0; vertical also needs c0 != 0). Throws
// errc::illegal_step otherwise.
differential_vector rational_reduce(const reduction_context& ctx, differential_vector omega,
                                    const std::vector<step_kind>& steps);

}  // namespace hypzeta
