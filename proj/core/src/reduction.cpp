#include "hypzeta/reduction.hpp"

#include <cassert>

#include "hypzeta/errors.hpp"

namespace hypzeta {

namespace {

// Degree check on construction: every entry must have total degree <= 1,
// which holds by construction; assert the structural zero rows instead
// where the callers rely on them.

void add_poly_column(lin_mat& m, int col, const poly& c0_part, const poly& s_part,
                     const poly& t_part) {
  const int n = m.dim();
  for (int k = 0; k < n; ++k) {
    lin_entry& e = m.at(k, col);
    e.c0 += c0_part.coeff(k);
    e.cs += s_part.coeff(k);
    e.ct += t_part.coeff(k);
  }
}

}  // namespace

int_mat eval_linmat(const lin_mat& m, int64_t s, int64_t t) {
  int_mat out(m.dim());
  eval_linmat_into(out, m, s, t);
  return out;
}

void eval_linmat_into(int_mat& out, const lin_mat& m, int64_t s, int64_t t) {
  const int n = m.dim();
  if (out.dim() != n) out = int_mat(n);
  mpz_class S(static_cast<long>(s)), T(static_cast<long>(t));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const lin_entry& e = m.at(i, j);
      mpz_class& v = out.at(i, j);
      v = e.c0;
      mpz_addmul(v.get_mpz_t(), e.cs.get_mpz_t(), S.get_mpz_t());
      mpz_addmul(v.get_mpz_t(), e.ct.get_mpz_t(), T.get_mpz_t());
    }
}

lin_mat build_horizontal(const curve& c) {
  const int n = 2 * c.g + 1;
  lin_mat m(n);
  // Subdiagonal carries D_H(s,t) = (2g+1)(2t-1) - 2s.
  for (int i = 0; i + 1 < n; ++i) {
    lin_entry& e = m.at(i + 1, i);
    e.c0 = -n;
    e.cs = -2;
    e.ct = 2 * n;
  }
  // Last column: coefficients of 2s*Ptop(x) - (2t-1) x*Ptop'(x); the x^i
  // coefficient is p_i * (2s - i(2t-1)) = i*p_i + (2 p_i) s + (-2 i p_i) t.
  for (int i = 0; i < n; ++i) {
    const mpz_class& pi = c.Ptop.coeff(i);
    lin_entry& e = m.at(i, n - 1);
    e.c0 += i * pi;
    e.cs += 2 * pi;
    e.ct += -2 * i * pi;
  }
  return m;
}

lin_mat build_diagonal(const curve& c, const bezout_data& bz) {
  const int n = 2 * c.g + 1;
  lin_mat m(n);
  // Column i: coefficients of (2t-1) x R_i(x) + 2s S_i(x) + 2x S_i'(x).
  for (int i = 0; i < n; ++i) {
    const poly xR = bz.R[i].shifted(1);
    const poly xdS = bz.S[i].derivative().shifted(1);
    add_poly_column(m, i,
                    /*c0=*/mpz_class(2) * xdS - xR,
                    /*s =*/mpz_class(2) * bz.S[i],
                    /*t =*/mpz_class(2) * xR);
  }
  return m;
}

lin_mat build_vertical(const curve& c, const bezout_data& bz) {
  if (c.c0 == 0) fail(errc::zero_constant_term, "vertical reduction needs c0 != 0");
  const int n = 2 * c.g + 1;
  const poly Qd = c.Q.derivative();
  lin_mat m(n);
  // With S_i = h_i + x T_i, column i holds the coefficients of
  //   (2t-3) h_i Q' - 2 h_i s Pbot + (2t-1) c0 R_i + 2 c0 s T_i + 2 c0 S_i'.
  for (int i = 0; i < n; ++i) {
    const mpz_class h = bz.S[i].coeff(0);
    std::vector<mpz_class> tail(bz.S[i].coeffs().begin() + (bz.S[i].is_zero() ? 0 : 1),
                                bz.S[i].coeffs().end());
    const poly T(std::move(tail));
    const poly Sd = bz.S[i].derivative();
    add_poly_column(m, i,
                    /*c0=*/mpz_class(-3) * (h * Qd) - c.c0 * bz.R[i] + mpz_class(2) * (c.c0 * Sd),
                    /*s =*/mpz_class(-2) * (h * c.Pbot) + mpz_class(2) * (c.c0 * T),
                    /*t =*/mpz_class(2) * (h * Qd) + mpz_class(2) * (c.c0 * bz.R[i]));
  }
  return m;
}

reduction_context::reduction_context(const curve& c)
    : curve_(&c), bz_(bezout_cofactors(c.Q, c.Q.derivative())) {
  assert(bz_.delta == c.delta);
  mh_ = build_horizontal(c);
  md_ = build_diagonal(c, bz_);
  if (c.c0 != 0) {
    mv_ = build_vertical(c, bz_);
    has_vertical_ = true;
  }
}

const lin_mat& reduction_context::vertical() const {
  if (!has_vertical_) fail(errc::zero_constant_term, "vertical reduction needs c0 != 0");
  return mv_;
}

mpz_class reduction_context::dh(int64_t s, int64_t t) const {
  const int n = 2 * curve_->g + 1;
  return mpz_class(n) * (2 * mpz_class(static_cast<long>(t)) - 1) -
         2 * mpz_class(static_cast<long>(s));
}

mpz_class reduction_context::step_scale(step_kind k, int64_t s, int64_t t) const {
  mpz_class two_t_minus_1 = 2 * mpz_class(static_cast<long>(t)) - 1;
  switch (k) {
    case step_kind::horizontal: return dh(s, t);
    case step_kind::diagonal: return curve_->delta * two_t_minus_1;
    case step_kind::vertical: return curve_->c0 * curve_->delta * two_t_minus_1;
  }
  return 0;
}

void reduction_context::step_matrix_into(int_mat& out, step_kind k, int64_t s, int64_t t) const {
  switch (k) {
    case step_kind::horizontal: eval_linmat_into(out, mh_, s, t); return;
    case step_kind::diagonal: eval_linmat_into(out, md_, s, t); return;
    case step_kind::vertical: eval_linmat_into(out, vertical(), s, t); return;
  }
}

std::vector<admissible_pair> admissible_pairs(int g, int mu, const mpz_class& c0) {
  assert(mu >= 1);
  std::vector<admissible_pair> out;
  for (int j = 0; j < mu; ++j) {
    const int b = 2 * j + 1;
    const int a_lo = (c0 == 0) ? j + 1 : 1;
    const int a_hi = (2 * g + 1) * (j + 1) - 1;
    for (int a = a_lo; a <= a_hi; ++a) out.push_back({a, b});
  }
  return out;  // construction order is already (b, a)-sorted
}

std::vector<step_kind> zero_block_kinds(const admissible_pair& pr) {
  std::vector<step_kind> kinds;
  if (pr.diag_then_horiz()) {
    kinds.assign(pr.b, step_kind::diagonal);
    kinds.insert(kinds.end(), 2 * pr.a - pr.b, step_kind::horizontal);
  } else {
    kinds.assign(2 * pr.a, step_kind::diagonal);
    kinds.insert(kinds.end(), pr.b - 2 * pr.a, step_kind::vertical);
  }
  return kinds;
}

std::vector<step_kind> final_block_kinds(const admissible_pair& pr) {
  std::vector<step_kind> kinds;
  const int half = (pr.b - 1) / 2;
  if (pr.diag_then_horiz()) {
    kinds.assign(half, step_kind::diagonal);
    kinds.insert(kinds.end(), pr.a - half, step_kind::horizontal);
  } else {
    kinds.assign(half - pr.a, step_kind::vertical);
    kinds.insert(kinds.end(), pr.a, step_kind::diagonal);
  }
  return kinds;
}

namespace {

void advance(step_kind k, int64_t& s, int64_t& t) {
  switch (k) {
    case step_kind::horizontal: --s; break;
    case step_kind::diagonal: --s; --t; break;
    case step_kind::vertical: --t; break;
  }
}

// Composes the block's step matrices (left multiplication by each new
// step) and multiplies their scales.
void compose_block(const reduction_context& ctx, const std::vector<step_kind>& kinds, int64_t s,
                   int64_t t, int_mat& M, mpz_class& D) {
  const int n = 2 * ctx.c().g + 1;
  M = int_mat::identity(n);
  D = 1;
  int_mat step(n), next(n);
  for (step_kind k : kinds) {
    ctx.step_matrix_into(step, k, s, t);
    mul_into(next, step, M);
    std::swap(M, next);
    D *= ctx.step_scale(k, s, t);
    advance(k, s, t);
  }
}

}  // namespace

void reduce_to_zero_matrix(const reduction_context& ctx, const admissible_pair& pr, int64_t r,
                           int_mat& M, mpz_class& D) {
  assert(r >= 1);
  const int64_t s0 = static_cast<int64_t>(pr.a) * (2 * r + 1) - 1;
  const int64_t t0 = (static_cast<int64_t>(pr.b) * (2 * r + 1) - 1) / 2;
  compose_block(ctx, zero_block_kinds(pr), s0, t0, M, D);
  assert(D != 0);
}

void final_reduction_matrix(const reduction_context& ctx, const admissible_pair& pr, int_mat& M,
                            mpz_class& D) {
  compose_block(ctx, final_block_kinds(pr), pr.a - 1, (pr.b - 1) / 2, M, D);
  // Target is W_{-1,0}: the first coordinate of anything there is zero.
  for (int j = 0; j < M.dim(); ++j) assert(M.at(0, j) == 0);
  assert(D != 0);
}

differential_vector rational_reduce(const reduction_context& ctx, differential_vector omega,
                                    const std::vector<step_kind>& steps) {
  const int n = 2 * ctx.c().g + 1;
  if (static_cast<int>(omega.coords.size()) != n)
    fail(errc::illegal_step, "coordinate vector has wrong length");

  // Common-denominator walk: integer numerators against one denominator,
  // canonicalized only on exit. Equivalent to exact mpq at every step.
  std::vector<mpz_class> num(n);
  mpz_class den = 1;
  for (const auto& q : omega.coords) den = lcm(den, q.get_den());
  for (int i = 0; i < n; ++i) num[i] = omega.coords[i].get_num() * (den / omega.coords[i].get_den());

  int64_t s = omega.s, t = omega.t;
  int_mat step(n);
  std::vector<mpz_class> next(n);
  for (step_kind k : steps) {
    if (s < 0) fail(errc::illegal_step, "no reduction step applies at s = -1");
    if (k == step_kind::vertical && ctx.c().c0 == 0)
      fail(errc::illegal_step, "vertical step needs c0 != 0");
    ctx.step_matrix_into(step, k, s, t);
    for (int i = 0; i < n; ++i) {
      next[i] = 0;
      for (int j = 0; j < n; ++j)
        mpz_addmul(next[i].get_mpz_t(), step.at(i, j).get_mpz_t(), num[j].get_mpz_t());
    }
    std::swap(num, next);
    den *= ctx.step_scale(k, s, t);
    advance(k, s, t);
  }

  differential_vector out;
  out.s = s;
  out.t = t;
  out.coords.resize(n);
  for (int i = 0; i < n; ++i) {
    out.coords[i] = mpq_class(num[i], den);
    out.coords[i].canonicalize();
  }
  if (s == -1) assert(out.coords[0] == 0);
  return out;
}

}  // namespace hypzeta
