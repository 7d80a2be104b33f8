#include "hypzeta/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "hypzeta/errors.hpp"
#include "hypzeta/zmod.hpp"

#include "fp_poly.hpp"

namespace hypzeta {

namespace {

using fpx::mulmod;

// Prime factors of n (n <= 63 here), each once.
std::vector<int> prime_factors(int n) {
  std::vector<int> f;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

// Rabin: monic f of degree n is irreducible over F_p iff x^(p^n) = x mod f
// and gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n. At n <= 3 this is
// the exhaustive root test in disguise.
bool is_irreducible(const fpx::fp_poly& f, uint64_t p, int n) {
  const fpx::fp_poly x = {0, 1};
  auto x_pow_pk = [&](int k) {
    fpx::fp_poly r = x;
    for (int i = 0; i < k; ++i) r = fpx::powmod_poly(std::move(r), p, f, p);
    return r;
  };
  for (int q : prime_factors(n)) {
    fpx::fp_poly d = fpx::gcd(fpx::sub(x_pow_pk(n / q), x, p), f, p);
    if (d.size() != 1) return false;
  }
  return fpx::sub(x_pow_pk(n), x, p).empty();
}

}  // namespace

fq::fq(uint64_t p, int n) : p_(p), n_(n) {
  assert(p >= 3 && n >= 1);
  q_ = 1;
  for (int i = 0; i < n; ++i) q_ *= p;
  if (n == 1) return;

  // Candidates in odometer order, most significant coefficient first.
  mod_.assign(static_cast<std::size_t>(n), 0);
  uint64_t limit = q_;
  for (uint64_t idx = 0; idx < limit; ++idx) {
    uint64_t v = idx;
    fpx::fp_poly f(static_cast<std::size_t>(n) + 1, 0);
    f[static_cast<std::size_t>(n)] = 1;
    for (int i = 0; i < n; ++i) {
      f[static_cast<std::size_t>(i)] = v % p;
      v /= p;
    }
    if (is_irreducible(f, p, n)) {
      for (int i = 0; i < n; ++i) mod_[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)];
      return;
    }
  }
  assert(false && "no irreducible modulus found");
}

fq::elem fq::one() const {
  elem e = zero();
  e[0] = 1;
  return e;
}

fq::elem fq::from_index(uint64_t idx) const {
  elem e(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    e[static_cast<std::size_t>(i)] = idx % p_;
    idx /= p_;
  }
  return e;
}

bool fq::is_zero(const elem& a) const {
  for (uint64_t c : a)
    if (c) return false;
  return true;
}

fq::elem fq::add(const elem& a, const elem& b) const {
  elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

fq::elem fq::sub(const elem& a, const elem& b) const {
  elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

fq::elem fq::mul(const elem& a, const elem& b) const {
  if (n_ == 1) return {mulmod(a[0], b[0], p_)};
  const std::size_t n = static_cast<std::size_t>(n_);
  std::vector<uint64_t> t(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < n; ++j)
      t[i + j] = static_cast<uint64_t>(
          (static_cast<unsigned __int128>(a[i]) * b[j] + t[i + j]) % p_);
  }
  // x^n = -(m_0 + ... + m_{n-1} x^{n-1})
  for (std::size_t k = 2 * n - 2; k >= n; --k) {
    uint64_t c = t[k];
    if (c) {
      for (std::size_t i = 0; i < n; ++i) {
        uint64_t s = mulmod(c, mod_[i], p_);
        t[k - n + i] = (t[k - n + i] + p_ - s) % p_;
      }
    }
    if (k == n) break;
  }
  t.resize(n);
  return t;
}

fq::elem fq::pow(elem a, uint64_t e) const {
  elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int fq::chi(const elem& a) const {
  if (is_zero(a)) return 0;
  elem r = pow(a, (q_ - 1) / 2);
  if (r == one()) return 1;
  assert(r[0] == p_ - 1);
  for (std::size_t i = 1; i < r.size(); ++i) assert(r[i] == 0);
  return -1;
}

int64_t point_count(const curve& c, uint64_t p, int n, int budget_bits) {
  assert(p >= 3 && p % 2 == 1);
  assert(zmod(c.delta, p) != 0);
  mpz_class q = pow_ui(mpz_class(static_cast<unsigned long>(p)), static_cast<unsigned long>(n));
  const int bits = std::min(budget_bits, 62);  // field order must stay in a word
  if (q > pow_ui(mpz_class(2), static_cast<unsigned long>(bits)))
    fail(errc::budget_exceeded,
         "p^n = " + q.get_str() + " exceeds the 2^" + std::to_string(bits) + " budget");

  fq F(p, n);
  std::vector<fq::elem> qc;  // curve coefficients embedded into F_q
  qc.reserve(c.Q.coeffs().size());
  for (const auto& z : c.Q.coeffs()) {
    fq::elem e = F.zero();
    e[0] = zmod(z, p).get_ui();
    qc.push_back(std::move(e));
  }

  int64_t count = 1;  // the point at infinity
  const uint64_t order = F.order();
  for (uint64_t idx = 0; idx < order; ++idx) {
    fq::elem x = F.from_index(idx);
    fq::elem val = qc.back();
    for (std::size_t i = qc.size() - 1; i-- > 0;) val = F.add(F.mul(val, x), qc[i]);
    count += 1 + F.chi(val);
  }
  return count;
}

lpoly_record lpoly_from_counts(uint64_t p, int g, const std::vector<int64_t>& counts) {
  assert(static_cast<int>(counts.size()) >= g);
  const mpz_class pz(static_cast<unsigned long>(p));

  std::vector<mpz_class> s(static_cast<std::size_t>(g) + 1);
  for (int k = 1; k <= g; ++k)
    s[static_cast<std::size_t>(k)] = pow_ui(pz, static_cast<unsigned long>(k)) + 1 -
                                     counts[static_cast<std::size_t>(k - 1)];

  std::vector<mpz_class> e(static_cast<std::size_t>(g) + 1);
  e[0] = 1;
  for (int k = 1; k <= g; ++k) {
    mpz_class sum = 0;
    for (int i = 1; i <= k; ++i) {
      mpz_class term = e[static_cast<std::size_t>(k - i)] * s[static_cast<std::size_t>(i)];
      if (i % 2 == 0) term = -term;
      sum += term;
    }
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), mpz_class(k).get_mpz_t());
    if (rem != 0)
      fail(errc::non_integral_newton, "Newton identity non-integral at k=" + std::to_string(k) +
                                          ", p=" + std::to_string(p));
    e[static_cast<std::size_t>(k)] = q;
  }

  lpoly_record rec;
  rec.p = p;
  rec.status = lpoly_status::fallback;
  rec.a.assign(static_cast<std::size_t>(2 * g) + 1, 0);
  rec.a[0] = 1;
  for (int i = 1; i <= g; ++i) {
    mpz_class ai = e[static_cast<std::size_t>(i)];
    if (i % 2 != 0) ai = -ai;
    rec.a[static_cast<std::size_t>(i)] = ai;
  }
  for (int i = 0; i < g; ++i)
    rec.a[static_cast<std::size_t>(2 * g - i)] =
        pow_ui(pz, static_cast<unsigned long>(g - i)) * rec.a[static_cast<std::size_t>(i)];
  validate_record(rec, g);
  return rec;
}

int_mat direct_mod_product(const std::vector<int_mat>& M, uint64_t p, std::size_t k_max,
                           int lambda) {
  assert(!M.empty() && k_max < M.size());
  const mpz_class mod = pow_ui(mpz_class(static_cast<unsigned long>(p)),
                               static_cast<unsigned long>(lambda));
  int_mat acc = M[0];
  acc.reduce_mod(mod);
  for (std::size_t k = 1; k <= k_max; ++k) acc = mul_mod(acc, M[k], mod);
  return acc;
}

std::vector<mpq_class> exact_U(const reduction_context& rctx, const admissible_pair& pr,
                               uint64_t p, uint64_t max_p) {
  if (p > max_p)
    fail(errc::budget_exceeded, "p = " + std::to_string(p) + " exceeds the exact-rational cap " +
                                    std::to_string(max_p));
  const int n = 2 * rctx.c().g + 1;

  std::vector<step_kind> kinds;
  const auto block = zero_block_kinds(pr);
  for (uint64_t r = (p - 1) / 2; r >= 1; --r) kinds.insert(kinds.end(), block.begin(), block.end());
  const auto fin = final_block_kinds(pr);
  kinds.insert(kinds.end(), fin.begin(), fin.end());

  differential_vector omega;
  omega.s = static_cast<int64_t>(pr.a) * static_cast<int64_t>(p) - 1;
  omega.t = (static_cast<int64_t>(pr.b) * static_cast<int64_t>(p) - 1) / 2;
  omega.coords.assign(static_cast<std::size_t>(n), mpq_class(0));
  omega.coords[0] = 1;

  differential_vector res = rational_reduce(rctx, std::move(omega), kinds);
  assert(res.s == -1 && res.t == 0);
  assert(res.coords[0] == 0);
  return std::move(res.coords);
}

lpoly_record fallback_lpoly(const curve& c, uint64_t p, int budget_bits) {
  std::vector<int64_t> counts;
  counts.reserve(static_cast<std::size_t>(c.g));
  for (int n = 1; n <= c.g; ++n) counts.push_back(point_count(c, p, n, budget_bits));
  return lpoly_from_counts(p, c.g, counts);
}

}  // namespace hypzeta
