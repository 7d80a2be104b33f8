#pragma once

// Internal helpers: dense polynomials over F_p with word-sized p,
// coefficients ascending and trimmed. Shared by the Bezout CRT solver and
// the finite-field oracle; not part of the installed API.

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

namespace hypzeta::fpx {

using fp_poly = std::vector<uint64_t>;

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

inline void trim(fp_poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// (q, r) with a = q*b + r, deg r < deg b.
inline std::pair<fp_poly, fp_poly> divrem(fp_poly a, const fp_poly& b, uint64_t p) {
  assert(!b.empty());
  if (a.size() < b.size()) return {fp_poly{}, std::move(a)};
  fp_poly q(a.size() - b.size() + 1, 0);
  uint64_t lc_inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    std::size_t off = a.size() - b.size();
    uint64_t c = mulmod(a.back(), lc_inv, p);
    q[off] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      uint64_t s = mulmod(c, b[i], p);
      a[off + i] = (a[off + i] + p - s) % p;
    }
    trim(a);  // leading coefficient cancelled exactly
    if (a.empty()) break;
  }
  return {std::move(q), std::move(a)};
}

inline fp_poly mod(fp_poly a, const fp_poly& b, uint64_t p) {
  return divrem(std::move(a), b, p).second;
}

inline fp_poly mul(const fp_poly& a, const fp_poly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  fp_poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint64_t>(
          (static_cast<unsigned __int128>(a[i]) * b[j] + r[i + j]) % p);
  trim(r);
  return r;
}

inline fp_poly sub(fp_poly a, const fp_poly& b, uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline fp_poly scale(fp_poly a, uint64_t c, uint64_t p) {
  for (auto& x : a) x = mulmod(x, c, p);
  trim(a);
  return a;
}

// u*a + v*b = g with g the monic gcd.
inline void xgcd(const fp_poly& a, const fp_poly& b, uint64_t p, fp_poly& g, fp_poly& u,
                 fp_poly& v) {
  fp_poly r0 = a, r1 = b;
  fp_poly u0 = {1}, u1 = {};
  fp_poly v0 = {}, v1 = {1};
  while (!r1.empty()) {
    auto [q, r2] = divrem(std::move(r0), r1, p);
    fp_poly u2 = sub(std::move(u0), mul(q, u1, p), p);
    fp_poly v2 = sub(std::move(v0), mul(q, v1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  assert(!r0.empty());
  uint64_t lc_inv = invmod(r0.back(), p);
  g = scale(std::move(r0), lc_inv, p);
  u = scale(std::move(u0), lc_inv, p);
  v = scale(std::move(v0), lc_inv, p);
}

inline fp_poly gcd(fp_poly a, fp_poly b, uint64_t p) {
  while (!b.empty()) {
    fp_poly r = mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(std::move(a), invmod(a.back(), p), p);
  return a;
}

// base^e mod f by square-and-multiply.
inline fp_poly powmod_poly(fp_poly base, uint64_t e, const fp_poly& f, uint64_t p) {
  fp_poly r = {1};
  base = mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = mod(mul(r, base, p), f, p);
    base = mod(mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

}  // namespace hypzeta::fpx
