#include "hypzeta/poly.hpp"

#include <algorithm>

namespace hypzeta {

namespace {
const mpz_class kZero = 0;
}

poly::poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

poly::poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const mpz_class& poly::leading() const {
  return c_.empty() ? kZero : c_.back();
}

poly poly::derivative() const {
  if (c_.size() <= 1) return poly{};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mpz_class(i) * c_[i];
  return poly(std::move(d));
}

poly poly::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> d(c_.size() + k);
  std::copy(c_.begin(), c_.end(), d.begin() + k);
  return poly(std::move(d));
}

mpz_class poly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= x;
    r += c_[i];
  }
  return r;
}

poly operator+(const poly& a, const poly& b) {
  std::vector<mpz_class> d(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) + b.coeff(i);
  return poly(std::move(d));
}

poly operator-(const poly& a, const poly& b) {
  std::vector<mpz_class> d(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) - b.coeff(i);
  return poly(std::move(d));
}

poly operator*(const poly& a, const poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> d(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(d[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  return poly(std::move(d));
}

poly operator*(const mpz_class& c, const poly& a) {
  std::vector<mpz_class> d(a.c_.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = c * a.c_[i];
  return poly(std::move(d));
}

mpz_class poly_norm(const poly& f) {
  mpz_class n = 0;
  for (const auto& c : f.coeffs()) {
    mpz_class a = abs(c);
    if (a > n) n = a;
  }
  return n;
}

}  // namespace hypzeta
