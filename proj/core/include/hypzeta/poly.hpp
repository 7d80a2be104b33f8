#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hypzeta {

// Integer polynomial, coefficients ascending by degree (index i holds the
// coefficient of x^i). The zero polynomial is the empty coefficient list;
// otherwise the leading coefficient is nonzero.
class poly {
 public:
  poly() = default;
  explicit poly(std::vector<mpz_class> coeffs);
  poly(std::initializer_list<long> coeffs);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Coefficient of x^i; zero beyond the degree.
  const mpz_class& coeff(std::size_t i) const;
  const mpz_class& leading() const;

  poly derivative() const;
  // f * x^k
  poly shifted(unsigned k) const;
  mpz_class eval(const mpz_class& x) const;

  friend poly operator+(const poly& a, const poly& b);
  friend poly operator-(const poly& a, const poly& b);
  friend poly operator*(const poly& a, const poly& b);
  friend poly operator*(const mpz_class& c, const poly& a);
  bool operator==(const poly&) const = default;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Maximum absolute value of the coefficients; 0 for the zero polynomial.
mpz_class poly_norm(const poly& f);

}  // namespace hypzeta
