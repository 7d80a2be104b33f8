#include "hypzeta/mat.hpp"

#include "hypzeta/errors.hpp"
#include "hypzeta/zmod.hpp"

namespace hypzeta {

mpz_class int_mat::l1_column_norm() const {
  mpz_class best = 0;
  for (int j = 0; j < n_; ++j) {
    mpz_class s = 0;
    for (int i = 0; i < n_; ++i) s += abs(at(i, j));
    if (s > best) best = s;
  }
  return best;
}

mpz_class int_mat::trace() const {
  mpz_class s = 0;
  for (int i = 0; i < n_; ++i) s += at(i, i);
  return s;
}

void int_mat::reduce_mod(const mpz_class& m) {
  for (auto& x : a_) x = zmod(x, m);
}

std::size_t int_mat::bit_size() const {
  std::size_t bits = 0;
  for (const auto& x : a_) bits += mpz_sizeinbase(x.get_mpz_t(), 2);
  return bits;
}

int_mat operator*(const int_mat& a, const int_mat& b) {
  int_mat c;
  mul_into(c, a, b);
  return c;
}

void mul_into(int_mat& out, const int_mat& a, const int_mat& b) {
  if (a.dim() != b.dim()) fail(errc::dimension_mismatch, "matrix dimensions differ");
  const int n = a.dim();
  if (out.dim() != n) {
    out = int_mat(n);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.at(i, j) = 0;
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        mpz_addmul(out.at(i, j).get_mpz_t(), aik.get_mpz_t(), b.at(k, j).get_mpz_t());
    }
}

int_mat mul_mod(const int_mat& a, const int_mat& b, const mpz_class& m) {
  int_mat c = a * b;
  c.reduce_mod(m);
  return c;
}

}  // namespace hypzeta
