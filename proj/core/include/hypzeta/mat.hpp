#pragma once

#include <gmpxx.h>

#include <cassert>
#include <vector>

namespace hypzeta {

// Square matrix over arbitrary-precision integers, row-major.
class int_mat {
 public:
  int_mat() = default;
  explicit int_mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static int_mat identity(int n) {
    int_mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int dim() const { return n_; }
  mpz_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  // Maximum over columns of the column's L1 norm.
  mpz_class l1_column_norm() const;

  mpz_class trace() const;

  // Entrywise canonical reduction into [0, m).
  void reduce_mod(const mpz_class& m);

  // Total bit size of the entries (storage estimate for tree accounting).
  std::size_t bit_size() const;

  bool operator==(const int_mat&) const = default;

 private:
  int n_ = 0;
  std::vector<mpz_class> a_;
};

int_mat operator*(const int_mat& a, const int_mat& b);
int_mat mul_mod(const int_mat& a, const int_mat& b, const mpz_class& m);

// out = a * b, reusing out's entry allocations; out must not alias a or b.
void mul_into(int_mat& out, const int_mat& a, const int_mat& b);

}  // namespace hypzeta
