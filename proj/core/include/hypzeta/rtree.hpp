#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypzeta/mat.hpp"

namespace hypzeta {

// Ascending list of primes < limit.
std::vector<uint64_t> sieve_primes(uint64_t limit);

// Size and precision parameters of one tree run; tau_bound is an
// informational bit bound on the inputs and not used for control flow.
struct tree_config {
  uint64_t B = 0;
  int n = 0;
  int lambda = 0;
  std::size_t tau_bound = 0;
};

// Parameters a tree run over this input would use (after even-padding).
tree_config describe_tree(const std::vector<int_mat>& M, int lambda);

// Index interval U_{i,j} = [ceil(j*B/2^i), ceil((j+1)*B/2^i)), half open.
struct tree_interval {
  uint64_t lo = 0;
  uint64_t hi = 0;
};
tree_interval u_interval(uint64_t B, int level, uint64_t node);

// Accumulating remainder tree: given M_0, ..., M_{B-1}, returns
//   p -> M_0 * M_1 * ... * M_{(p-1)/2}  (mod p^lambda)
// for odd primes p. An odd-length input is padded with one identity
// matrix (under the convention M_B = I), after which every odd prime
// p < 2B is addressable. `primes` restricts the output to a subset of
// those (defaults to all); entries are canonical residues in [0, p^lambda).
std::map<uint64_t, int_mat> accumulating_remainder_tree(std::vector<int_mat> M, int lambda,
                                                        const std::vector<uint64_t>* primes = nullptr,
                                                        int threads = 1);

// Text dump of the index-interval layout, one line per level.
std::string tree_shape_string(uint64_t B);

}  // namespace hypzeta
