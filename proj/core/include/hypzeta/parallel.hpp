#pragma once

#include <cstddef>
#include <functional>

namespace hypzeta {

// Runs fn(i) for i in [0, n). With threads > 1 the calls are distributed
// over that many workers; every fn(i) must write only to slots owned by
// index i, which keeps results identical for any thread count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace hypzeta
