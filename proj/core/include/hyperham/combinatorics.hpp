#pragma once

#include <cstdint>
#include <vector>

#include "hyperham/vertex_set.hpp"

namespace hyperham {

/// C(n, r) for 0 <= n <= 64. Saturates at UINT64_MAX (never reached for n <= 64).
std::uint64_t binomial(int n, int r);

/**
 * Dense colex ranking of the r-subsets of [0, n).
 *
 * rank(S) = sum_i C(s_i, i+1) over the sorted members s_0 < s_1 < ...,
 * which is also the position of S in increasing-mask order.
 */
class SubsetRanker {
 public:
  SubsetRanker(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  std::uint64_t count() const { return count_; }

  std::uint64_t rank(VertexSet s) const {
    std::uint64_t out = 0;
    int i = 0;
    for (int v : s) out += table_[static_cast<std::size_t>(v) * (r_ + 1) + (++i)];
    return out;
  }

 private:
  int n_;
  int r_;
  std::uint64_t count_;
  std::vector<std::uint64_t> table_;  // table_[v*(r+1)+j] = C(v, j)
};

}  // namespace hyperham
