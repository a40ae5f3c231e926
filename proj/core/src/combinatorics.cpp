#include "hyperham/combinatorics.hpp"

#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperham/errors.hpp"

namespace hyperham {

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  boost::multiprecision::uint128_t acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

SubsetRanker::SubsetRanker(int n, int r) : n_(n), r_(r), count_(binomial(n, r)) {
  if (n < 0 || n > kMaxVertices || r < 0 || r > n) throw InvalidInput("SubsetRanker: bad (n, r)");
  table_.resize(static_cast<std::size_t>(n) * (r + 1));
  for (int v = 0; v < n; ++v)
    for (int j = 0; j <= r; ++j) table_[static_cast<std::size_t>(v) * (r + 1) + j] = binomial(v, j);
}

}  // namespace hyperham
