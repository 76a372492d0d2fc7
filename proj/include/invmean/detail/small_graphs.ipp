#pragma once

#include "invmean/errors.hpp"

namespace invmean {

template <typename Fn>
void for_each_small_graph(std::size_t n, Fn&& fn) {
  if (n == 0 || n > 4) throw ResourceError("small-graph enumeration supports 1 <= n <= 4");
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    fn(mask, Digraph::from_adjacency_mask(n, mask));
  }
}

}  // namespace invmean
