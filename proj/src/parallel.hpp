#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace causal::detail {

/// Splits [0, n) into at most `jobs` contiguous chunks and runs
/// fn(chunk, begin, end) for each, one thread per chunk. Chunk boundaries
/// depend only on n and jobs.
template <typename Fn>
std::size_t for_each_chunk(std::size_t n, unsigned jobs, Fn&& fn) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  const std::size_t step = (n + chunks - 1) / std::max<std::size_t>(chunks, 1);
  if (chunks == 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = std::min(n, c * step);
    const std::size_t end = std::min(n, begin + step);
    workers.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
  return chunks;
}

}  // namespace causal::detail
