#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace hyperdet {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Splits [0, total) into contiguous chunks, reduces each chunk on its own
/// thread, and merges partial results in ascending chunk order. With exact
/// scalars the result is identical to the serial evaluation.
template <class T, class ChunkFn, class MergeFn>
T parallel_reduce(std::uint64_t total, T init, unsigned threads, ChunkFn&& chunk_fn,
                  MergeFn&& merge_fn) {
  threads = resolve_threads(threads);
  if (total == 0) return init;
  if (threads <= 1 || total < 4 * std::uint64_t{threads}) {
    return merge_fn(std::move(init), chunk_fn(std::uint64_t{0}, total));
  }
  const std::uint64_t nchunks = std::min<std::uint64_t>(threads, total);
  std::vector<T> partial(static_cast<size_t>(nchunks), init);
  std::vector<std::exception_ptr> errors(static_cast<size_t>(nchunks));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nchunks));
  const std::uint64_t step = total / nchunks;
  const std::uint64_t extra = total % nchunks;
  std::uint64_t begin = 0;
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    const std::uint64_t end = begin + step + (c < extra ? 1 : 0);
    pool.emplace_back([&, c, begin, end] {
      try {
        partial[static_cast<size_t>(c)] = chunk_fn(begin, end);
      } catch (...) {
        errors[static_cast<size_t>(c)] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  T acc = std::move(init);
  for (auto& p : partial) acc = merge_fn(std::move(acc), std::move(p));
  return acc;
}

}  // namespace hyperdet
