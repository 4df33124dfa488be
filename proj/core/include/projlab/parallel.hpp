#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace projlab {

// Calls body(worker, begin, end) on contiguous blocks; worker w always gets the same block.
template <class Body>
void parallel_blocks(std::size_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  std::vector<std::size_t> starts(workers + 1, 0);
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t share = count / workers + (w < count % workers ? 1 : 0);
    starts[w + 1] = starts[w] + share;
  }
  if (workers == 1) {
    body(0u, starts[0], starts[1]);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w, starts[w], starts[w + 1]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace projlab
