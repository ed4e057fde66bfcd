#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace congruent {

// Splits [begin, end) into `jobs` contiguous chunks and runs work(lo, hi) for
// each on its own thread. Returns the per-chunk results in range order, so
// callers that concatenate them see the same output for every job count.
template <typename Result, typename Work>
std::vector<Result> run_chunked(std::uint64_t begin, std::uint64_t end, unsigned jobs, Work work) {
  jobs = std::max(1u, jobs);
  const std::uint64_t span = end > begin ? end - begin : 0;
  if (jobs == 1 || span < 2) return {work(begin, end)};
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, span));

  std::vector<Result> results(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (unsigned i = 0; i < jobs; ++i) {
    const std::uint64_t lo = begin + span * i / jobs;
    const std::uint64_t hi = begin + span * (i + 1) / jobs;
    threads.emplace_back([&, i, lo, hi] {
      try {
        results[i] = work(lo, hi);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace congruent
