#include "minorforge/trials.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace minorforge {

void parallel_for(std::int64_t count, int jobs, const std::function<void(std::int64_t)>& body) {
  if (count <= 0) return;
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  jobs = static_cast<int>(std::min<std::int64_t>(jobs, count));
  if (jobs == 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      const std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

std::vector<PipelineResult> run_trials(const PreparedInstance& inst, std::int64_t count, int jobs) {
  std::vector<PipelineResult> out(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  parallel_for(count, jobs, [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] = run_trial(inst, static_cast<std::uint64_t>(i));
  });
  return out;
}

}  // namespace minorforge
