#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "minorforge/pipeline.hpp"

namespace minorforge {

/// Calls body(i) for i in [0, count) on up to `jobs` threads (jobs <= 0
/// means hardware concurrency). The first exception thrown is rethrown
/// after all workers stop.
void parallel_for(std::int64_t count, int jobs, const std::function<void(std::int64_t)>& body);

/// Trials 0..count-1 of a prepared instance, in trial order regardless of
/// the number of jobs.
std::vector<PipelineResult> run_trials(const PreparedInstance& inst, std::int64_t count, int jobs = 1);

}  // namespace minorforge
