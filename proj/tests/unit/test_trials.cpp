#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "minorforge/generators.hpp"
#include "minorforge/trials.hpp"

using namespace minorforge;

TEST_CASE("parallel_for visits every index once") {
  for (int jobs : {1, 3, 0}) {
    std::vector<std::atomic<int>> hits(257);
    parallel_for(257, jobs, [&](std::int64_t i) { ++hits[static_cast<std::size_t>(i)]; });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
  parallel_for(0, 4, [](std::int64_t) { FAIL("called"); });
}

TEST_CASE("exceptions propagate") {
  for (int jobs : {1, 4}) {
    CHECK_THROWS_AS(parallel_for(100, jobs,
                                 [](std::int64_t i) {
                                   if (i == 37) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
  }
}

TEST_CASE("results do not depend on the job count") {
  Philox rng(21, 0);
  PipelineConfig cfg;
  cfg.mode = Mode::Advisory;
  cfg.seed = 21;
  const PreparedInstance inst = prepare_instance(gen_tfp_complement(120, rng), cfg);
  const auto serial = run_trials(inst, 6, 1);
  const auto threaded = run_trials(inst, 6, 3);
  REQUIRE(serial.size() == 6);
  REQUIRE(threaded.size() == 6);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].trial == i);
    CHECK(threaded[i].trial == i);
    CHECK(serial[i].h == threaded[i].h);
    CHECK(serial[i].m_star == threaded[i].m_star);
    CHECK(serial[i].missing_edges == threaded[i].missing_edges);
  }
}
