#include "minorforge_cli/mc_suites.hpp"

#include <array>
#include <cmath>
#include <numeric>

#include "minorforge/error.hpp"
#include "minorforge/matching_sampler.hpp"
#include "minorforge/rng.hpp"
#include "minorforge/trials.hpp"

namespace minorforge::cli {

namespace {

// Fraction of trials for which `hit(rng)` is true; trial i draws from
// stream i of the seed, so the result does not depend on the job count.
template <class Hit>
double frequency(const McOptions& opt, std::uint64_t stream_base, Hit&& hit) {
  std::vector<unsigned char> hits(static_cast<std::size_t>(opt.trials), 0);
  parallel_for(opt.trials, opt.jobs, [&](std::int64_t i) {
    Philox rng(opt.seed, stream_base + static_cast<std::uint64_t>(i));
    hits[static_cast<std::size_t>(i)] = hit(rng) ? 1 : 0;
  });
  const auto total = std::accumulate(hits.begin(), hits.end(), std::int64_t{0});
  return static_cast<double>(total) / static_cast<double>(opt.trials);
}

McRecord against_probability(std::string suite, std::string quantity, double estimate, double p,
                             const McOptions& opt) {
  McRecord r;
  r.suite = std::move(suite);
  r.quantity = std::move(quantity);
  r.estimate = estimate;
  r.bound = p;
  r.stderr_ = std::sqrt(p * (1 - p) / static_cast<double>(opt.trials));
  r.pass = std::abs(estimate - p) <= 4 * r.stderr_;
  r.x_size = opt.x_size;
  r.trials = opt.trials;
  return r;
}

void require_trials(const McOptions& opt) {
  if (opt.trials <= 0) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
}

}  // namespace

std::vector<std::string> suite_names() { return {"pairing-marginals", "pairing-joint", "chebyshev", "expectation-bound"}; }

std::vector<McRecord> pairing_marginals(const McOptions& opt) {
  require_trials(opt);
  if (opt.x_size < 2 || opt.x_size % 2 != 0) throw Error(ErrorCode::OddGroundSet, "|X| must be even and >= 2");
  const double est = frequency(opt, 0, [&](Philox& rng) {
    return sample_uniform_pairing(opt.x_size, rng).contains({0, 1});
  });
  return {against_probability("pairing-marginals", "Pr[{0,1} in M]", est, 1.0 / (opt.x_size - 1), opt)};
}

std::vector<McRecord> pairing_joint(const McOptions& opt) {
  require_trials(opt);
  if (opt.x_size < 4 || opt.x_size % 2 != 0) throw Error(ErrorCode::OddGroundSet, "|X| must be even and >= 4");
  const double est = frequency(opt, 0, [&](Philox& rng) {
    const Pairing m = sample_uniform_pairing(opt.x_size, rng);
    return m.contains({0, 1}) && m.contains({2, 3});
  });
  const double p = 1.0 / ((opt.x_size - 1) * (opt.x_size - 3));
  return {against_probability("pairing-joint", "Pr[{0,1},{2,3} in M]", est, p, opt)};
}

std::vector<McRecord> chebyshev(const McOptions& opt) {
  require_trials(opt);
  constexpr std::array<int, 2> sizes{20, 50};
  constexpr std::array<double, 2> densities{0.1, 0.25};
  constexpr std::array<int, 3> lambdas{2, 5, 10};
  std::vector<McRecord> out;
  std::uint64_t cell = 0;
  for (int x : sizes)
    for (double density : densities) {
      ++cell;
      // F: a uniform subset of the pairs of X with the requested density.
      std::vector<Edge> all;
      for (Vertex u = 0; u < x; ++u)
        for (Vertex v = u + 1; v < x; ++v) all.push_back({u, v});
      Philox frng(opt.seed, ~cell);
      shuffle(std::span<Edge>(all), frng);
      const auto f_size = static_cast<std::int64_t>(std::llround(density * static_cast<double>(all.size())));
      std::vector<Edge> f_edges(all.begin(), all.begin() + f_size);
      const Graph f(x, f_edges);

      std::vector<std::int64_t> hits(static_cast<std::size_t>(opt.trials));
      parallel_for(opt.trials, opt.jobs, [&](std::int64_t i) {
        Philox rng(opt.seed, (cell << 40) + static_cast<std::uint64_t>(i));
        hits[static_cast<std::size_t>(i)] = pairing_edge_count(sample_uniform_pairing(x, rng), f);
      });
      for (int lambda : lambdas) {
        // |c - |F|/(x-1)| >= lambda  <=>  |(x-1)c - |F|| >= lambda (x-1)
        std::int64_t tail = 0;
        for (std::int64_t c : hits)
          if (std::llabs((x - 1) * c - f_size) >= static_cast<std::int64_t>(lambda) * (x - 1)) ++tail;
        McRecord r;
        r.suite = "chebyshev";
        r.quantity = "Pr[deviation >= lambda]";
        r.estimate = static_cast<double>(tail) / static_cast<double>(opt.trials);
        r.stderr_ = std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(opt.trials));
        r.bound = chebyshev_rhs(x, lambda);
        r.pass = r.estimate <= r.bound;
        r.x_size = x;
        r.density = density;
        r.f_size = f_size;
        r.lambda = lambda;
        r.trials = opt.trials;
        out.push_back(r);
      }
    }
  return out;
}

std::vector<McRecord> expectation_bound(const McOptions& opt) {
  require_trials(opt);
  if (!opt.graph) throw Error(ErrorCode::InvalidArgument, "expectation-bound needs a graph");
  PipelineConfig cfg = opt.pipeline;
  cfg.mode = Mode::Strict;
  cfg.seed = opt.seed;
  const PreparedInstance inst = prepare_instance(*opt.graph, cfg);
  const std::vector<PipelineResult> runs = run_trials(inst, opt.trials, opt.jobs);
  const Certificate c = certify_batch(runs);
  McRecord r;
  r.suite = "expectation-bound";
  r.quantity = "mean missing edges";
  r.estimate = c.mean_missing;
  r.stderr_ = c.standard_error;
  r.bound = c.bound;
  r.pass = c.status == CertificateStatus::Pass;
  r.lambda = inst.preconditions.lambda.to_double();
  r.trials = opt.trials;
  return {r};
}

std::vector<McRecord> run_suite(std::string_view name, const McOptions& opt) {
  if (name == "pairing-marginals") return pairing_marginals(opt);
  if (name == "pairing-joint") return pairing_joint(opt);
  if (name == "chebyshev") return chebyshev(opt);
  if (name == "expectation-bound") return expectation_bound(opt);
  throw Error(ErrorCode::UnknownSuite, std::string(name));
}

}  // namespace minorforge::cli
