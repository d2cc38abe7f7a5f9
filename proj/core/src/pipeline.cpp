#include "minorforge/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "minorforge/error.hpp"
#include "minorforge/matching_sampler.hpp"
#include "minorforge/rng.hpp"

namespace minorforge {

LambdaPolicy LambdaPolicy::parse(std::string_view text) {
  if (text == "n23") return {};
  if (text == "clamped") return {Kind::Clamped, {}};
  const Rational r = Rational::parse(text);
  if (r <= Rational(0)) throw Error(ErrorCode::InvalidArgument, "explicit lambda must be positive");
  return {Kind::Explicit, r};
}

std::string LambdaPolicy::str() const {
  switch (kind) {
    case Kind::N23: return "n23";
    case Kind::Clamped: return "clamped";
    case Kind::Explicit: return value.str();
  }
  return "?";
}

Rational LambdaPolicy::resolve(std::int64_t n, std::int64_t k) const {
  if (kind == Kind::Explicit) return value;
  const double nd = static_cast<double>(n);
  const Rational n23 = Rational::floor_of(std::cbrt(nd * nd));
  if (kind == Kind::N23) return n23;
  return std::min(n23, Rational(k - 1, 2));
}

std::string_view to_string(Mode m) noexcept { return m == Mode::Strict ? "strict" : "advisory"; }

std::string_view to_string(CertificateStatus s) noexcept {
  switch (s) {
    case CertificateStatus::Sample: return "sample";
    case CertificateStatus::Pass: return "PASS";
    case CertificateStatus::Fail: return "FAIL";
  }
  return "?";
}

bool PreconditionReport::strict_ok() const { return failed_flags().empty(); }

std::vector<std::string> PreconditionReport::failed_flags() const {
  std::vector<std::string> out;
  if (!even_order_at_least_6) out.emplace_back("|V| even and >= 6");
  if (!alpha_le_2) out.emplace_back("alpha <= 2");
  if (!omega_exact) out.emplace_back("omega proven");
  if (!omega_below_quarter) out.emplace_back("omega < |V|/4");
  if (!lambda_positive) out.emplace_back("lambda > 0");
  if (!lambda_at_most_half_k_minus_1) out.emplace_back("lambda <= (k-1)/2");
  if (!lambda_squared_above_2n) out.emplace_back("lambda^2 > 2n");
  if (!n_minus_2k_nonnegative) out.emplace_back("n - 2k >= 0");
  if (!non_degree_at_most_k) out.emplace_back("non-degree <= k");
  return out;
}

namespace {

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

struct CliqueChoice {
  VertexSet z;
  bool exact = false;
};

CliqueChoice choose_z(const Graph& g, const PipelineConfig& cfg) {
  CliqueSearchResult r = find_max_clique(g, cfg.clique);
  return {std::move(r.clique), r.proven_maximum && r.lex_least};
}

PreconditionReport evaluate(const Graph& g, const CliqueChoice& z, bool alpha2, const PipelineConfig& cfg) {
  PreconditionReport p;
  const int nv = g.vertex_count();
  p.vertex_count = nv;
  p.n = nv / 2;
  p.k = z.z.size();
  p.x = nv - p.k - ((nv - p.k) % 2);
  p.even_order_at_least_6 = nv % 2 == 0 && nv >= 6;
  p.alpha_le_2 = alpha2;
  p.omega_exact = z.exact;
  p.omega_below_quarter = 4 * p.k < nv;
  p.n_minus_2k_nonnegative = p.n - 2 * p.k >= 0;
  for (Vertex v = 0; v < nv; ++v) p.max_non_degree = std::max(p.max_non_degree, g.non_degree(v));
  p.non_degree_at_most_k = p.max_non_degree <= p.k;

  p.lambda = cfg.lambda.resolve(p.n, p.k);
  p.lambda_positive = p.lambda > Rational(0);
  p.lambda_at_most_half_k_minus_1 = p.lambda <= Rational(p.k - 1, 2);
  // lambda^2 > 2n  <=>  num^2 > 2n den^2
  const Int128 num = p.lambda.num();
  const Int128 den = p.lambda.den();
  p.lambda_squared_above_2n = num * num > static_cast<Int128>(2 * p.n) * den * den;
  const double l = p.lambda.to_double();
  p.q = l != 0 ? 1.0 - 2.0 * static_cast<double>(p.n) / (l * l) : -INFINITY;
  return p;
}

}  // namespace

PreconditionReport preconditions(const Graph& g, const PipelineConfig& cfg) {
  return evaluate(g, choose_z(g, cfg), is_alpha_le_2(g), cfg);
}

GPrime choose_g_prime(const Graph& g, const VertexSet& z) {
  GPrime out;
  VertexSet keep = z.complement();
  if (keep.size() % 2 != 0) {
    out.deleted_vertex = keep.first();
    keep.erase(*out.deleted_vertex);
  }
  out.graph = induced_subgraph(g, keep);
  return out;
}

std::vector<Triple> enumerate_bad_triples(const Graph& g, const VertexSet& z) {
  if (!is_clique(g, z)) throw Error(ErrorCode::NotAClique, "Z is not a clique");
  std::vector<Triple> out;
  for (Vertex c : z) {
    const VertexSet non = non_neighbours(g, c) - z;
    for (Vertex v : non)
      for (Vertex w = non.next(v + 1); w >= 0; w = non.next(w + 1)) out.push_back({c, v, w});
  }
  return out;
}

namespace {

// For each edge uw with u < v, pairs {v, y} (v < y) of common
// non-neighbours of u and w that are adjacent; the 4-set is then bad, and
// u < v makes uw the edge holding its smallest vertex, so each bad
// quadruple is visited once.
template <class Visit>
void for_each_bad_quadruple(const Graph& g, Visit&& visit) {
  const int n = g.vertex_count();
  std::vector<VertexSet> non;
  non.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) non.push_back(non_neighbours(g, v));
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet& nb = g.neighbours(u);
    for (Vertex w = nb.next(u + 1); w >= 0; w = nb.next(w + 1)) {
      const VertexSet common = non[static_cast<std::size_t>(u)] & non[static_cast<std::size_t>(w)];
      for (Vertex v = common.next(u + 1); v >= 0; v = common.next(v + 1)) {
        const VertexSet& nv = g.neighbours(v);
        for (Vertex y = common.next(v + 1); y >= 0; y = common.next(y + 1))
          if (nv.contains(y)) visit(u, w, v, y);
      }
    }
  }
}

}  // namespace

std::vector<Quadruple> enumerate_bad_quadruples(const Graph& g) {
  std::vector<Quadruple> out;
  for_each_bad_quadruple(g, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
    Quadruple q{a, b, c, d};
    std::sort(q.begin(), q.end());
    out.push_back(q);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_bad_quadruples(const Graph& g) {
  std::int64_t count = 0;
  for_each_bad_quadruple(g, [&](Vertex, Vertex, Vertex, Vertex) { ++count; });
  return count;
}

PreparedInstance prepare_instance(Graph g, const PipelineConfig& cfg) {
  const bool alpha2 = is_alpha_le_2(g);
  if (!alpha2) throw Error(ErrorCode::AlphaTooLarge, "graph has an independent set of size 3");
  const int nv = g.vertex_count();
  if (nv % 2 != 0 || nv < 6)
    throw Error(ErrorCode::Ineligible, "need an even number of vertices, at least 6 (got " + std::to_string(nv) + ")");

  PreparedInstance inst;
  CliqueChoice z = choose_z(g, cfg);
  inst.preconditions = evaluate(g, z, alpha2, cfg);
  const PreconditionReport& pre = inst.preconditions;
  if (!pre.omega_below_quarter)
    throw Error(ErrorCode::Ineligible, "clique of size " + std::to_string(pre.k) + " >= |V|/4 = " +
                                           std::to_string(nv / 4.0) +
                                           "; such graphs have a complete minor on |V|/2 vertices, which is not "
                                           "constructed here");
  if (!pre.lambda_positive) throw Error(ErrorCode::InvalidHypotheses, "lambda resolves to " + pre.lambda.str());
  if (cfg.mode == Mode::Strict && !pre.strict_ok()) {
    std::string msg = "strict mode preconditions failed:";
    for (const auto& f : pre.failed_flags()) msg += " [" + f + "]";
    throw Error(ErrorCode::Ineligible, msg);
  }

  inst.z = std::move(z.z);
  inst.stats = clique_stats(g, inst.z);
  GPrime gp = choose_g_prime(g, inst.z);
  inst.g_prime = std::move(gp.graph);
  inst.deleted_vertex = gp.deleted_vertex;
  inst.bound = make_bound_report(pre.n, pre.k, inst.stats.a, inst.stats.b, pre.lambda.to_double());
  inst.total_bad_triples = static_cast<std::int64_t>(enumerate_bad_triples(g, inst.z).size());
  inst.total_bad_quadruples = count_bad_quadruples(inst.g_prime.graph);
  inst.g = std::move(g);
  inst.config = cfg;
  return inst;
}

PipelineResult run_trial(const PreparedInstance& inst, std::uint64_t trial) {
  const Graph& g = inst.g;
  const PreconditionReport& pre = inst.preconditions;
  const std::int64_t n = pre.n;
  const std::int64_t k = pre.k;
  const Graph& gp = inst.g_prime.graph;
  const auto& to_host = inst.g_prime.to_host;

  PipelineResult r;
  r.seed = inst.config.seed;
  r.trial = trial;
  r.mode = inst.config.mode;
  r.deleted_vertex = inst.deleted_vertex;
  r.bound = inst.bound;
  r.preconditions = pre;

  Philox rng(inst.config.seed, trial);
  // Advisory runs need the edge count directly; strict runs get it from
  // the event.
  const std::int64_t min_edges = inst.config.mode == Mode::Advisory ? n - 2 * k : 0;
  ConditionedSample sample = sample_conditioned(gp, pre.lambda, inst.config.max_rejection_tries, rng, min_edges);
  r.rejection_tries = sample.tries;
  r.pairing_edges = pairing_edge_count(sample.pairing, gp);
  const std::vector<Edge> local = subsample_matching(sample.pairing, gp, n - 2 * k, rng);
  for (const Edge& e : local) {
    const Vertex a = to_host[static_cast<std::size_t>(e.u)];
    const Vertex b = to_host[static_cast<std::size_t>(e.v)];
    r.m_star.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(r.m_star.begin(), r.m_star.end());

  VertexSet s = inst.z.complement();
  for (const Edge& e : r.m_star) {
    s.erase(e.u);
    s.erase(e.v);
  }
  r.s_size = s.size();
  if (r.s_size != 3 * k)
    throw Error(ErrorCode::SeagullFailure, "|S| = " + std::to_string(r.s_size) + ", expected " + std::to_string(3 * k));

  const InducedSubgraph gs = induced_subgraph(g, s);
  const std::optional<SeagullPartition> packing = seagull_partition(gs.graph, inst.config.packing);
  if (!packing)
    throw Error(ErrorCode::SeagullFailure,
                std::string("no seagull partition of the leftover vertices") +
                    (pre.omega_exact ? " (defect: the clique bound guarantees one)" : " (clique size unproven)"));
  for (const Seagull& t : packing->triples) {
    const Vertex a = gs.to_host[static_cast<std::size_t>(t.a)];
    const Vertex b = gs.to_host[static_cast<std::size_t>(t.b)];
    r.seagulls.triples.push_back({std::min(a, b), gs.to_host[static_cast<std::size_t>(t.mid)], std::max(a, b)});
  }
  std::sort(r.seagulls.triples.begin(), r.seagulls.triples.end());

  const int nv = g.vertex_count();
  for (Vertex v : inst.z) r.decomposition.parts.push_back(VertexSet(nv, {v}));
  for (const Edge& e : r.m_star) r.decomposition.parts.push_back(VertexSet(nv, {e.u, e.v}));
  for (const Seagull& t : r.seagulls.triples) r.decomposition.parts.push_back(VertexSet(nv, {t.a, t.mid, t.b}));
  r.h = contract(g, r.decomposition);
  r.minor_check = verify_minor(g, r.h, r.decomposition);

  r.missing_edges = choose2(r.h.vertex_count()) - r.h.edge_count();

  // Direct counts from G: (z, matching edge) with z missing both ends, and
  // matching-edge pairs with no edge between them.
  for (Vertex c : inst.z)
    for (const Edge& e : r.m_star)
      if (!g.adjacent(c, e.u) && !g.adjacent(c, e.v)) ++r.realized_bad_triples;
  for (std::size_t i = 0; i < r.m_star.size(); ++i)
    for (std::size_t j = i + 1; j < r.m_star.size(); ++j) {
      const Edge& e = r.m_star[i];
      const Edge& f = r.m_star[j];
      if (!g.adjacent(e.u, f.u) && !g.adjacent(e.u, f.v) && !g.adjacent(e.v, f.u) && !g.adjacent(e.v, f.v))
        ++r.realized_bad_quadruples;
    }

  // Classify every non-adjacent pair of H by the parts it joins.
  const int zk = static_cast<int>(k);
  const int pairs_end = zk + static_cast<int>(r.m_star.size());
  std::int64_t triples = 0;
  std::int64_t quads = 0;
  const Graph hc = complement(r.h);
  for (const Edge& e : hc.edges()) {
    const bool i_z = e.u < zk;
    const bool i_pair = e.u >= zk && e.u < pairs_end;
    const bool j_pair = e.v >= zk && e.v < pairs_end;
    if (i_z && j_pair) {
      const Vertex c = inst.z.members()[static_cast<std::size_t>(e.u)];
      const Edge& m = r.m_star[static_cast<std::size_t>(e.v - zk)];
      if (!g.adjacent(c, m.u) && !g.adjacent(c, m.v)) {
        ++triples;
        continue;
      }
    } else if (i_pair && j_pair) {
      const Edge& a = r.m_star[static_cast<std::size_t>(e.u - zk)];
      const Edge& b = r.m_star[static_cast<std::size_t>(e.v - zk)];
      const VertexSet q(nv, {a.u, a.v, b.u, b.v});
      if (induced_subgraph(g, q).graph.edge_count() == 2) {
        ++quads;
        continue;
      }
    }
    ++r.unclassified_missing;
  }
  r.accounting_exact = r.unclassified_missing == 0 && triples == r.realized_bad_triples &&
                       quads == r.realized_bad_quadruples &&
                       r.missing_edges == r.realized_bad_triples + r.realized_bad_quadruples;
  return r;
}

PipelineResult run_pipeline(const Graph& g, const PipelineConfig& cfg) {
  return run_trial(prepare_instance(g, cfg), 0);
}

AnyOrderResult run_pipeline_any_order(const Graph& g, const PipelineConfig& cfg) {
  AnyOrderResult out;
  const int nv = g.vertex_count();
  if (nv % 2 == 0) {
    out.inner = run_pipeline(g, cfg);
    out.h = out.inner.h;
    out.decomposition = out.inner.decomposition;
    out.minor_check = out.inner.minor_check;
    return out;
  }
  VertexSet rest = g.all_vertices();
  rest.erase(0);
  const InducedSubgraph sub = induced_subgraph(g, rest);
  out.inner = run_pipeline(sub.graph, cfg);
  out.added_vertex = 0;
  for (const VertexSet& part : out.inner.decomposition.parts) {
    VertexSet host(nv);
    for (Vertex v : part) host.insert(sub.to_host[static_cast<std::size_t>(v)]);
    out.decomposition.parts.push_back(std::move(host));
  }
  out.decomposition.parts.push_back(VertexSet(nv, {0}));
  out.h = contract(g, out.decomposition);
  out.minor_check = verify_minor(g, out.h, out.decomposition);
  return out;
}

namespace {

void require_certifiable(const PipelineResult& r) {
  if (r.mode != Mode::Strict) throw Error(ErrorCode::NotCertifiable, "advisory runs carry no certificate");
  if (!r.preconditions.lambda_squared_above_2n || !(r.preconditions.q > 0))
    throw Error(ErrorCode::NotCertifiable, "lambda^2 <= 2n");
  if (!r.preconditions.strict_ok()) {
    std::string msg = "strict flags failed:";
    for (const auto& f : r.preconditions.failed_flags()) msg += " [" + f + "]";
    throw Error(ErrorCode::NotCertifiable, msg);
  }
  if (!r.bound.rhs_J) throw Error(ErrorCode::NotCertifiable, r.bound.rhs_J_invalid_reason);
}

}  // namespace

Certificate certify(const PipelineResult& r) {
  require_certifiable(r);
  Certificate c;
  c.status = CertificateStatus::Sample;
  c.bound = *r.bound.rhs_J;
  c.trials = 1;
  c.mean_missing = static_cast<double>(r.missing_edges);
  c.margin = c.bound - c.mean_missing;
  return c;
}

Certificate certify_batch(std::span<const PipelineResult> runs) {
  if (runs.empty()) throw Error(ErrorCode::NotCertifiable, "empty batch");
  for (const auto& r : runs) require_certifiable(r);
  Certificate c;
  c.bound = *runs.front().bound.rhs_J;
  c.trials = static_cast<int>(runs.size());
  double sum = 0;
  for (const auto& r : runs) sum += static_cast<double>(r.missing_edges);
  c.mean_missing = sum / c.trials;
  double ss = 0;
  for (const auto& r : runs) {
    const double d = static_cast<double>(r.missing_edges) - c.mean_missing;
    ss += d * d;
  }
  const double var = c.trials > 1 ? ss / (c.trials - 1) : 0.0;
  c.standard_error = std::sqrt(var / c.trials);
  c.margin = c.bound + 3 * c.standard_error - c.mean_missing;
  c.status = c.margin >= 0 ? CertificateStatus::Pass : CertificateStatus::Fail;
  return c;
}

}  // namespace minorforge
