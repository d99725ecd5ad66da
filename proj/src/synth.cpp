#include "motifclust/synth.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "motifclust/errors.hpp"
#include "motifclust/motifs.hpp"
#include "motifclust/rng.hpp"

namespace motifclust {

Graph gnp(NodeId n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw InvalidInputError("gnp: p must be in [0,1]");
  if (n < 0) throw InvalidInputError("gnp: n must be >= 0");
  Rng rng(seed);
  std::vector<std::array<NodeId, 2>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return Graph::from_edges(n, std::move(edges));
}

void PlantedParams::validate() const {
  if (n < 1) throw InvalidInputError("planted: n must be >= 1");
  if (k < 2) throw InvalidInputError("planted: k must be >= 2");
  if (!(0.0 <= q && q < p && p <= 1.0))
    throw InvalidInputError("planted: need 0 <= q < p <= 1");
}

PlantedGraph planted_partition(const PlantedParams& params) {
  params.validate();
  const NodeId total = params.n * params.k;
  Rng rng(params.seed);
  PlantedGraph out;
  out.labels.resize(total);
  for (NodeId u = 0; u < total; ++u) out.labels[u] = u / params.n;
  std::vector<std::array<NodeId, 2>> edges;
  for (NodeId u = 0; u < total; ++u) {
    for (NodeId v = u + 1; v < total; ++v) {
      const double prob = out.labels[u] == out.labels[v] ? params.p : params.q;
      if (rng.bernoulli(prob)) edges.push_back({u, v});
    }
  }
  out.graph = Graph::from_edges(total, std::move(edges));
  return out;
}

RecoveryReport recovery_experiment(NodeId n, const std::vector<std::uint64_t>& seeds) {
  const double ln_n = std::log(static_cast<double>(n));
  RecoveryReport rep;
  rep.n = n;
  rep.p = 3.0 * ln_n / std::sqrt(static_cast<double>(n));
  rep.q = ln_n / std::sqrt(static_cast<double>(n));
  rep.threshold = 8.0 * ln_n * ln_n;
  if (rep.p > 1.0)
    throw InvalidInputError("recovery: n too small, p = 3 ln n / sqrt(n) exceeds 1");

  for (std::uint64_t seed : seeds) {
    PlantedParams params{n, 2, rep.p, rep.q, seed};
    PlantedGraph pg = planted_partition(params);
    TriangleCounts tc = triangle_counts(pg.graph);
    std::vector<char> keep(tc.per_edge.size());
    Count removed = 0;
    for (std::size_t e = 0; e < tc.per_edge.size(); ++e) {
      keep[e] = static_cast<double>(tc.per_edge[e]) >= rep.threshold;
      if (!keep[e]) ++removed;
    }
    Clustering c = connected_components(pg.graph, &keep);

    RecoveryRun run;
    run.seed = seed;
    run.components = c.num_clusters;
    run.removed_edges = removed;
    run.exact_match = c.num_clusters == 2;
    if (run.exact_match) {
      for (NodeId u = 0; u < pg.graph.num_nodes() && run.exact_match; ++u)
        run.exact_match = c.labels[u] == (pg.labels[u] == pg.labels[0]
                                              ? c.labels[0]
                                              : 1 - c.labels[0]);
    }
    if (run.exact_match) ++rep.successes;
    rep.runs.push_back(run);
  }
  return rep;
}

PlantCliqueResult plant_clique(const Graph& g, NodeId s_size, NodeId x_size,
                               std::uint64_t seed) {
  const NodeId n = g.num_nodes();
  if (!(0 <= x_size && x_size <= s_size && s_size <= n))
    throw InvalidInputError("plant_clique: need x_size <= s_size <= n");
  Rng rng(seed);
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Fisher-Yates with our own uniform draws for cross-platform determinism
  for (NodeId i = n - 1; i > 0; --i) {
    const NodeId j = static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  PlantCliqueResult res;
  res.s.assign(perm.begin(), perm.begin() + s_size);
  std::vector<NodeId> s_perm = res.s;
  for (NodeId i = s_size - 1; i > 0; --i) {
    const NodeId j = static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(s_perm[i], s_perm[j]);
  }
  res.x.assign(s_perm.begin(), s_perm.begin() + x_size);
  std::sort(res.s.begin(), res.s.end());
  std::sort(res.x.begin(), res.x.end());

  std::vector<std::array<NodeId, 2>> edges = g.edges();
  for (std::size_t i = 0; i < res.x.size(); ++i)
    for (std::size_t j = i + 1; j < res.x.size(); ++j)
      if (!g.has_edge(res.x[i], res.x[j])) {
        edges.push_back({res.x[i], res.x[j]});
        ++res.added_edges;
      }
  res.graph = Graph::from_edges(n, std::move(edges));
  return res;
}

std::optional<std::array<NodeId, 2>> heavy_edge(const Graph& g) {
  const NodeId n = g.num_nodes();
  std::vector<NodeId> dist(n);
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    // first witness by (source id, target id)
    for (NodeId v = 0; v < n; ++v)
      if (dist[v] >= 3) return std::array<NodeId, 2>{s, v};
  }
  return std::nullopt;
}

}  // namespace motifclust
