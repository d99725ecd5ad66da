#include "motifclust/walks.hpp"

#include <algorithm>
#include <cmath>

#include "motifclust/errors.hpp"

namespace motifclust {

WalkSimulator::WalkSimulator(const Graph& g, const TriangleCounts* tc)
    : g_(&g), tc_(tc) {
  if (tc_) {
    if (static_cast<EdgeId>(tc_->per_edge.size()) != g.num_edges())
      throw InvalidInputError("walk: weight map length mismatch");
    // cumulative t(u,v) per adjacency slot for binary-search sampling
    prefix_.resize(static_cast<std::size_t>(2) * g.num_edges());
    std::size_t pos = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      Count acc = 0;
      for (EdgeId e : g.incident_edges(u)) {
        acc += tc_->per_edge[static_cast<std::size_t>(e)];
        prefix_[pos++] = acc;
      }
    }
    node_prefix_.resize(g.num_nodes());
    Count acc = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      acc += tc_->per_node[u];
      node_prefix_[u] = acc;
    }
    total_volume_ = acc;
  }
}

NodeId WalkSimulator::step(WalkKind kind, NodeId u, Rng& rng) const {
  const auto nb = g_->neighbors(u);
  if (kind == WalkKind::kStandard) {
    if (nb.empty()) return u;
    return nb[rng.next_below(nb.size())];
  }
  if (!tc_) throw InvalidInputError("walk: biased walk needs triangle counts");
  const Count tu2 = 2 * tc_->per_node[u];
  if (tu2 == 0) return u;  // walk stays at triangle-free vertices
  // slot base: adjacency offsets are implicit in neighbor spans
  const std::size_t base = static_cast<std::size_t>(nb.data() - g_->neighbors(0).data());
  const Count r = static_cast<Count>(rng.next_below(static_cast<std::uint64_t>(tu2)));
  auto begin = prefix_.begin() + static_cast<std::ptrdiff_t>(base);
  auto end = begin + static_cast<std::ptrdiff_t>(nb.size());
  auto it = std::upper_bound(begin, end, r);
  return nb[static_cast<std::size_t>(it - begin)];
}

NodeId WalkSimulator::draw_start(const WalkConfig& cfg, Rng& rng) const {
  switch (cfg.start) {
    case StartDistribution::kFixed:
      return cfg.fixed_start;
    case StartDistribution::kUniform:
      return static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(g_->num_nodes())));
    case StartDistribution::kMotifVolume: {
      if (!tc_ || total_volume_ == 0)
        throw InvalidInputError("walk: motif-volume start needs triangles");
      const Count r = static_cast<Count>(rng.next_below(static_cast<std::uint64_t>(total_volume_)));
      auto it = std::upper_bound(node_prefix_.begin(), node_prefix_.end(), r);
      return static_cast<NodeId>(it - node_prefix_.begin());
    }
  }
  throw InvalidInputError("walk: bad start distribution");
}

StayEstimate empirical_stay_probability(const WalkSimulator& sim,
                                        const std::vector<NodeId>& labels,
                                        const WalkConfig& cfg) {
  if (static_cast<NodeId>(labels.size()) != sim.graph().num_nodes())
    throw InvalidInputError("walk: labels not total over V");
  if (cfg.trials < 1 || cfg.steps < 1)
    throw InvalidInputError("walk: trials and steps must be >= 1");
  long stays = 0;
  for (long t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(t));
    NodeId u = sim.draw_start(cfg, rng);
    for (long s = 0; s + 1 < cfg.steps; ++s) u = sim.step(cfg.kind, u, rng);
    const NodeId v = sim.step(cfg.kind, u, rng);
    if (labels[u] == labels[v]) ++stays;
  }
  StayEstimate est;
  est.trials = cfg.trials;
  est.estimate = static_cast<double>(stays) / static_cast<double>(cfg.trials);
  est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) /
                          static_cast<double>(cfg.trials));
  return est;
}

double theoretical_stay(WalkKind kind, double p, double q, int k) {
  if (!(0.0 <= q && q < p && p <= 1.0) || k < 2)
    throw InvalidInputError("theoretical_stay: need 0 <= q < p <= 1 and k >= 2");
  const double km1 = k - 1, km2 = k - 2;
  if (kind == WalkKind::kStandard) return p / (p + q * km1);
  const double num = p * p * p + km1 * p * q * q;
  const double den = p * p * p + 3.0 * km1 * p * q * q + km1 * km2 * q * q * q;
  return num / den;
}

StayEstimate empirical_escape_probability(const WalkSimulator& sim,
                                          const VertexSubset& s,
                                          long trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidInputError("walk: trials must be >= 1");
  const TriangleCounts* tc = sim.counts();
  if (!tc) throw InvalidInputError("walk: escape probability needs triangle counts");
  // start distribution proportional to t(u) within S
  std::vector<NodeId> members;
  std::vector<Count> prefix;
  Count acc = 0;
  for (NodeId u : s.members()) {
    if (tc->per_node[u] == 0) continue;
    acc += tc->per_node[u];
    members.push_back(u);
    prefix.push_back(acc);
  }
  if (acc == 0)
    throw InvalidInputError("walk: subset has zero triangle volume");
  long escapes = 0;
  for (long t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
    const Count r = static_cast<Count>(rng.next_below(static_cast<std::uint64_t>(acc)));
    auto it = std::upper_bound(prefix.begin(), prefix.end(), r);
    const NodeId u = members[static_cast<std::size_t>(it - prefix.begin())];
    const NodeId v = sim.step(WalkKind::kTriangleBiased, u, rng);
    if (!s.contains(v)) ++escapes;
  }
  StayEstimate est;
  est.trials = trials;
  est.estimate = static_cast<double>(escapes) / static_cast<double>(trials);
  est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) /
                          static_cast<double>(trials));
  return est;
}

}  // namespace motifclust
