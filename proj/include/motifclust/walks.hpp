#ifndef MOTIFCLUST_WALKS_HPP
#define MOTIFCLUST_WALKS_HPP

#include <cstdint>
#include <vector>

#include "motifclust/graph.hpp"
#include "motifclust/motifs.hpp"
#include "motifclust/rng.hpp"

namespace motifclust {

enum class WalkKind { kStandard, kTriangleBiased };

enum class StartDistribution { kUniform, kMotifVolume, kFixed };

struct WalkConfig {
  WalkKind kind = WalkKind::kStandard;
  long steps = 1;
  long trials = 1;
  std::uint64_t seed = 0;
  StartDistribution start = StartDistribution::kUniform;
  NodeId fixed_start = 0;
};

// Walk simulator with per-vertex prefix sums over incident triangle counts
// for O(log deg) biased sampling. The biased walk stays put at vertices with
// t(u)=0; the standard walk stays put at isolated vertices.
class WalkSimulator {
 public:
  WalkSimulator(const Graph& g, const TriangleCounts* tc);

  NodeId step(WalkKind kind, NodeId u, Rng& rng) const;

  // Draws a start vertex. kMotifVolume is proportional to t(u) (requires a
  // graph with at least one triangle).
  NodeId draw_start(const WalkConfig& cfg, Rng& rng) const;

  const Graph& graph() const { return *g_; }
  const TriangleCounts* counts() const { return tc_; }

 private:
  const Graph* g_;
  const TriangleCounts* tc_;
  std::vector<Count> prefix_;         // per-adjacency-slot cumulative t(u,v)
  std::vector<Count> node_prefix_;    // cumulative t(u) over vertices
  Count total_volume_ = 0;
};

struct StayEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  long trials = 0;
};

// Monte-Carlo one-step same-cluster probability: per trial, draw a start,
// burn in cfg.steps-1 steps, then measure whether the last step stays in the
// same label. Trials use independent substreams of cfg.seed.
StayEstimate empirical_stay_probability(const WalkSimulator& sim,
                                        const std::vector<NodeId>& labels,
                                        const WalkConfig& cfg);

// Closed forms for the planted partition model:
//   standard: p / (p + q(k-1))
//   biased:   (p^3 + (k-1)pq^2) / (p^3 + 3(k-1)pq^2 + (k-1)(k-2)q^3)
double theoretical_stay(WalkKind kind, double p, double q, int k);

// Monte-Carlo escape probability from S for the triangle-biased walk
// (start drawn proportional to t(u) within S, one step). Cross-checks phi3.
StayEstimate empirical_escape_probability(const WalkSimulator& sim,
                                          const VertexSubset& s,
                                          long trials, std::uint64_t seed);

}  // namespace motifclust

#endif
