#ifndef MOTIFCLUST_SYNTH_HPP
#define MOTIFCLUST_SYNTH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "motifclust/graph.hpp"

namespace motifclust {

Graph gnp(NodeId n, double p, std::uint64_t seed);

struct PlantedParams {
  NodeId n = 0;  // nodes per cluster
  NodeId k = 2;
  double p = 0.0;  // intra-cluster edge probability
  double q = 0.0;  // inter-cluster, q < p
  std::uint64_t seed = 0;

  void validate() const;
};

struct PlantedGraph {
  Graph graph;
  std::vector<NodeId> labels;  // cluster c = vertices cn..cn+n-1
};

PlantedGraph planted_partition(const PlantedParams& params);

// One run of the recovery experiment: planted G(2n,2,p,q) with
// p = 3 ln n / sqrt(n), q = ln n / sqrt(n); edges with t(e) < 8 ln^2 n
// removed (natural log throughout).
struct RecoveryRun {
  std::uint64_t seed = 0;
  Count components = 0;
  bool exact_match = false;  // components == planted clusters exactly
  Count removed_edges = 0;
};

struct RecoveryReport {
  NodeId n = 0;
  double p = 0.0, q = 0.0;
  double threshold = 0.0;  // 8 ln^2 n
  std::vector<RecoveryRun> runs;
  int successes = 0;
};

RecoveryReport recovery_experiment(NodeId n, const std::vector<std::uint64_t>& seeds);

struct PlantCliqueResult {
  Graph graph;
  std::vector<NodeId> s;  // the chosen subset
  std::vector<NodeId> x;  // the clique vertices, x subseteq s
  Count added_edges = 0;
};

// Adds a clique on a random X of x_size vertices inside a random S of
// s_size vertices of g.
PlantCliqueResult plant_clique(const Graph& g, NodeId s_size, NodeId x_size,
                               std::uint64_t seed);

// First (by node-id BFS order) vertex pair at distance >= 3, or nullopt when
// the diameter is at most 2. Adding the returned edge creates no triangle.
std::optional<std::array<NodeId, 2>> heavy_edge(const Graph& g);

}  // namespace motifclust

#endif
