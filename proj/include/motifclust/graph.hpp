#ifndef MOTIFCLUST_GRAPH_HPP
#define MOTIFCLUST_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace motifclust {

using NodeId = std::int32_t;
using EdgeId = std::int64_t;
using Count = std::int64_t;

// Immutable undirected simple graph in CSR form. Node ids are dense 0..n-1.
// Edges are stored once in canonical order: u < v, sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  // Canonicalizes the edge list: drops self-loops and duplicates, sorts.
  // Reports how many of each were dropped through the optional out-params.
  static Graph from_edges(NodeId n, std::vector<std::array<NodeId, 2>> edges,
                          Count* self_loops_dropped = nullptr,
                          Count* duplicates_dropped = nullptr);

  NodeId num_nodes() const { return n_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }

  const std::vector<std::array<NodeId, 2>>& edges() const { return edges_; }
  std::array<NodeId, 2> edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  NodeId degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId u) const {
    return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
  }
  // Canonical edge id for each adjacency slot, aligned with neighbors(u).
  std::span<const EdgeId> incident_edges(NodeId u) const {
    return {adj_edge_.data() + offsets_[u], adj_edge_.data() + offsets_[u + 1]};
  }

  bool has_edge(NodeId u, NodeId v) const;
  // -1 if (u,v) is not an edge.
  EdgeId edge_id(NodeId u, NodeId v) const;

 private:
  NodeId n_ = 0;
  std::vector<std::array<NodeId, 2>> edges_;
  std::vector<NodeId> offsets_;  // length n+1
  std::vector<NodeId> adj_;
  std::vector<EdgeId> adj_edge_;
};

// Bijection between external (file) ids and internal dense ids.
class IdMap {
 public:
  IdMap() = default;

  // Returns the internal id, assigning a fresh one on first sight.
  NodeId intern(std::int64_t external);
  std::optional<NodeId> to_internal(std::int64_t external) const;
  std::int64_t to_external(NodeId internal) const { return internal_to_external_[internal]; }
  NodeId size() const { return static_cast<NodeId>(internal_to_external_.size()); }

  // Identity map over 0..n-1 (synthetic graphs).
  static IdMap identity(NodeId n);

 private:
  std::unordered_map<std::int64_t, NodeId> external_to_internal_;
  std::vector<std::int64_t> internal_to_external_;
};

// Membership over 0..n-1 with a cached size.
class VertexSubset {
 public:
  explicit VertexSubset(NodeId n) : member_(n, 0) {}
  VertexSubset(NodeId n, const std::vector<NodeId>& members);

  NodeId universe() const { return static_cast<NodeId>(member_.size()); }
  NodeId size() const { return size_; }
  bool contains(NodeId u) const { return member_[u] != 0; }

  void insert(NodeId u) {
    if (!member_[u]) { member_[u] = 1; ++size_; }
  }
  void erase(NodeId u) {
    if (member_[u]) { member_[u] = 0; --size_; }
  }

  VertexSubset complement() const;
  std::vector<NodeId> members() const;

 private:
  std::vector<char> member_;
  NodeId size_ = 0;
};

// Total assignment node -> cluster id, labels 0..num_clusters-1.
struct Clustering {
  std::vector<NodeId> labels;
  NodeId num_clusters = 0;
};

// Labels assigned in order of first-seen node id. An edge participates only
// if active_edges (aligned with g.edges()) is absent or nonzero at its id.
Clustering connected_components(const Graph& g,
                                const std::vector<char>* active_edges = nullptr);

struct EdgeCutStats {
  Count e_cross = 0;
  Count vol2_s = 0;
  Count vol2_sbar = 0;
};

EdgeCutStats edge_cut(const Graph& g, const VertexSubset& s);

}  // namespace motifclust

#endif
