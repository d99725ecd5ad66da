#include "motifclust/graph.hpp"

#include <algorithm>
#include <deque>

#include "motifclust/errors.hpp"

namespace motifclust {

Graph Graph::from_edges(NodeId n, std::vector<std::array<NodeId, 2>> edges,
                        Count* self_loops_dropped, Count* duplicates_dropped) {
  Count loops = 0;
  std::size_t w = 0;
  for (auto& e : edges) {
    if (e[0] == e[1]) { ++loops; continue; }
    if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n)
      throw InvalidInputError("edge endpoint out of range");
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    edges[w++] = e;
  }
  edges.resize(w);
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  Count dups = static_cast<Count>(edges.end() - last);
  edges.erase(last, edges.end());
  if (self_loops_dropped) *self_loops_dropped = loops;
  if (duplicates_dropped) *duplicates_dropped = dups;

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e[0] + 1];
    ++g.offsets_[e[1] + 1];
  }
  for (NodeId u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];
  g.adj_.resize(g.offsets_[n]);
  g.adj_edge_.resize(g.offsets_[n]);
  std::vector<NodeId> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const auto [u, v] = g.edges_[i];
    g.adj_[cursor[u]] = v;
    g.adj_edge_[cursor[u]++] = static_cast<EdgeId>(i);
    g.adj_[cursor[v]] = u;
    g.adj_edge_[cursor[v]++] = static_cast<EdgeId>(i);
  }
  // Edges are sorted lexicographically, so each adjacency list comes out
  // sorted except that for node v the neighbors u<v arrive first, also in
  // order; a single merge is unnecessary because both runs are ascending and
  // every u<v slot precedes every w>v slot.
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  return edge_id(u, v) >= 0;
}

EdgeId Graph::edge_id(NodeId u, NodeId v) const {
  if (u == v) return -1;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

NodeId IdMap::intern(std::int64_t external) {
  auto [it, inserted] = external_to_internal_.try_emplace(
      external, static_cast<NodeId>(internal_to_external_.size()));
  if (inserted) internal_to_external_.push_back(external);
  return it->second;
}

std::optional<NodeId> IdMap::to_internal(std::int64_t external) const {
  auto it = external_to_internal_.find(external);
  if (it == external_to_internal_.end()) return std::nullopt;
  return it->second;
}

IdMap IdMap::identity(NodeId n) {
  IdMap m;
  for (NodeId u = 0; u < n; ++u) m.intern(u);
  return m;
}

VertexSubset::VertexSubset(NodeId n, const std::vector<NodeId>& members)
    : member_(n, 0) {
  for (NodeId u : members) insert(u);
}

VertexSubset VertexSubset::complement() const {
  VertexSubset c(universe());
  for (NodeId u = 0; u < universe(); ++u)
    if (!contains(u)) c.insert(u);
  return c;
}

std::vector<NodeId> VertexSubset::members() const {
  std::vector<NodeId> out;
  out.reserve(size_);
  for (NodeId u = 0; u < universe(); ++u)
    if (contains(u)) out.push_back(u);
  return out;
}

Clustering connected_components(const Graph& g, const std::vector<char>* active_edges) {
  if (active_edges && static_cast<EdgeId>(active_edges->size()) != g.num_edges())
    throw InvalidInputError("edge mask length mismatch");
  const NodeId n = g.num_nodes();
  Clustering c;
  c.labels.assign(n, -1);
  std::deque<NodeId> queue;
  NodeId next_label = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (c.labels[s] >= 0) continue;
    const NodeId label = next_label++;
    c.labels[s] = label;
    queue.push_back(s);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      auto nb = g.neighbors(u);
      auto eids = g.incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (active_edges && !(*active_edges)[static_cast<std::size_t>(eids[i])]) continue;
        NodeId v = nb[i];
        if (c.labels[v] < 0) {
          c.labels[v] = label;
          queue.push_back(v);
        }
      }
    }
  }
  c.num_clusters = next_label;
  return c;
}

EdgeCutStats edge_cut(const Graph& g, const VertexSubset& s) {
  if (s.universe() != g.num_nodes())
    throw InvalidInputError("subset universe mismatch");
  EdgeCutStats st;
  for (const auto& e : g.edges())
    if (s.contains(e[0]) != s.contains(e[1])) ++st.e_cross;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (s.contains(u))
      st.vol2_s += g.degree(u);
    else
      st.vol2_sbar += g.degree(u);
  }
  return st;
}

}  // namespace motifclust
