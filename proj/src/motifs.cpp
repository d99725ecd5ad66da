#include "motifclust/motifs.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include "motifclust/errors.hpp"
#include "motifclust/parallel.hpp"

namespace motifclust {

namespace {

// Rank by (degree, id); forward adjacency keeps only higher-ranked neighbors.
struct DegreeOrder {
  std::vector<NodeId> rank;                // node -> rank
  std::vector<NodeId> fwd_offsets;         // length n+1
  std::vector<NodeId> fwd;                 // higher-ranked neighbors, rank-sorted
  std::vector<EdgeId> fwd_edge;            // canonical edge ids, aligned

  explicit DegreeOrder(const Graph& g) {
    const NodeId n = g.num_nodes();
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
      return a < b;
    });
    rank.resize(n);
    for (NodeId i = 0; i < n; ++i) rank[order[i]] = i;

    fwd_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v : g.neighbors(u))
        if (rank[v] > rank[u]) ++fwd_offsets[u + 1];
    }
    for (NodeId u = 0; u < n; ++u) fwd_offsets[u + 1] += fwd_offsets[u];
    fwd.resize(fwd_offsets[n]);
    fwd_edge.resize(fwd_offsets[n]);
    std::vector<std::pair<NodeId, EdgeId>> buf;
    for (NodeId u = 0; u < n; ++u) {
      buf.clear();
      auto nb = g.neighbors(u);
      auto eids = g.incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (rank[nb[i]] > rank[u]) buf.emplace_back(nb[i], eids[i]);
      std::sort(buf.begin(), buf.end(), [&](const auto& a, const auto& b) {
        return rank[a.first] < rank[b.first];
      });
      NodeId pos = fwd_offsets[u];
      for (const auto& [v, e] : buf) {
        fwd[pos] = v;
        fwd_edge[pos++] = e;
      }
    }
  }

  std::span<const NodeId> forward(NodeId u) const {
    return {fwd.data() + fwd_offsets[u], fwd.data() + fwd_offsets[u + 1]};
  }
  std::span<const EdgeId> forward_edges(NodeId u) const {
    return {fwd_edge.data() + fwd_offsets[u], fwd_edge.data() + fwd_offsets[u + 1]};
  }
};

void checked_add(Count& dst, Count inc) {
  if (dst > std::numeric_limits<Count>::max() - inc)
    throw InvalidInputError("motif count overflow");
  dst += inc;
}

}  // namespace

TriangleCounts triangle_counts(const Graph& g, int threads) {
  const NodeId n = g.num_nodes();
  const DegreeOrder ord(g);
  TriangleCounts tc;
  tc.per_edge.assign(static_cast<std::size_t>(g.num_edges()), 0);
  tc.per_node.assign(n, 0);

  const int nthreads = resolve_threads(threads);
  // Per-edge increments are accumulated with relaxed atomics; integer sums
  // are order-independent so the result is deterministic.
  std::vector<std::atomic<Count>> per_edge_atomic(tc.per_edge.size());
  parallel_blocks(n, nthreads, [&](std::int64_t lo, std::int64_t hi) {
    for (NodeId u = static_cast<NodeId>(lo); u < static_cast<NodeId>(hi); ++u) {
      auto fu = ord.forward(u);
      auto fu_e = ord.forward_edges(u);
      for (std::size_t i = 0; i < fu.size(); ++i) {
        const NodeId v = fu[i];
        auto fv = ord.forward(v);
        auto fv_e = ord.forward_edges(v);
        // merge intersection of the two rank-sorted forward lists
        std::size_t a = i + 1, b = 0;
        while (a < fu.size() && b < fv.size()) {
          const NodeId ra = ord.rank[fu[a]], rb = ord.rank[fv[b]];
          if (ra < rb) {
            ++a;
          } else if (rb < ra) {
            ++b;
          } else {
            per_edge_atomic[static_cast<std::size_t>(fu_e[i])].fetch_add(1, std::memory_order_relaxed);
            per_edge_atomic[static_cast<std::size_t>(fu_e[a])].fetch_add(1, std::memory_order_relaxed);
            per_edge_atomic[static_cast<std::size_t>(fv_e[b])].fetch_add(1, std::memory_order_relaxed);
            ++a;
            ++b;
          }
        }
      }
    }
  });
  for (std::size_t e = 0; e < tc.per_edge.size(); ++e)
    tc.per_edge[e] = per_edge_atomic[e].load(std::memory_order_relaxed);

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    checked_add(tc.per_node[u], tc.per_edge[static_cast<std::size_t>(e)]);
    checked_add(tc.per_node[v], tc.per_edge[static_cast<std::size_t>(e)]);
  }
  Count twice_total = 0;
  for (NodeId u = 0; u < n; ++u) {
    // per_node currently holds 2*t(u)
    tc.per_node[u] /= 2;
    checked_add(twice_total, tc.per_node[u]);
  }
  tc.total = twice_total / 3;
  return tc;
}

std::vector<std::array<NodeId, 3>> enumerate_triangles(const Graph& g) {
  const DegreeOrder ord(g);
  std::vector<std::array<NodeId, 3>> out;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    auto fu = ord.forward(u);
    for (std::size_t i = 0; i < fu.size(); ++i) {
      const NodeId v = fu[i];
      auto fv = ord.forward(v);
      std::size_t a = i + 1, b = 0;
      while (a < fu.size() && b < fv.size()) {
        const NodeId ra = ord.rank[fu[a]], rb = ord.rank[fv[b]];
        if (ra < rb) ++a;
        else if (rb < ra) ++b;
        else { out.push_back({u, v, fu[a]}); ++a; ++b; }
      }
    }
  }
  return out;
}

std::vector<std::array<NodeId, 4>> enumerate_k4(const Graph& g) {
  const DegreeOrder ord(g);
  std::vector<std::array<NodeId, 4>> out;
  std::vector<NodeId> common, common2;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    auto fu = ord.forward(u);
    for (std::size_t i = 0; i < fu.size(); ++i) {
      const NodeId v = fu[i];
      auto fv = ord.forward(v);
      common.clear();
      std::size_t a = i + 1, b = 0;
      while (a < fu.size() && b < fv.size()) {
        const NodeId ra = ord.rank[fu[a]], rb = ord.rank[fv[b]];
        if (ra < rb) ++a;
        else if (rb < ra) ++b;
        else { common.push_back(fu[a]); ++a; ++b; }
      }
      // common holds forward(u) ∩ forward(v), rank-sorted; every pair in it
      // that is itself an edge closes a K4.
      for (std::size_t ci = 0; ci < common.size(); ++ci) {
        const NodeId w = common[ci];
        auto fw = ord.forward(w);
        common2.clear();
        std::size_t c = ci + 1, d = 0;
        while (c < common.size() && d < fw.size()) {
          const NodeId rc = ord.rank[common[c]], rd = ord.rank[fw[d]];
          if (rc < rd) ++c;
          else if (rd < rc) ++d;
          else { out.push_back({u, v, w, common[c]}); ++c; ++d; }
        }
      }
    }
  }
  return out;
}

K4Counts k4_counts(const Graph& g) {
  K4Counts kc;
  kc.per_node.assign(g.num_nodes(), 0);
  for (const auto& q : enumerate_k4(g)) {
    for (NodeId u : q) checked_add(kc.per_node[u], 1);
    checked_add(kc.total, 1);
  }
  return kc;
}

Count MotifClassCounts::volume() const {
  Count v = 0;
  for (int i = 1; i <= arity; ++i) v += static_cast<Count>(i) * counts[i - 1];
  return v;
}

MotifClassCounts classify_motifs(const Graph& g, const VertexSubset& s, int arity) {
  if (arity != 3 && arity != 4)
    throw InvalidInputError("motif arity must be 3 or 4");
  if (s.universe() != g.num_nodes())
    throw InvalidInputError("subset universe mismatch");
  MotifClassCounts mc;
  mc.arity = arity;
  if (arity == 3) {
    for (const auto& t : enumerate_triangles(g)) {
      int inside = s.contains(t[0]) + s.contains(t[1]) + s.contains(t[2]);
      if (inside > 0) ++mc.counts[inside - 1];
    }
  } else {
    for (const auto& q : enumerate_k4(g)) {
      int inside = s.contains(q[0]) + s.contains(q[1]) + s.contains(q[2]) + s.contains(q[3]);
      if (inside > 0) ++mc.counts[inside - 1];
    }
  }
  return mc;
}

}  // namespace motifclust
