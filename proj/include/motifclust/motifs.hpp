#ifndef MOTIFCLUST_MOTIFS_HPP
#define MOTIFCLUST_MOTIFS_HPP

#include <array>
#include <vector>

#include "motifclust/graph.hpp"

namespace motifclust {

// Per-canonical-edge integer motif count, index-aligned with Graph::edges().
using EdgeWeightMap = std::vector<Count>;

struct TriangleCounts {
  EdgeWeightMap per_edge;       // t(u,v)
  std::vector<Count> per_node;  // t(u)
  Count total = 0;
};

// Exact counts via the degree-ordered node iterator: rank vertices by
// (degree, id), intersect forward adjacency lists. Parallel over vertices.
TriangleCounts triangle_counts(const Graph& g, int threads = 0);

struct K4Counts {
  std::vector<Count> per_node;  // number of 4-cliques containing u
  Count total = 0;
};

K4Counts k4_counts(const Graph& g);

// counts[i-1] = number of arity-vertex cliques with exactly i vertices in S.
struct MotifClassCounts {
  int arity = 3;
  std::array<Count, 4> counts{};  // t1..t3 or c1..c4

  Count at(int i) const { return counts[i - 1]; }
  // Sum_i i*counts[i]; equals the motif volume of S.
  Count volume() const;
};

MotifClassCounts classify_motifs(const Graph& g, const VertexSubset& s, int arity);

// All triangles as rank-ordered vertex triples (brute-force-free enumeration,
// same ordering scheme as triangle_counts). Intended for small/medium graphs.
std::vector<std::array<NodeId, 3>> enumerate_triangles(const Graph& g);

std::vector<std::array<NodeId, 4>> enumerate_k4(const Graph& g);

}  // namespace motifclust

#endif
