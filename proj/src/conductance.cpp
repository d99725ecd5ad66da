#include "motifclust/conductance.hpp"

#include <algorithm>

#include "motifclust/errors.hpp"

namespace motifclust {

ConductanceResult phi2(const Graph& g, const VertexSubset& s) {
  const EdgeCutStats cut = edge_cut(g, s);
  const Count den = std::min(cut.vol2_s, cut.vol2_sbar);
  if (den == 0)
    throw DegenerateInputError("phi2: a side has zero edge volume");
  return {cut.e_cross, den, 2};
}

ConductanceResult phi3(const Graph& g, const VertexSubset& s, const TriangleCounts& tc) {
  if (static_cast<EdgeId>(tc.per_edge.size()) != g.num_edges())
    throw InvalidInputError("phi3: weight map length mismatch");
  Count vol3_s = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u)
    if (s.contains(u)) vol3_s += tc.per_node[u];
  const Count vol3_sbar = 3 * tc.total - vol3_s;
  if (vol3_s == 0 || vol3_sbar == 0)
    throw DegenerateInputError("phi3: a side has zero triangle volume");
  // t1+t2 via the cut triangles: a triangle crosses iff its edge weights
  // disagree with full containment; count directly from the class counts.
  const MotifClassCounts mc = classify_motifs(g, s, 3);
  return {mc.at(1) + mc.at(2), std::min(vol3_s, vol3_sbar), 3};
}

ConductanceResult phi4(const Graph& g, const VertexSubset& s) {
  const MotifClassCounts mc = classify_motifs(g, s, 4);
  const Count c1 = mc.at(1), c2 = mc.at(2), c3 = mc.at(3), c4 = mc.at(4);
  Count total = 0;
  {
    K4Counts kc = k4_counts(g);
    total = kc.total;
  }
  const Count c0 = total - c1 - c2 - c3 - c4;
  const Count vol4_s = 4 * c4 + 3 * c3 + 2 * c2 + c1;
  const Count vol4_sbar = 4 * c0 + 3 * c1 + 2 * c2 + c3;
  if (vol4_s == 0 || vol4_sbar == 0)
    throw DegenerateInputError("phi4: a side has zero K4 volume");
  // Escape probability of the K4-biased walk: each K4 with j vertices on the
  // start side contributes j*(4-j)/3 crossing mass, so the numerator is
  // 3c1 + 4c2 + 3c3 (symmetric under complement) over 3 * vol4.
  return {3 * c1 + 4 * c2 + 3 * c3, 3 * std::min(vol4_s, vol4_sbar), 4};
}

Count triangle_quadratic_form(const Graph& g, const std::vector<int>& x) {
  if (static_cast<NodeId>(x.size()) != g.num_nodes())
    throw InvalidInputError("quadratic form: vector length mismatch");
  for (int v : x)
    if (v != 0 && v != 1) throw InvalidInputError("quadratic form: entries must be 0/1");
  Count sum = 0;
  for (const auto& t : enumerate_triangles(g)) {
    const int a = x[t[0]], b = x[t[1]], c = x[t[2]];
    sum += (a - b) * (a - b) + (a - c) * (a - c) + (b - c) * (b - c);
  }
  return sum;
}

}  // namespace motifclust
