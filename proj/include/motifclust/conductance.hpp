#ifndef MOTIFCLUST_CONDUCTANCE_HPP
#define MOTIFCLUST_CONDUCTANCE_HPP

#include <vector>

#include "motifclust/graph.hpp"
#include "motifclust/motifs.hpp"

namespace motifclust {

// Exact ratio; value() is presentation only. The numerator/denominator are
// kept unreduced so they stay meaningful as counts.
struct ConductanceResult {
  Count num = 0;
  Count den = 0;
  int arity = 2;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Edge conductance e(S:Sbar)/min(vol2(S), vol2(Sbar)).
ConductanceResult phi2(const Graph& g, const VertexSubset& s);

// Triangle conductance (t1+t2)/min(vol3(S), vol3(Sbar)); weights are the
// per-edge triangle counts of g.
ConductanceResult phi3(const Graph& g, const VertexSubset& s, const TriangleCounts& tc);

// K4 conductance: escape probability of the K4-biased walk from the
// smaller-volume side, (3c1+4c2+3c3)/(3c1+6c2+9c3+12c4) with the c_i taken
// for the smaller-volume side.
ConductanceResult phi4(const Graph& g, const VertexSubset& s);

// Sum over triangles of (x_u-x_v)^2+(x_u-x_w)^2+(x_v-x_w)^2 for binary x;
// equals 2t2(S)+2t1(S) for S = support(x).
Count triangle_quadratic_form(const Graph& g, const std::vector<int>& x);

}  // namespace motifclust

#endif
