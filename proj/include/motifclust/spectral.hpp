#ifndef MOTIFCLUST_SPECTRAL_HPP
#define MOTIFCLUST_SPECTRAL_HPP

#include <array>
#include <vector>

#include "motifclust/conductance.hpp"
#include "motifclust/graph.hpp"
#include "motifclust/motifs.hpp"

namespace motifclust {

struct SpectralOptions {
  double tol = 1e-8;
  long max_iter = 0;  // 0 -> 10 * n
};

struct SpectralResult {
  double lambda2 = 0.0;
  // Length n. Vertices excluded from the spectral problem (zero weighted
  // degree in H) carry +infinity so they sort last in the sweep.
  std::vector<double> eigvec;
  double residual = 0.0;
  long iterations = 0;  // matrix-vector products
  std::vector<NodeId> excluded;
};

// Second eigenpair of the normalized Laplacian of the weighted graph H
// defined by the per-edge weights (triangle counts in the main pipeline).
// Zero-weight edges are dropped first; if the positive-weight subgraph is
// disconnected the zero eigenvalue has multiplicity > 1 and a
// DegenerateInputError instructs component-wise processing.
SpectralResult second_eigenpair(const Graph& g, const EdgeWeightMap& weights,
                                const SpectralOptions& opts = {});

struct SweepResult {
  NodeId best_prefix_size = 0;
  ConductanceResult best_phi3;
  std::vector<NodeId> vertex_order;
  // (prefix_size, num, den) per nondegenerate prefix when requested.
  std::vector<std::array<Count, 3>> trace;
};

// Cheeger sweep over prefixes of the eigvec-sorted order, maintaining the
// triangle class counts incrementally. Eigenvector ties broken by node id,
// phi3 ties by smaller prefix.
SweepResult sweep_cut(const Graph& g, const TriangleCounts& tc,
                      const std::vector<double>& eigvec, bool keep_trace = false);

struct TriangleSpectralOutput {
  VertexSubset cut;
  SweepResult sweep;
  SpectralResult spectral;
  TriangleCounts tc;
};

// triangle_counts -> second_eigenpair -> sweep_cut.
TriangleSpectralOutput triangle_spectral_cluster(const Graph& g,
                                                 const SpectralOptions& opts = {});

}  // namespace motifclust

#endif
