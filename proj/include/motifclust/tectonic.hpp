#ifndef MOTIFCLUST_TECTONIC_HPP
#define MOTIFCLUST_TECTONIC_HPP

#include <utility>
#include <vector>

#include "motifclust/graph.hpp"
#include "motifclust/motifs.hpp"
#include "motifclust/rational.hpp"

namespace motifclust {

// Raw mode removes edges with t(e) <= raw_cutoff (inclusive). Normalized
// mode removes edges with t(u,v)/(deg(u)+deg(v)) < theta (strict), decided
// exactly by cross-multiplication.
struct ThresholdSpec {
  enum class Mode { kRaw, kNormalized };
  Mode mode = Mode::kNormalized;
  Count raw_cutoff = 0;
  Rational theta{6, 100};  // rule-of-thumb default

  static ThresholdSpec raw(Count cutoff);
  static ThresholdSpec normalized(Rational theta);
};

struct TectonicResult {
  Clustering clustering;
  Count removed_edges = 0;
  std::vector<char> kept;  // aligned with g.edges()
};

TectonicResult tectonic_cluster(const Graph& g, const EdgeWeightMap& weights,
                                const ThresholdSpec& spec);

// (size, count) pairs sorted ascending by size; sum size*count = n.
std::vector<std::pair<Count, Count>> component_histogram(const Clustering& c);

}  // namespace motifclust

#endif
