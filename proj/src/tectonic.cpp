#include "motifclust/tectonic.hpp"

#include <algorithm>
#include <map>

#include "motifclust/errors.hpp"

namespace motifclust {

ThresholdSpec ThresholdSpec::raw(Count cutoff) {
  if (cutoff < 0) throw InvalidInputError("raw cutoff must be >= 0");
  ThresholdSpec s;
  s.mode = Mode::kRaw;
  s.raw_cutoff = cutoff;
  return s;
}

ThresholdSpec ThresholdSpec::normalized(Rational theta) {
  if (theta.num == 0) throw InvalidInputError("theta must be > 0");
  ThresholdSpec s;
  s.mode = Mode::kNormalized;
  s.theta = theta;
  return s;
}

TectonicResult tectonic_cluster(const Graph& g, const EdgeWeightMap& weights,
                                const ThresholdSpec& spec) {
  if (static_cast<EdgeId>(weights.size()) != g.num_edges())
    throw InvalidInputError("tectonic: weight map length mismatch");
  TectonicResult res;
  res.kept.assign(weights.size(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Count t = weights[static_cast<std::size_t>(e)];
    bool keep;
    if (spec.mode == ThresholdSpec::Mode::kRaw) {
      // inclusive removal: edges with t(e) <= cutoff go
      keep = t > spec.raw_cutoff;
    } else {
      // strict removal: t/(deg(u)+deg(v)) < theta goes; exact cross-multiply
      const auto [u, v] = g.edge(e);
      const Count degsum = g.degree(u) + g.degree(v);
      keep = static_cast<__int128>(spec.theta.den) * t >=
             static_cast<__int128>(spec.theta.num) * degsum;
    }
    res.kept[static_cast<std::size_t>(e)] = keep ? 1 : 0;
    if (!keep) ++res.removed_edges;
  }
  res.clustering = connected_components(g, &res.kept);
  return res;
}

std::vector<std::pair<Count, Count>> component_histogram(const Clustering& c) {
  std::vector<Count> sizes(c.num_clusters, 0);
  for (NodeId label : c.labels) ++sizes[label];
  std::map<Count, Count> hist;
  for (Count s : sizes) ++hist[s];
  return {hist.begin(), hist.end()};
}

}  // namespace motifclust
