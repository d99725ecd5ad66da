#ifndef MOTIFCLUST_EVAL_HPP
#define MOTIFCLUST_EVAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "motifclust/graph.hpp"
#include "motifclust/motifs.hpp"
#include "motifclust/rational.hpp"

namespace motifclust {

// Ground-truth communities as external node-id sets; overlap permitted.
struct CommunitySet {
  std::vector<std::vector<std::int64_t>> communities;
  std::string source;
};

// One community per line, whitespace-separated external ids; duplicates
// within a line deduplicated, empty lines skipped.
CommunitySet load_communities(const std::string& path);

struct CommunityRow {
  std::size_t community = 0;
  Count size = 0;          // resolvable members
  NodeId matched_cluster = -1;
  Count intersection = 0;
  double precision = 0.0;
  double recall = 0.0;
};

struct PRReport {
  std::vector<CommunityRow> rows;
  double avg_precision = 0.0;  // unweighted mean over evaluated communities
  double avg_recall = 0.0;
  Count skipped_communities = 0;  // no resolvable node
  Count unresolved_ids = 0;
  double wall_seconds = 0.0;
};

// For each community S: the output cluster S' maximizing |S∩S'|, ties by
// higher precision (smaller |S'|) then lower cluster id; precision
// |S∩S'|/|S'|, recall |S∩S'|/|S|.
PRReport precision_recall(const Clustering& clustering, const IdMap& ids,
                          const CommunitySet& truth);

struct ThetaSweepPoint {
  Rational theta;
  double precision = 0.0;
  double recall = 0.0;
  Count clusters = 0;
};

std::vector<ThetaSweepPoint> theta_sweep(const Graph& g, const EdgeWeightMap& weights,
                                         const IdMap& ids, const CommunitySet& truth,
                                         const std::vector<Rational>& thetas);

}  // namespace motifclust

#endif
