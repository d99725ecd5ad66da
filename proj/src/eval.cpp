#include "motifclust/eval.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "motifclust/errors.hpp"
#include "motifclust/tectonic.hpp"

namespace motifclust {

CommunitySet load_communities(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open community file: " + path);
  CommunitySet cs;
  cs.source = path;
  std::string line;
  Count lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;  // empty line, skipped
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    std::unordered_set<std::int64_t> seen;
    std::vector<std::int64_t> members;
    while (ls >> tok) {
      std::int64_t id;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(path + ":" + std::to_string(lineno) + ": malformed id '" + tok + "'");
      if (seen.insert(id).second) members.push_back(id);
    }
    if (!members.empty()) cs.communities.push_back(std::move(members));
  }
  return cs;
}

PRReport precision_recall(const Clustering& clustering, const IdMap& ids,
                          const CommunitySet& truth) {
  const auto start_time = std::chrono::steady_clock::now();
  PRReport rep;

  std::vector<Count> cluster_size(clustering.num_clusters, 0);
  for (NodeId label : clustering.labels) ++cluster_size[label];

  double sum_p = 0.0, sum_r = 0.0;
  std::unordered_map<NodeId, Count> inter;
  for (std::size_t ci = 0; ci < truth.communities.size(); ++ci) {
    inter.clear();
    Count resolvable = 0;
    for (std::int64_t ext : truth.communities[ci]) {
      auto internal = ids.to_internal(ext);
      if (!internal) { ++rep.unresolved_ids; continue; }
      ++resolvable;
      ++inter[clustering.labels[*internal]];
    }
    if (resolvable == 0) { ++rep.skipped_communities; continue; }

    // argmax intersection; ties by higher precision (smaller cluster),
    // then lower cluster id
    NodeId best_cluster = -1;
    Count best_inter = 0;
    for (const auto& [cluster, count] : inter) {
      if (best_cluster < 0 || count > best_inter ||
          (count == best_inter &&
           (cluster_size[cluster] < cluster_size[best_cluster] ||
            (cluster_size[cluster] == cluster_size[best_cluster] &&
             cluster < best_cluster)))) {
        best_cluster = cluster;
        best_inter = count;
      }
    }
    CommunityRow row;
    row.community = ci;
    row.size = resolvable;
    row.matched_cluster = best_cluster;
    row.intersection = best_inter;
    row.precision = static_cast<double>(best_inter) /
                    static_cast<double>(cluster_size[best_cluster]);
    row.recall = static_cast<double>(best_inter) / static_cast<double>(resolvable);
    sum_p += row.precision;
    sum_r += row.recall;
    rep.rows.push_back(row);
  }
  if (!rep.rows.empty()) {
    rep.avg_precision = sum_p / static_cast<double>(rep.rows.size());
    rep.avg_recall = sum_r / static_cast<double>(rep.rows.size());
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return rep;
}

std::vector<ThetaSweepPoint> theta_sweep(const Graph& g, const EdgeWeightMap& weights,
                                         const IdMap& ids, const CommunitySet& truth,
                                         const std::vector<Rational>& thetas) {
  if (thetas.empty()) throw InvalidInputError("theta_sweep: no thresholds given");
  std::vector<ThetaSweepPoint> out;
  for (const Rational& theta : thetas) {
    TectonicResult tr = tectonic_cluster(g, weights, ThresholdSpec::normalized(theta));
    PRReport rep = precision_recall(tr.clustering, ids, truth);
    out.push_back({theta, rep.avg_precision, rep.avg_recall,
                   static_cast<Count>(tr.clustering.num_clusters)});
  }
  return out;
}

}  // namespace motifclust
