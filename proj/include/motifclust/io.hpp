#ifndef MOTIFCLUST_IO_HPP
#define MOTIFCLUST_IO_HPP

#include <iosfwd>
#include <string>

#include "motifclust/graph.hpp"

namespace motifclust {

struct LoadReport {
  Count lines_read = 0;
  Count self_loops_dropped = 0;
  Count duplicates_dropped = 0;
};

// SNAP edge-list format: whitespace-separated integer pairs, '#' comments.
// External ids are remapped to dense internal ids in first-seen order.
std::pair<Graph, IdMap> load_edge_list(const std::string& path,
                                       LoadReport* report = nullptr);
std::pair<Graph, IdMap> load_edge_list(std::istream& in, const std::string& name,
                                       LoadReport* report = nullptr);

// "external_node_id<TAB>cluster_id", one line per node, sorted by external id.
void write_clustering_tsv(std::ostream& out, const Clustering& c, const IdMap& ids);
void write_clustering_tsv(const std::string& path, const Clustering& c, const IdMap& ids);

// Reads a clustering emitted by write_clustering_tsv (or by an external tool).
// Node ids are resolved through the id map; unknown ids raise ParseError.
Clustering read_clustering_tsv(const std::string& path, const IdMap& ids);

// SNAP edge-list emit, internal ids translated back to external.
void write_edge_list(std::ostream& out, const Graph& g, const IdMap& ids);
void write_edge_list(const std::string& path, const Graph& g, const IdMap& ids);

}  // namespace motifclust

#endif
