#include "motifclust/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "motifclust/errors.hpp"

namespace motifclust {

namespace {

bool parse_i64(std::string_view tok, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

std::pair<Graph, IdMap> load_edge_list(const std::string& path, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list: " + path);
  return load_edge_list(in, path, report);
}

std::pair<Graph, IdMap> load_edge_list(std::istream& in, const std::string& name,
                                       LoadReport* report) {
  IdMap ids;
  std::vector<std::array<NodeId, 2>> edges;
  std::string line;
  Count lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    ls >> a >> b;
    std::int64_t ua, ub;
    if (!parse_i64(a, ua) || b.empty() || !parse_i64(b, ub))
      throw ParseError(name + ":" + std::to_string(lineno) + ": malformed edge line");
    edges.push_back({ids.intern(ua), ids.intern(ub)});
  }
  LoadReport rep;
  rep.lines_read = lineno;
  Graph g = Graph::from_edges(ids.size(), std::move(edges),
                              &rep.self_loops_dropped, &rep.duplicates_dropped);
  if (report) *report = rep;
  return {std::move(g), std::move(ids)};
}

void write_clustering_tsv(std::ostream& out, const Clustering& c, const IdMap& ids) {
  std::vector<std::pair<std::int64_t, NodeId>> rows;
  rows.reserve(c.labels.size());
  for (NodeId u = 0; u < static_cast<NodeId>(c.labels.size()); ++u)
    rows.emplace_back(ids.to_external(u), c.labels[u]);
  std::sort(rows.begin(), rows.end());
  for (const auto& [ext, label] : rows) out << ext << '\t' << label << '\n';
}

void write_clustering_tsv(const std::string& path, const Clustering& c, const IdMap& ids) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write: " + path);
  write_clustering_tsv(out, c, ids);
}

Clustering read_clustering_tsv(const std::string& path, const IdMap& ids) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open clustering: " + path);
  Clustering c;
  c.labels.assign(ids.size(), -1);
  std::string line;
  Count lineno = 0;
  NodeId max_label = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::int64_t ext;
    NodeId label;
    if (!(ls >> ext >> label))
      throw ParseError(path + ":" + std::to_string(lineno) + ": malformed cluster line");
    auto internal = ids.to_internal(ext);
    if (!internal)
      throw ParseError(path + ":" + std::to_string(lineno) + ": unknown node id");
    c.labels[*internal] = label;
    max_label = std::max(max_label, label);
  }
  for (std::size_t u = 0; u < c.labels.size(); ++u)
    if (c.labels[u] < 0)
      throw ParseError(path + ": clustering is not total (missing node " +
                       std::to_string(ids.to_external(static_cast<NodeId>(u))) + ")");
  c.num_clusters = max_label + 1;
  return c;
}

void write_edge_list(std::ostream& out, const Graph& g, const IdMap& ids) {
  for (const auto& e : g.edges())
    out << ids.to_external(e[0]) << '\t' << ids.to_external(e[1]) << '\n';
}

void write_edge_list(const std::string& path, const Graph& g, const IdMap& ids) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write: " + path);
  write_edge_list(out, g, ids);
}

}  // namespace motifclust
