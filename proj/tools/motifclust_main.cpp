// Command-line front end: seeded, file-in/file-out experiments over the
// library. Every run emits a manifest (parameters, input digests, per-stage
// timings) next to its primary output.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "motifclust/conductance.hpp"
#include "motifclust/errors.hpp"
#include "motifclust/eval.hpp"
#include "motifclust/graph.hpp"
#include "motifclust/io.hpp"
#include "motifclust/motifs.hpp"
#include "motifclust/parallel.hpp"
#include "motifclust/rational.hpp"
#include "motifclust/spectral.hpp"
#include "motifclust/synth.hpp"
#include "motifclust/tectonic.hpp"
#include "motifclust/walks.hpp"

namespace mc = motifclust;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mc::ParseError("cannot open " + path);
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
  char buf[1 << 16];
  while (in.read(buf, sizeof buf), in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i)
      h = (h ^ static_cast<unsigned char>(buf[i])) * 1099511628211ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

// Collects per-stage wall times and input digests for the manifest.
struct RunLog {
  json params = json::object();
  json inputs = json::object();
  json timings = json::object();
  std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

  void input(const std::string& path) { inputs[path] = file_digest(path); }

  void stage(const std::string& name) {
    auto now = std::chrono::steady_clock::now();
    timings[name] = std::chrono::duration<double>(now - mark).count();
    mark = now;
  }

  json manifest(const std::string& subcommand) const {
    json m;
    m["tool"] = "motifclust";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["parameters"] = params;
    m["inputs"] = inputs;
    m["timings_seconds"] = timings;
    return m;
  }
};

// Manifest goes to an explicit --manifest path, else next to the anchor
// output file, else nowhere (stdout-only runs embed it in their JSON).
void emit_manifest(const RunLog& log, const std::string& subcommand,
                   const std::string& manifest_path, const std::string& anchor_out) {
  std::string path = manifest_path;
  if (path.empty() && !anchor_out.empty()) path = anchor_out + ".manifest.json";
  if (path.empty()) return;
  std::ofstream out(path);
  out << log.manifest(subcommand).dump(2) << "\n";
}

std::pair<mc::Graph, mc::IdMap> load_graph(const std::string& path, RunLog& log) {
  log.input(path);
  mc::LoadReport rep;
  auto gm = mc::load_edge_list(path, &rep);
  log.params["edges"] = path;
  if (rep.self_loops_dropped || rep.duplicates_dropped) {
    std::cerr << "note: dropped " << rep.self_loops_dropped << " self-loops, "
              << rep.duplicates_dropped << " duplicate edges\n";
  }
  return gm;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoull(tok));
  }
  if (out.empty()) throw mc::InvalidInputError("empty list: '" + text + "'");
  return out;
}

std::vector<mc::Rational> parse_theta_list(const std::string& text) {
  std::vector<mc::Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(mc::parse_rational(tok));
  }
  if (out.empty()) throw mc::InvalidInputError("empty theta list: '" + text + "'");
  return out;
}

// Subset from a comma list and/or a whitespace-separated file of external ids.
mc::VertexSubset read_subset(const mc::Graph& g, const mc::IdMap& ids,
                             const std::string& nodes_csv, const std::string& subset_file,
                             RunLog& log) {
  mc::VertexSubset s(g.num_nodes());
  auto add = [&](std::int64_t ext) {
    auto internal = ids.to_internal(ext);
    if (!internal)
      throw mc::InvalidInputError("subset node " + std::to_string(ext) + " not in graph");
    s.insert(*internal);
  };
  if (!nodes_csv.empty()) {
    std::stringstream ss(nodes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) add(std::stoll(tok));
    }
  }
  if (!subset_file.empty()) {
    log.input(subset_file);
    std::ifstream in(subset_file);
    if (!in) throw mc::ParseError("cannot open " + subset_file);
    std::int64_t ext;
    while (in >> ext) add(ext);
  }
  if (s.size() == 0) throw mc::InvalidInputError("empty subset: give --nodes or --subset");
  return s;
}

void write_labels_tsv(const std::string& path, const std::vector<mc::NodeId>& labels,
                      const mc::IdMap& ids) {
  mc::Clustering c;
  c.labels = labels;
  mc::NodeId mx = 0;
  for (mc::NodeId l : labels) mx = std::max(mx, l);
  c.num_clusters = mx + 1;
  mc::write_clustering_tsv(path, c, ids);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int run_count(const std::string& edges, const std::string& out,
              const std::string& manifest, int threads) {
  RunLog log;
  auto [g, ids] = load_graph(edges, log);
  log.stage("load");
  log.params["threads"] = mc::resolve_threads(threads);
  mc::TriangleCounts tc = mc::triangle_counts(g, threads);
  log.stage("triangle_count");
  if (!out.empty()) {
    std::ofstream os(out);
    for (mc::EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = g.edge(e);
      os << ids.to_external(u) << '\t' << ids.to_external(v) << '\t'
         << tc.per_edge[static_cast<std::size_t>(e)] << '\n';
    }
    log.stage("write");
    log.params["out"] = out;
  }
  json summary;
  summary["nodes"] = g.num_nodes();
  summary["edges"] = g.num_edges();
  summary["triangles"] = tc.total;
  if (out.empty()) summary["manifest"] = log.manifest("count");
  print_json(summary);
  emit_manifest(log, "count", manifest, out);
  return 0;
}

int run_cluster(const std::string& edges, const std::string& mode,
                const std::string& theta_text, long long cutoff, const std::string& out,
                const std::string& histogram, const std::string& manifest, int threads) {
  RunLog log;
  auto [g, ids] = load_graph(edges, log);
  log.stage("load");
  mc::ThresholdSpec spec;
  if (mode == "tectonic") {
    spec = mc::ThresholdSpec::normalized(mc::parse_rational(theta_text));
    log.params["theta"] = spec.theta.str();  // exact rational actually used
  } else if (mode == "raw") {
    spec = mc::ThresholdSpec::raw(cutoff);
    log.params["cutoff"] = cutoff;
  } else {
    throw mc::InvalidInputError("unknown mode '" + mode + "' (tectonic|raw)");
  }
  log.params["mode"] = mode;
  log.params["threads"] = mc::resolve_threads(threads);
  mc::TriangleCounts tc = mc::triangle_counts(g, threads);
  log.stage("triangle_count");
  mc::TectonicResult res = mc::tectonic_cluster(g, tc.per_edge, spec);
  log.stage("cluster");
  if (!out.empty()) {
    mc::write_clustering_tsv(out, res.clustering, ids);
    log.params["out"] = out;
  } else {
    mc::write_clustering_tsv(std::cout, res.clustering, ids);
  }
  if (!histogram.empty()) {
    std::ofstream hs(histogram);
    hs << "size,count\n";
    for (auto [size, count] : mc::component_histogram(res.clustering))
      hs << size << ',' << count << '\n';
    log.params["histogram"] = histogram;
  }
  log.stage("write");
  std::cerr << "components=" << res.clustering.num_clusters
            << " removed_edges=" << res.removed_edges << "\n";
  emit_manifest(log, "cluster", manifest, out);
  return 0;
}

int run_conductance(const std::string& edges, const std::string& nodes_csv,
                    const std::string& subset_file, int arity, const std::string& out,
                    const std::string& manifest) {
  RunLog log;
  auto [g, ids] = load_graph(edges, log);
  mc::VertexSubset s = read_subset(g, ids, nodes_csv, subset_file, log);
  log.stage("load");
  log.params["arity"] = arity;
  log.params["subset_size"] = s.size();
  mc::ConductanceResult r;
  if (arity == 2) {
    r = mc::phi2(g, s);
  } else if (arity == 3) {
    mc::TriangleCounts tc = mc::triangle_counts(g);
    log.stage("triangle_count");
    r = mc::phi3(g, s, tc);
  } else if (arity == 4) {
    r = mc::phi4(g, s);
  } else {
    throw mc::InvalidInputError("arity must be 2, 3 or 4");
  }
  log.stage("conductance");
  json summary;
  summary["arity"] = r.arity;
  summary["numerator"] = r.num;
  summary["denominator"] = r.den;
  summary["ratio"] = std::to_string(r.num) + "/" + std::to_string(r.den);
  summary["value"] = r.value();
  if (out.empty()) summary["manifest"] = log.manifest("conductance");
  if (!out.empty()) {
    std::ofstream os(out);
    os << summary.dump(2) << "\n";
    log.params["out"] = out;
  }
  print_json(summary);
  emit_manifest(log, "conductance", manifest, out);
  return 0;
}

int run_spectral(const std::string& edges, double tol, long max_iter,
                 const std::string& out, const std::string& summary_path,
                 const std::string& manifest, int threads) {
  RunLog log;
  auto [g, ids] = load_graph(edges, log);
  log.stage("load");
  log.params["tol"] = tol;
  log.params["threads"] = mc::resolve_threads(threads);
  mc::SpectralOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  mc::TriangleCounts tc = mc::triangle_counts(g, threads);
  log.stage("triangle_count");
  mc::SpectralResult sr = mc::second_eigenpair(g, tc.per_edge, opts);
  log.stage("eigenpair");
  mc::SweepResult sw = mc::sweep_cut(g, tc, sr.eigvec);
  log.stage("sweep");

  // cut membership: label 1 = the best sweep prefix
  mc::Clustering cut;
  cut.labels.assign(g.num_nodes(), 0);
  for (mc::NodeId i = 0; i < sw.best_prefix_size; ++i) cut.labels[sw.vertex_order[i]] = 1;
  cut.num_clusters = 2;
  if (!out.empty()) {
    mc::write_clustering_tsv(out, cut, ids);
    log.params["out"] = out;
  } else {
    mc::write_clustering_tsv(std::cout, cut, ids);
  }
  json summary;
  summary["lambda2"] = sr.lambda2;
  summary["phi3_numerator"] = sw.best_phi3.num;
  summary["phi3_denominator"] = sw.best_phi3.den;
  summary["phi3"] = sw.best_phi3.value();
  summary["best_prefix_size"] = sw.best_prefix_size;
  summary["iterations"] = sr.iterations;
  summary["residual"] = sr.residual;
  summary["excluded_vertices"] = sr.excluded.size();
  std::cerr << summary.dump() << "\n";  // JSON-lines summary
  if (!summary_path.empty()) {
    std::ofstream ss(summary_path);
    ss << summary.dump() << "\n";
    log.params["summary"] = summary_path;
  }
  log.stage("write");
  emit_manifest(log, "spectral", manifest, out);
  return 0;
}

int run_walk(const std::string& edges, const std::string& labels_path,
             const std::string& kind_text, long trials, long steps, std::uint64_t seed,
             const std::string& start_text, mc::NodeId start_node, double p, double q,
             int k, const std::string& out, const std::string& manifest) {
  RunLog log;
  auto [g, ids] = load_graph(edges, log);
  log.input(labels_path);
  mc::Clustering labels = mc::read_clustering_tsv(labels_path, ids);
  log.stage("load");
  mc::WalkConfig cfg;
  if (kind_text == "standard") cfg.kind = mc::WalkKind::kStandard;
  else if (kind_text == "biased") cfg.kind = mc::WalkKind::kTriangleBiased;
  else throw mc::InvalidInputError("unknown kind '" + kind_text + "' (standard|biased)");
  cfg.trials = trials;
  cfg.steps = steps;
  cfg.seed = seed;
  if (start_text == "uniform") cfg.start = mc::StartDistribution::kUniform;
  else if (start_text == "motif-volume") cfg.start = mc::StartDistribution::kMotifVolume;
  else if (start_text == "fixed") cfg.start = mc::StartDistribution::kFixed;
  else throw mc::InvalidInputError("unknown start '" + start_text + "'");
  if (cfg.start == mc::StartDistribution::kFixed) {
    auto internal = ids.to_internal(start_node);
    if (!internal) throw mc::InvalidInputError("start node not in graph");
    cfg.fixed_start = *internal;
  }
  log.params["kind"] = kind_text;
  log.params["trials"] = trials;
  log.params["steps"] = steps;
  log.params["seed"] = seed;
  log.params["start"] = start_text;
  mc::TriangleCounts tc = mc::triangle_counts(g);
  log.stage("triangle_count");
  mc::WalkSimulator sim(g, &tc);
  mc::StayEstimate est = mc::empirical_stay_probability(sim, labels.labels, cfg);
  log.stage("walk");
  json summary;
  summary["estimate"] = est.estimate;
  summary["stderr"] = est.stderr_;
  summary["trials"] = est.trials;
  if (p > 0) {  // planted parameters supplied: add the closed form
    summary["theoretical"] = mc::theoretical_stay(cfg.kind, p, q, k);
    log.params["p"] = p;
    log.params["q"] = q;
    log.params["k"] = k;
  }
  if (out.empty()) summary["manifest"] = log.manifest("walk");
  if (!out.empty()) {
    std::ofstream os(out);
    os << summary.dump(2) << "\n";
    log.params["out"] = out;
  }
  print_json(summary);
  emit_manifest(log, "walk", manifest, out);
  return 0;
}

int run_eval(const std::string& edges, const std::string& clusters_path,
             const std::string& communities_path, const std::string& out,
             const std::string& summary_path, const std::string& manifest) {
  RunLog log;
  auto [g, ids] = load_graph(edges, log);
  log.input(clusters_path);
  log.input(communities_path);
  mc::Clustering clustering = mc::read_clustering_tsv(clusters_path, ids);
  mc::CommunitySet truth = mc::load_communities(communities_path);
  log.stage("load");
  log.params["clusters"] = clusters_path;
  log.params["communities"] = communities_path;
  mc::PRReport rep = mc::precision_recall(clustering, ids, truth);
  log.stage("eval");
  if (!out.empty()) {
    std::ofstream os(out);
    os << "community_id,size,cluster,intersection,precision,recall\n";
    for (const auto& row : rep.rows)
      os << row.community << ',' << row.size << ',' << row.matched_cluster << ','
         << row.intersection << ',' << row.precision << ',' << row.recall << '\n';
    log.params["out"] = out;
  }
  json summary;
  summary["p"] = rep.avg_precision;
  summary["r"] = rep.avg_recall;
  summary["T_seconds"] = rep.wall_seconds;
  summary["communities_evaluated"] = rep.rows.size();
  summary["skipped_communities"] = rep.skipped_communities;
  summary["unresolved_ids"] = rep.unresolved_ids;
  if (!summary_path.empty()) {
    std::ofstream ss(summary_path);
    ss << summary.dump(2) << "\n";
    log.params["summary"] = summary_path;
  }
  log.stage("write");
  print_json(summary);
  emit_manifest(log, "eval", manifest, out);
  return 0;
}

int run_sweep(const std::string& edges, const std::string& communities_path,
              const std::string& thetas_text, const std::string& out,
              const std::string& manifest, int threads) {
  RunLog log;
  auto [g, ids] = load_graph(edges, log);
  log.input(communities_path);
  mc::CommunitySet truth = mc::load_communities(communities_path);
  log.stage("load");
  std::vector<mc::Rational> thetas = parse_theta_list(thetas_text);
  json echo = json::array();
  for (const auto& t : thetas) echo.push_back(t.str());
  log.params["thetas"] = echo;
  log.params["communities"] = communities_path;
  log.params["threads"] = mc::resolve_threads(threads);
  mc::TriangleCounts tc = mc::triangle_counts(g, threads);
  log.stage("triangle_count");
  auto points = mc::theta_sweep(g, tc.per_edge, ids, truth, thetas);
  log.stage("sweep");
  std::ostream* os = &std::cout;
  std::ofstream fs;
  if (!out.empty()) {
    fs.open(out);
    os = &fs;
    log.params["out"] = out;
  }
  *os << "theta,precision,recall,clusters\n";
  for (const auto& pt : points)
    *os << pt.theta.str() << ',' << pt.precision << ',' << pt.recall << ','
        << pt.clusters << '\n';
  log.stage("write");
  emit_manifest(log, "sweep", manifest, out);
  return 0;
}

// --- synth family ----------------------------------------------------------

int run_synth_gnp(mc::NodeId n, double p, std::uint64_t seed, const std::string& out,
                  const std::string& manifest) {
  RunLog log;
  log.params["n"] = n;
  log.params["p"] = p;
  log.params["seed"] = seed;
  mc::Graph g = mc::gnp(n, p, seed);
  log.stage("generate");
  mc::IdMap ids = mc::IdMap::identity(n);
  if (!out.empty()) {
    mc::write_edge_list(out, g, ids);
    log.params["out"] = out;
  } else {
    mc::write_edge_list(std::cout, g, ids);
  }
  log.stage("write");
  emit_manifest(log, "synth gnp", manifest, out);
  return 0;
}

int run_synth_planted(mc::NodeId n, mc::NodeId k, double p, double q, std::uint64_t seed,
                      const std::string& out, const std::string& labels_out,
                      const std::string& manifest) {
  RunLog log;
  log.params["n"] = n;
  log.params["k"] = k;
  log.params["p"] = p;
  log.params["q"] = q;
  log.params["seed"] = seed;
  mc::PlantedGraph pg = mc::planted_partition({n, k, p, q, seed});
  log.stage("generate");
  mc::IdMap ids = mc::IdMap::identity(pg.graph.num_nodes());
  if (!out.empty()) {
    mc::write_edge_list(out, pg.graph, ids);
    log.params["out"] = out;
  } else {
    mc::write_edge_list(std::cout, pg.graph, ids);
  }
  if (!labels_out.empty()) {
    write_labels_tsv(labels_out, pg.labels, ids);
    log.params["labels"] = labels_out;
  }
  log.stage("write");
  emit_manifest(log, "synth planted", manifest, out);
  return 0;
}

int run_synth_recovery(mc::NodeId n, const std::string& seeds_text, const std::string& out,
                       const std::string& manifest) {
  RunLog log;
  std::vector<std::uint64_t> seeds = parse_u64_list(seeds_text);
  log.params["n"] = n;
  log.params["seeds"] = seeds;
  mc::RecoveryReport rep = mc::recovery_experiment(n, seeds);
  log.stage("experiment");
  json summary;
  summary["n"] = rep.n;
  summary["p"] = rep.p;
  summary["q"] = rep.q;
  summary["threshold"] = rep.threshold;
  summary["successes"] = rep.successes;
  summary["runs"] = json::array();
  for (const auto& run : rep.runs) {
    json r;
    r["seed"] = run.seed;
    r["components"] = run.components;
    r["exact_match"] = run.exact_match;
    r["removed_edges"] = run.removed_edges;
    summary["runs"].push_back(r);
  }
  if (out.empty()) summary["manifest"] = log.manifest("synth recovery");
  if (!out.empty()) {
    std::ofstream os(out);
    os << summary.dump(2) << "\n";
    log.params["out"] = out;
  }
  print_json(summary);
  emit_manifest(log, "synth recovery", manifest, out);
  return 0;
}

int run_synth_plant_clique(const std::string& edges, mc::NodeId s_size, mc::NodeId x_size,
                           std::uint64_t seed, const std::string& out,
                           const std::string& manifest) {
  RunLog log;
  auto [g, ids] = load_graph(edges, log);
  log.stage("load");
  log.params["s_size"] = s_size;
  log.params["x_size"] = x_size;
  log.params["seed"] = seed;
  mc::PlantCliqueResult res = mc::plant_clique(g, s_size, x_size, seed);
  log.stage("plant");
  if (!out.empty()) {
    mc::write_edge_list(out, res.graph, ids);
    log.params["out"] = out;
  } else {
    mc::write_edge_list(std::cout, res.graph, ids);
  }
  json summary;
  summary["added_edges"] = res.added_edges;
  json sj = json::array(), xj = json::array();
  for (mc::NodeId u : res.s) sj.push_back(ids.to_external(u));
  for (mc::NodeId u : res.x) xj.push_back(ids.to_external(u));
  summary["s"] = sj;
  summary["x"] = xj;
  std::cerr << summary.dump() << "\n";
  log.stage("write");
  emit_manifest(log, "synth plant-clique", manifest, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motif-aware graph clustering: triangle counting, "
               "triangle-connectivity clustering, spectral sweep cuts, "
               "planted-partition experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  int threads = 0;
  app.add_option("--threads", threads,
                 "thread cap (0 = MOTIFCLUST_THREADS env, then all cores)");

  // shared option storage; each subcommand binds the subset it uses
  std::string edges, out, manifest, histogram, summary_path, labels_path;
  std::string mode = "tectonic", theta = "0.06", kind = "standard", start = "uniform";
  std::string nodes_csv, subset_file, clusters_path, communities_path;
  std::string thetas_text, seeds_text = "1,2,3,4,5";
  long long cutoff = 0;
  int arity = 3, k = 2;
  double tol = 1e-8, p = 0.0, q = 0.0;
  long max_iter = 0, trials = 100000, steps = 1;
  std::uint64_t seed = 0;
  mc::NodeId n = 0, kblocks = 2, s_size = 0, x_size = 0, start_node = 0;

  auto* count = app.add_subcommand("count", "exact per-edge triangle counts");
  count->add_option("--edges", edges)->required();
  count->add_option("--out", out, "TSV u<TAB>v<TAB>t(u,v)");
  count->add_option("--manifest", manifest);

  auto* cluster = app.add_subcommand(
      "cluster", "remove weak-triangle edges, output connected components");
  cluster->add_option("--edges", edges)->required();
  cluster->add_option("--mode", mode, "tectonic|raw (default tectonic)");
  cluster->add_option("--theta", theta,
                      "normalized threshold, decimal or p/q (default 0.06); "
                      "remove t(u,v)/(deg u + deg v) < theta");
  cluster->add_option("--cutoff", cutoff, "raw mode: remove t(e) <= cutoff");
  cluster->add_option("--out", out, "clustering TSV (default stdout)");
  cluster->add_option("--histogram", histogram, "component size histogram CSV");
  cluster->add_option("--manifest", manifest);

  auto* conductance = app.add_subcommand(
      "conductance", "edge/triangle/4-clique conductance of a vertex subset");
  conductance->add_option("--edges", edges)->required();
  conductance->add_option("--nodes", nodes_csv, "comma-separated external ids");
  conductance->add_option("--subset", subset_file, "file of whitespace-separated ids");
  conductance->add_option("--arity", arity, "2, 3 or 4 (default 3)");
  conductance->add_option("--out", out, "also write the JSON summary here");
  conductance->add_option("--manifest", manifest);

  auto* spectral = app.add_subcommand(
      "spectral", "second eigenvector of the triangle-weighted normalized "
                  "Laplacian + best sweep cut");
  spectral->add_option("--edges", edges)->required();
  spectral->add_option("--tol", tol, "eigen-residual tolerance (default 1e-8)");
  spectral->add_option("--max-iter", max_iter, "0 = 10n");
  spectral->add_option("--out", out, "cut membership TSV (default stdout)");
  spectral->add_option("--summary", summary_path, "JSON-lines summary file");
  spectral->add_option("--manifest", manifest);

  auto* synth = app.add_subcommand("synth", "seeded graph generators");
  synth->require_subcommand(1);
  auto* sgnp = synth->add_subcommand("gnp", "Erdos-Renyi G(n,p)");
  sgnp->add_option("--n", n)->required();
  sgnp->add_option("--p", p)->required();
  sgnp->add_option("--seed", seed);
  sgnp->add_option("--out", out, "edge list (default stdout)");
  sgnp->add_option("--manifest", manifest);
  auto* splanted = synth->add_subcommand(
      "planted", "k blocks of n vertices, intra prob p, inter prob q");
  splanted->add_option("--n", n, "vertices per block")->required();
  splanted->add_option("--k", kblocks)->required();
  splanted->add_option("--p", p)->required();
  splanted->add_option("--q", q)->required();
  splanted->add_option("--seed", seed);
  splanted->add_option("--out", out, "edge list (default stdout)");
  splanted->add_option("--labels", labels_path, "block labels TSV");
  splanted->add_option("--manifest", manifest);
  auto* srecovery = synth->add_subcommand(
      "recovery", "two-block recovery experiment: p=3 ln n/sqrt(n), "
                  "q=ln n/sqrt(n), remove t(e) < 8 ln^2 n (natural log)");
  srecovery->add_option("--n", n, "vertices per block")->required();
  srecovery->add_option("--seeds", seeds_text, "comma list (default 1,2,3,4,5)");
  srecovery->add_option("--out", out, "JSON report file");
  srecovery->add_option("--manifest", manifest);
  auto* sclique = synth->add_subcommand("plant-clique",
                                        "complete a clique on X inside a random S");
  sclique->add_option("--edges", edges)->required();
  sclique->add_option("--s-size", s_size)->required();
  sclique->add_option("--x-size", x_size)->required();
  sclique->add_option("--seed", seed);
  sclique->add_option("--out", out, "edge list (default stdout)");
  sclique->add_option("--manifest", manifest);

  auto* walk = app.add_subcommand(
      "walk", "Monte-Carlo one-step same-cluster probability of a random walk");
  walk->add_option("--edges", edges)->required();
  walk->add_option("--labels", labels_path, "TSV node<TAB>cluster")->required();
  walk->add_option("--kind", kind, "standard|biased");
  walk->add_option("--trials", trials);
  walk->add_option("--steps", steps, "burn-in + 1 measured step (default 1)");
  walk->add_option("--seed", seed);
  walk->add_option("--start", start, "uniform|motif-volume|fixed");
  walk->add_option("--start-node", start_node, "external id when --start fixed");
  walk->add_option("--p", p, "planted intra prob (adds closed-form value)");
  walk->add_option("--q", q, "planted inter prob");
  walk->add_option("--k", k, "planted block count");
  walk->add_option("--out", out, "also write the JSON summary here");
  walk->add_option("--manifest", manifest);

  auto* eval = app.add_subcommand(
      "eval", "precision/recall of a clustering against ground-truth communities");
  eval->add_option("--edges", edges)->required();
  eval->add_option("--clusters", clusters_path, "clustering TSV")->required();
  eval->add_option("--communities", communities_path,
                   "one community per line, whitespace-separated ids")->required();
  eval->add_option("--out", out, "per-community CSV");
  eval->add_option("--summary", summary_path, "aggregate JSON file");
  eval->add_option("--manifest", manifest);

  auto* sweep = app.add_subcommand(
      "sweep", "cluster + evaluate across a list of normalized thresholds");
  sweep->add_option("--edges", edges)->required();
  sweep->add_option("--communities", communities_path)->required();
  sweep->add_option("--thetas", thetas_text, "comma list, decimal or p/q")->required();
  sweep->add_option("--out", out, "CSV theta,precision,recall,clusters");
  sweep->add_option("--manifest", manifest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (*count) return run_count(edges, out, manifest, threads);
    if (*cluster)
      return run_cluster(edges, mode, theta, cutoff, out, histogram, manifest, threads);
    if (*conductance)
      return run_conductance(edges, nodes_csv, subset_file, arity, out, manifest);
    if (*spectral)
      return run_spectral(edges, tol, max_iter, out, summary_path, manifest, threads);
    if (*sgnp) return run_synth_gnp(n, p, seed, out, manifest);
    if (*splanted)
      return run_synth_planted(n, kblocks, p, q, seed, out, labels_path, manifest);
    if (*srecovery) return run_synth_recovery(n, seeds_text, out, manifest);
    if (*sclique)
      return run_synth_plant_clique(edges, s_size, x_size, seed, out, manifest);
    if (*walk)
      return run_walk(edges, labels_path, kind, trials, steps, seed, start, start_node,
                      p, q, k, out, manifest);
    if (*eval)
      return run_eval(edges, clusters_path, communities_path, out, summary_path, manifest);
    if (*sweep)
      return run_sweep(edges, communities_path, thetas_text, out, manifest, threads);
  } catch (const mc::DegenerateInputError& e) {
    std::cerr << "error (degenerate input): " << e.what() << "\n";
    return 3;
  } catch (const mc::ParseError& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return 1;
  } catch (const mc::InvalidInputError& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return 1;
  } catch (const mc::ConvergenceError& e) {
    std::cerr << "error (no convergence): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
