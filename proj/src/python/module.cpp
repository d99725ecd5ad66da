// Python bindings for the main operations. Vertex subsets are plain lists of
// node ids; clusterings are lists of labels.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motifclust/conductance.hpp"
#include "motifclust/errors.hpp"
#include "motifclust/eval.hpp"
#include "motifclust/graph.hpp"
#include "motifclust/io.hpp"
#include "motifclust/motifs.hpp"
#include "motifclust/rational.hpp"
#include "motifclust/spectral.hpp"
#include "motifclust/synth.hpp"
#include "motifclust/tectonic.hpp"
#include "motifclust/walks.hpp"

namespace py = pybind11;
using namespace motifclust;

namespace {

VertexSubset make_subset(const Graph& g, const std::vector<NodeId>& members) {
  VertexSubset s(g.num_nodes());
  for (NodeId u : members) {
    if (u < 0 || u >= g.num_nodes())
      throw InvalidInputError("subset node out of range: " + std::to_string(u));
    s.insert(u);
  }
  return s;
}

Clustering make_clustering(const std::vector<NodeId>& labels) {
  Clustering c;
  c.labels = labels;
  NodeId mx = -1;
  for (NodeId l : labels) {
    if (l < 0) throw InvalidInputError("negative cluster label");
    mx = std::max(mx, l);
  }
  c.num_clusters = mx + 1;
  return c;
}

py::dict conductance_dict(const ConductanceResult& r) {
  py::dict d;
  d["arity"] = r.arity;
  d["numerator"] = r.num;
  d["denominator"] = r.den;
  d["value"] = r.value();
  return d;
}

WalkKind parse_kind(const std::string& kind) {
  if (kind == "standard") return WalkKind::kStandard;
  if (kind == "biased") return WalkKind::kTriangleBiased;
  throw InvalidInputError("kind must be 'standard' or 'biased'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Motif-aware graph clustering: triangle counting, triangle-"
            "connectivity clustering, spectral sweep cuts, planted-partition "
            "experiments";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError",
                                               PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](NodeId n, const std::vector<std::array<NodeId, 2>>& edges) {
            return Graph::from_edges(n, edges);
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_nodes", &Graph::num_nodes)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", [](const Graph& g) { return g.edges(); })
      .def("degree", &Graph::degree, py::arg("u"))
      .def("neighbors",
           [](const Graph& g, NodeId u) {
             auto nb = g.neighbors(u);
             return std::vector<NodeId>(nb.begin(), nb.end());
           },
           py::arg("u"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_nodes()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  py::class_<IdMap>(m, "IdMap")
      .def("to_external", &IdMap::to_external, py::arg("internal"))
      .def("to_internal",
           [](const IdMap& ids, std::int64_t ext) -> py::object {
             auto r = ids.to_internal(ext);
             if (!r) return py::none();
             return py::int_(*r);
           },
           py::arg("external"))
      .def_property_readonly("size", &IdMap::size)
      .def_static("identity", &IdMap::identity, py::arg("n"));

  py::class_<TriangleCounts>(m, "TriangleCounts")
      .def_readonly("per_edge", &TriangleCounts::per_edge)
      .def_readonly("per_node", &TriangleCounts::per_node)
      .def_readonly("total", &TriangleCounts::total);

  m.def("load_edge_list",
        [](const std::string& path) { return load_edge_list(path); },
        py::arg("path"),
        "Load a SNAP edge list; returns (Graph, IdMap).");

  m.def("triangle_counts",
        [](const Graph& g, int threads) { return triangle_counts(g, threads); },
        py::arg("graph"), py::arg("threads") = 0,
        "Exact per-edge and per-node triangle counts.");

  m.def("k4_counts",
        [](const Graph& g) {
          K4Counts k = k4_counts(g);
          return py::make_tuple(k.per_node, k.total);
        },
        py::arg("graph"), "Per-node and total 4-clique counts.");

  m.def("classify_motifs",
        [](const Graph& g, const std::vector<NodeId>& members, int arity) {
          MotifClassCounts cls = classify_motifs(g, make_subset(g, members), arity);
          std::vector<Count> out(cls.counts.begin(), cls.counts.begin() + arity);
          return out;
        },
        py::arg("graph"), py::arg("subset"), py::arg("arity") = 3,
        "counts[i-1] = motifs with exactly i vertices in the subset.");

  m.def("phi2",
        [](const Graph& g, const std::vector<NodeId>& members) {
          return conductance_dict(phi2(g, make_subset(g, members)));
        },
        py::arg("graph"), py::arg("subset"));
  m.def("phi3",
        [](const Graph& g, const TriangleCounts& tc, const std::vector<NodeId>& members) {
          return conductance_dict(phi3(g, make_subset(g, members), tc));
        },
        py::arg("graph"), py::arg("triangle_counts"), py::arg("subset"));
  m.def("phi4",
        [](const Graph& g, const std::vector<NodeId>& members) {
          return conductance_dict(phi4(g, make_subset(g, members)));
        },
        py::arg("graph"), py::arg("subset"));

  m.def("connected_components",
        [](const Graph& g) {
          Clustering c = connected_components(g);
          return py::make_tuple(c.labels, c.num_clusters);
        },
        py::arg("graph"));

  m.def("tectonic",
        [](const Graph& g, const EdgeWeightMap& weights, const std::string& theta) {
          TectonicResult r =
              tectonic_cluster(g, weights, ThresholdSpec::normalized(parse_rational(theta)));
          py::dict d;
          d["labels"] = r.clustering.labels;
          d["num_clusters"] = r.clustering.num_clusters;
          d["removed_edges"] = r.removed_edges;
          return d;
        },
        py::arg("graph"), py::arg("weights"), py::arg("theta") = "0.06",
        "Remove edges with t(u,v)/(deg(u)+deg(v)) < theta, output components.");

  m.def("raw_filter",
        [](const Graph& g, const EdgeWeightMap& weights, Count cutoff) {
          TectonicResult r = tectonic_cluster(g, weights, ThresholdSpec::raw(cutoff));
          py::dict d;
          d["labels"] = r.clustering.labels;
          d["num_clusters"] = r.clustering.num_clusters;
          d["removed_edges"] = r.removed_edges;
          return d;
        },
        py::arg("graph"), py::arg("weights"), py::arg("cutoff") = 0,
        "Remove edges with t(e) <= cutoff, output components.");

  m.def("component_histogram",
        [](const std::vector<NodeId>& labels) {
          return component_histogram(make_clustering(labels));
        },
        py::arg("labels"), "(size, count) pairs sorted by size.");

  m.def("spectral_cluster",
        [](const Graph& g, double tol, long max_iter) {
          SpectralOptions opts;
          opts.tol = tol;
          opts.max_iter = max_iter;
          TriangleSpectralOutput out = triangle_spectral_cluster(g, opts);
          py::dict d;
          d["lambda2"] = out.spectral.lambda2;
          d["eigvec"] = out.spectral.eigvec;
          d["iterations"] = out.spectral.iterations;
          d["cut"] = out.cut.members();
          d["best_prefix_size"] = out.sweep.best_prefix_size;
          d["phi3"] = conductance_dict(out.sweep.best_phi3);
          d["vertex_order"] = out.sweep.vertex_order;
          return d;
        },
        py::arg("graph"), py::arg("tol") = 1e-8, py::arg("max_iter") = 0,
        "Triangle-weighted normalized-Laplacian sweep cut.");

  m.def("gnp", &gnp, py::arg("n"), py::arg("p"), py::arg("seed") = 0);

  m.def("planted_partition",
        [](NodeId n, NodeId k, double p, double q, std::uint64_t seed) {
          PlantedGraph pg = planted_partition({n, k, p, q, seed});
          return py::make_tuple(pg.graph, pg.labels);
        },
        py::arg("n"), py::arg("k"), py::arg("p"), py::arg("q"), py::arg("seed") = 0,
        "k blocks of n vertices; returns (Graph, labels).");

  m.def("recovery_experiment",
        [](NodeId n, const std::vector<std::uint64_t>& seeds) {
          RecoveryReport rep = recovery_experiment(n, seeds);
          py::dict d;
          d["n"] = rep.n;
          d["p"] = rep.p;
          d["q"] = rep.q;
          d["threshold"] = rep.threshold;
          d["successes"] = rep.successes;
          py::list runs;
          for (const auto& run : rep.runs) {
            py::dict r;
            r["seed"] = run.seed;
            r["components"] = run.components;
            r["exact_match"] = run.exact_match;
            r["removed_edges"] = run.removed_edges;
            runs.append(r);
          }
          d["runs"] = runs;
          return d;
        },
        py::arg("n"), py::arg("seeds"),
        "Two-block recovery: p=3 ln n/sqrt(n), q=ln n/sqrt(n), drop "
        "t(e) < 8 ln^2 n.");

  m.def("theoretical_stay",
        [](const std::string& kind, double p, double q, int k) {
          return theoretical_stay(parse_kind(kind), p, q, k);
        },
        py::arg("kind"), py::arg("p"), py::arg("q"), py::arg("k"),
        "Closed-form one-step same-block probability on the planted model.");

  m.def("empirical_stay",
        [](const Graph& g, const std::vector<NodeId>& labels, const std::string& kind,
           long trials, std::uint64_t seed) {
          if (static_cast<NodeId>(labels.size()) != g.num_nodes())
            throw InvalidInputError("labels length != num_nodes");
          TriangleCounts tc = triangle_counts(g);
          WalkSimulator sim(g, &tc);
          WalkConfig cfg;
          cfg.kind = parse_kind(kind);
          cfg.trials = trials;
          cfg.seed = seed;
          StayEstimate est = empirical_stay_probability(sim, labels, cfg);
          return py::make_tuple(est.estimate, est.stderr_);
        },
        py::arg("graph"), py::arg("labels"), py::arg("kind") = "standard",
        py::arg("trials") = 100000, py::arg("seed") = 0,
        "Monte-Carlo one-step same-cluster probability; returns "
        "(estimate, stderr).");

  m.def("precision_recall",
        [](const std::vector<NodeId>& labels, const IdMap& ids,
           const std::vector<std::vector<std::int64_t>>& communities) {
          CommunitySet truth;
          truth.communities = communities;
          PRReport rep = precision_recall(make_clustering(labels), ids, truth);
          py::dict d;
          d["precision"] = rep.avg_precision;
          d["recall"] = rep.avg_recall;
          d["skipped_communities"] = rep.skipped_communities;
          d["unresolved_ids"] = rep.unresolved_ids;
          py::list rows;
          for (const auto& row : rep.rows) {
            py::dict r;
            r["community"] = row.community;
            r["size"] = row.size;
            r["cluster"] = row.matched_cluster;
            r["intersection"] = row.intersection;
            r["precision"] = row.precision;
            r["recall"] = row.recall;
            rows.append(r);
          }
          d["rows"] = rows;
          return d;
        },
        py::arg("labels"), py::arg("ids"), py::arg("communities"),
        "Per-community precision/recall against ground truth (external ids).");

  m.def("load_communities",
        [](const std::string& path) { return load_communities(path).communities; },
        py::arg("path"), "One community per line, whitespace-separated ids.");

  m.attr("__version__") = "0.1.0";
}
