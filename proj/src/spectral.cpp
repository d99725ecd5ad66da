#include "motifclust/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "motifclust/errors.hpp"
#include "motifclust/rng.hpp"

namespace motifclust {

namespace {

// Positive-weight subgraph of H restricted to vertices of positive weighted
// degree, in its own compact index space.
struct ActiveSubgraph {
  std::vector<NodeId> to_active;    // node -> active index or -1
  std::vector<NodeId> from_active;  // active index -> node
  std::vector<NodeId> offsets;
  std::vector<NodeId> adj;
  std::vector<double> wadj;
  std::vector<double> wdeg;  // weighted degree per active vertex

  NodeId size() const { return static_cast<NodeId>(from_active.size()); }
};

ActiveSubgraph build_active(const Graph& g, const EdgeWeightMap& w) {
  const NodeId n = g.num_nodes();
  std::vector<double> wdeg_full(n, 0.0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Count t = w[static_cast<std::size_t>(e)];
    if (t < 0) throw InvalidInputError("negative edge weight");
    if (t == 0) continue;
    const auto [u, v] = g.edge(e);
    wdeg_full[u] += static_cast<double>(t);
    wdeg_full[v] += static_cast<double>(t);
  }
  ActiveSubgraph a;
  a.to_active.assign(n, -1);
  for (NodeId u = 0; u < n; ++u) {
    if (wdeg_full[u] > 0) {
      a.to_active[u] = static_cast<NodeId>(a.from_active.size());
      a.from_active.push_back(u);
      a.wdeg.push_back(wdeg_full[u]);
    }
  }
  const NodeId na = a.size();
  a.offsets.assign(static_cast<std::size_t>(na) + 1, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (w[static_cast<std::size_t>(e)] == 0) continue;
    const auto [u, v] = g.edge(e);
    ++a.offsets[a.to_active[u] + 1];
    ++a.offsets[a.to_active[v] + 1];
  }
  for (NodeId i = 0; i < na; ++i) a.offsets[i + 1] += a.offsets[i];
  a.adj.resize(a.offsets[na]);
  a.wadj.resize(a.offsets[na]);
  std::vector<NodeId> cursor(a.offsets.begin(), a.offsets.end() - 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Count t = w[static_cast<std::size_t>(e)];
    if (t == 0) continue;
    const auto [u, v] = g.edge(e);
    const NodeId au = a.to_active[u], av = a.to_active[v];
    a.adj[cursor[au]] = av;
    a.wadj[cursor[au]++] = static_cast<double>(t);
    a.adj[cursor[av]] = au;
    a.wadj[cursor[av]++] = static_cast<double>(t);
  }
  return a;
}

NodeId count_active_components(const ActiveSubgraph& a) {
  const NodeId na = a.size();
  std::vector<char> seen(na, 0);
  NodeId comps = 0;
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < na; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId i = a.offsets[u]; i < a.offsets[u + 1]; ++i) {
        if (!seen[a.adj[i]]) {
          seen[a.adj[i]] = 1;
          queue.push_back(a.adj[i]);
        }
      }
    }
  }
  return comps;
}

using Vec = Eigen::VectorXd;

// y = L x with L = I - D^{-1/2} W D^{-1/2} on the active subgraph.
Vec apply_laplacian(const ActiveSubgraph& a, const Vec& x) {
  const NodeId na = a.size();
  Vec y = x;
  for (NodeId u = 0; u < na; ++u) {
    double acc = 0.0;
    for (NodeId i = a.offsets[u]; i < a.offsets[u + 1]; ++i)
      acc += a.wadj[i] * x[a.adj[i]] / std::sqrt(a.wdeg[a.adj[i]]);
    y[u] -= acc / std::sqrt(a.wdeg[u]);
  }
  return y;
}

}  // namespace

SpectralResult second_eigenpair(const Graph& g, const EdgeWeightMap& weights,
                                const SpectralOptions& opts) {
  if (static_cast<EdgeId>(weights.size()) != g.num_edges())
    throw InvalidInputError("spectral: weight map length mismatch");
  if (opts.tol <= 0) throw InvalidInputError("spectral: tol must be > 0");

  const ActiveSubgraph a = build_active(g, weights);
  const NodeId na = a.size();
  if (na < 2)
    throw DegenerateInputError("spectral: fewer than two vertices carry positive weight");
  const NodeId comps = count_active_components(a);
  if (comps > 1)
    throw DegenerateInputError(
        "spectral: positive-weight subgraph has " + std::to_string(comps) +
        " components (zero eigenvalue multiplicity " + std::to_string(comps) +
        "); process each component separately");

  const long max_iter = opts.max_iter > 0 ? opts.max_iter : 10L * g.num_nodes();

  // Known null vector of the normalized Laplacian.
  Vec u0(na);
  for (NodeId i = 0; i < na; ++i) u0[i] = std::sqrt(a.wdeg[i]);
  u0.normalize();

  // Lanczos with full reorthogonalization, deflated against u0.
  const long m_cap = std::min<long>(na, std::min<long>(max_iter, 600));
  std::vector<Vec> basis;
  basis.reserve(static_cast<std::size_t>(m_cap));
  std::vector<double> alpha, beta;

  Rng rng(0x9e3779b97f4a7c15ULL);  // fixed start for determinism
  Vec q(na);
  for (NodeId i = 0; i < na; ++i) q[i] = rng.next_double() - 0.5;
  q -= u0.dot(q) * u0;
  if (q.norm() < 1e-12) {  // pathological start, perturb first coordinate
    q[0] += 1.0;
    q -= u0.dot(q) * u0;
  }
  q.normalize();
  basis.push_back(q);

  long matvecs = 0;
  double lambda = 0.0, residual = std::numeric_limits<double>::infinity();
  Vec ritz;
  bool converged = false;

  auto solve_ritz = [&](std::size_t k) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<long>(k), static_cast<long>(k));
    for (std::size_t i = 0; i < k; ++i) {
      t(static_cast<long>(i), static_cast<long>(i)) = alpha[i];
      if (i + 1 < k) {
        t(static_cast<long>(i), static_cast<long>(i + 1)) = beta[i];
        t(static_cast<long>(i + 1), static_cast<long>(i)) = beta[i];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const Vec& s = es.eigenvectors().col(0);  // smallest Ritz value
    lambda = es.eigenvalues()[0];
    ritz = Vec::Zero(na);
    for (std::size_t i = 0; i < k; ++i) ritz += s[static_cast<long>(i)] * basis[i];
    ritz -= u0.dot(ritz) * u0;
    ritz.normalize();
    Vec r = apply_laplacian(a, ritz) - lambda * ritz;
    ++matvecs;
    residual = r.norm();
  };

  for (long j = 0; j < m_cap && matvecs < max_iter; ++j) {
    Vec w = apply_laplacian(a, basis.back());
    ++matvecs;
    const double al = basis.back().dot(w);
    alpha.push_back(al);
    w -= al * basis.back();
    if (basis.size() >= 2) w -= beta.back() * basis[basis.size() - 2];
    // full reorthogonalization, including the deflated null direction
    w -= u0.dot(w) * u0;
    for (const Vec& b : basis) w -= b.dot(w) * b;
    const double bt = w.norm();

    const bool exhausted = bt < 1e-13 || basis.size() == static_cast<std::size_t>(na);
    if (exhausted || basis.size() >= 2) {
      if (exhausted || (basis.size() % 4 == 0)) {
        solve_ritz(basis.size());
        if (residual <= opts.tol) { converged = true; break; }
      }
    }
    if (exhausted) break;
    beta.push_back(bt);
    basis.push_back(w / bt);
  }
  if (!converged) {
    solve_ritz(basis.size());
    converged = residual <= opts.tol;
  }
  if (!converged)
    throw ConvergenceError("spectral: residual " + std::to_string(residual) +
                           " above tol after " + std::to_string(matvecs) + " products");

  SpectralResult res;
  res.lambda2 = lambda;
  res.residual = residual;
  res.iterations = matvecs;
  res.eigvec.assign(g.num_nodes(), std::numeric_limits<double>::infinity());
  for (NodeId i = 0; i < na; ++i) res.eigvec[a.from_active[i]] = ritz[i];
  for (NodeId u = 0; u < g.num_nodes(); ++u)
    if (a.to_active[u] < 0) res.excluded.push_back(u);
  return res;
}

SweepResult sweep_cut(const Graph& g, const TriangleCounts& tc,
                      const std::vector<double>& eigvec, bool keep_trace) {
  const NodeId n = g.num_nodes();
  if (static_cast<NodeId>(eigvec.size()) != n)
    throw InvalidInputError("sweep: eigenvector length mismatch");

  SweepResult res;
  res.vertex_order.resize(n);
  std::iota(res.vertex_order.begin(), res.vertex_order.end(), 0);
  std::stable_sort(res.vertex_order.begin(), res.vertex_order.end(),
                   [&](NodeId x, NodeId y) {
                     if (eigvec[x] != eigvec[y]) return eigvec[x] < eigvec[y];
                     return x < y;
                   });

  const Count total_vol3 = 3 * tc.total;
  std::vector<char> in_s(n, 0);
  Count vol3_s = 0;
  std::array<Count, 4> cls{};  // cls[i] = triangles with i vertices in S
  bool found = false;
  Count best_num = 0, best_den = 1;
  NodeId best_size = 0;

  std::vector<NodeId> common;
  for (NodeId i = 0; i < n; ++i) {
    const NodeId u = res.vertex_order[i];
    // move u across the cut: every triangle at u gains one inside vertex
    auto nu = g.neighbors(u);
    for (NodeId v : nu) {
      auto nv = g.neighbors(v);
      std::size_t x = 0, y = 0;
      while (x < nu.size() && y < nv.size()) {
        if (nu[x] < nv[y]) ++x;
        else if (nv[y] < nu[x]) ++y;
        else {
          const NodeId w = nu[x];
          if (w > v) {  // triangle {u,v,w}, counted once
            const int j = in_s[v] + in_s[w];
            if (j > 0) --cls[j];
            ++cls[j + 1];
          }
          ++x;
          ++y;
        }
      }
    }
    in_s[u] = 1;
    vol3_s += tc.per_node[u];

    if (i + 1 == n) break;  // S = V is not a cut
    const Count vol3_sbar = total_vol3 - vol3_s;
    if (vol3_s == 0 || vol3_sbar == 0) continue;
    const Count num = cls[1] + cls[2];
    const Count den = std::min(vol3_s, vol3_sbar);
    if (keep_trace) res.trace.push_back({static_cast<Count>(i + 1), num, den});
    if (!found || static_cast<__int128>(num) * best_den <
                      static_cast<__int128>(best_num) * den) {
      found = true;
      best_num = num;
      best_den = den;
      best_size = i + 1;
    }
  }
  if (!found)
    throw DegenerateInputError("sweep: every prefix has zero triangle volume on a side");
  res.best_prefix_size = best_size;
  res.best_phi3 = {best_num, best_den, 3};
  return res;
}

TriangleSpectralOutput triangle_spectral_cluster(const Graph& g,
                                                 const SpectralOptions& opts) {
  TriangleCounts tc = triangle_counts(g);
  SpectralResult sr = second_eigenpair(g, tc.per_edge, opts);
  SweepResult sw = sweep_cut(g, tc, sr.eigvec);
  VertexSubset cut(g.num_nodes());
  for (NodeId i = 0; i < sw.best_prefix_size; ++i) cut.insert(sw.vertex_order[i]);
  return {std::move(cut), std::move(sw), std::move(sr), std::move(tc)};
}

}  // namespace motifclust
