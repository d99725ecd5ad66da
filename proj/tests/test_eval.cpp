#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "motifclust/errors.hpp"
#include "motifclust/eval.hpp"
#include "motifclust/synth.hpp"
#include "motifclust/tectonic.hpp"

using namespace motifclust;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    char tmpl[] = "/tmp/motifclust_test_XXXXXX";
    int fd = mkstemp(tmpl);
    REQUIRE(fd >= 0);
    close(fd);
    path = tmpl;
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("load_communities parses, dedups and skips empty lines") {
  TempFile f("0 1 2\n3 4\n\n5 5 6\n");
  CommunitySet cs = load_communities(f.path);
  REQUIRE(cs.communities.size() == 3);
  CHECK(cs.communities[0].size() == 3);
  CHECK(cs.communities[1].size() == 2);
  CHECK(cs.communities[2].size() == 2);  // duplicate 5 removed

  TempFile bad("1 2 x\n");
  CHECK_THROWS_AS(load_communities(bad.path), ParseError);
}

TEST_CASE("precision and recall, hand-checked") {
  // clusters {0,1} and {2,3}; truth {0,1,2}
  IdMap ids = IdMap::identity(4);
  Clustering c;
  c.labels = {0, 0, 1, 1};
  c.num_clusters = 2;
  CommunitySet truth;
  truth.communities = {{0, 1, 2}};
  PRReport rep = precision_recall(c, ids, truth);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].precision == doctest::Approx(1.0));
  CHECK(rep.rows[0].recall == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("identical partition scores perfect") {
  IdMap ids = IdMap::identity(6);
  Clustering c;
  c.labels = {0, 0, 0, 1, 1, 1};
  c.num_clusters = 2;
  CommunitySet truth;
  truth.communities = {{0, 1, 2}, {3, 4, 5}};
  PRReport rep = precision_recall(c, ids, truth);
  CHECK(rep.avg_precision == doctest::Approx(1.0));
  CHECK(rep.avg_recall == doctest::Approx(1.0));
}

TEST_CASE("all-singletons clustering: precision 1, recall 1/|S|") {
  IdMap ids = IdMap::identity(5);
  Clustering c;
  c.labels = {0, 1, 2, 3, 4};
  c.num_clusters = 5;
  CommunitySet truth;
  truth.communities = {{0, 1, 2, 3}};
  PRReport rep = precision_recall(c, ids, truth);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].precision == doctest::Approx(1.0));
  CHECK(rep.rows[0].recall == doctest::Approx(0.25));
}

TEST_CASE("unresolvable ids are counted; fully-absent communities skipped") {
  IdMap ids = IdMap::identity(3);
  Clustering c;
  c.labels = {0, 0, 0};
  c.num_clusters = 1;
  CommunitySet truth;
  truth.communities = {{0, 1, 99}, {500, 501}};
  PRReport rep = precision_recall(c, ids, truth);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].size == 2);  // resolvable subset
  CHECK(rep.rows[0].recall == doctest::Approx(1.0));
  CHECK(rep.unresolved_ids == 3);
  CHECK(rep.skipped_communities == 1);
}

TEST_CASE("scores invariant under cluster relabeling and community order") {
  IdMap ids = IdMap::identity(6);
  Clustering a;
  a.labels = {0, 0, 1, 1, 2, 2};
  a.num_clusters = 3;
  Clustering b;
  b.labels = {2, 2, 0, 0, 1, 1};
  b.num_clusters = 3;
  CommunitySet t1;
  t1.communities = {{0, 1, 2}, {4, 5}};
  CommunitySet t2;
  t2.communities = {{4, 5}, {0, 1, 2}};
  PRReport ra = precision_recall(a, ids, t1);
  PRReport rb = precision_recall(b, ids, t2);
  CHECK(ra.avg_precision == doctest::Approx(rb.avg_precision));
  CHECK(ra.avg_recall == doctest::Approx(rb.avg_recall));
}

TEST_CASE("aggregates equal the mean of per-community columns") {
  IdMap ids = IdMap::identity(8);
  Clustering c;
  c.labels = {0, 0, 0, 1, 1, 2, 2, 2};
  c.num_clusters = 3;
  CommunitySet truth;
  truth.communities = {{0, 1}, {2, 3, 4}, {5, 6, 7}, {1, 6}};
  PRReport rep = precision_recall(c, ids, truth);
  double sp = 0, sr = 0;
  for (const auto& row : rep.rows) { sp += row.precision; sr += row.recall; }
  CHECK(rep.avg_precision == doctest::Approx(sp / rep.rows.size()));
  CHECK(rep.avg_recall == doctest::Approx(sr / rep.rows.size()));
}

TEST_CASE("theta sweep recovers planted clusters perfectly at 0.06") {
  PlantedGraph pg = planted_partition({100, 4, 0.5, 0.005, 31});
  TriangleCounts tc = triangle_counts(pg.graph);
  IdMap ids = IdMap::identity(pg.graph.num_nodes());
  CommunitySet truth;
  truth.communities.resize(4);
  for (NodeId u = 0; u < pg.graph.num_nodes(); ++u)
    truth.communities[pg.labels[u]].push_back(u);
  auto points = theta_sweep(pg.graph, tc.per_edge, ids, truth, {parse_rational("0.06")});
  REQUIRE(points.size() == 1);
  CHECK(points[0].precision == doctest::Approx(1.0));
  CHECK(points[0].recall == doctest::Approx(1.0));
}
