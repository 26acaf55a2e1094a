#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grape/graph.hpp"

using namespace grape;

namespace {

WeightedGraph path_ab1_bc3() {
  WeightedGraph g;
  VertexId a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c");
  g.add_edge(a, b, 1.0);
  g.add_edge(b, c, 3.0);
  return g;
}

}  // namespace

TEST_CASE("graph construction enforces simplicity") {
  WeightedGraph g;
  VertexId a = g.add_vertex("a"), b = g.add_vertex("b");
  g.add_edge(a, b, 2.0);
  CHECK_THROWS_AS(g.add_edge(a, a, 1.0), GraphError);          // self-loop
  CHECK_THROWS_AS(g.add_edge(a, b, 5.0), GraphError);          // duplicate
  CHECK_THROWS_AS(g.add_edge(b, a, 5.0), GraphError);          // same unordered pair
  CHECK_THROWS_AS(g.add_edge(a, 17, 5.0), GraphError);         // unknown endpoint
  CHECK_THROWS_AS(g.add_edge(a, b, 1.0 / 0.0), GraphError);    // nonfinite weight
  CHECK_THROWS_AS(g.add_vertex("a"), GraphError);              // duplicate label
  CHECK(g.edge_count() == 1);
  CHECK(g.find_vertex("b") == b);
  CHECK(!g.find_vertex("zz").has_value());
}

TEST_CASE("digraphs allow antiparallel arcs but not duplicate arcs") {
  WeightedGraph g(true);
  VertexId a = g.add_vertex("a"), b = g.add_vertex("b");
  g.add_edge(a, b, 1.0);
  g.add_edge(b, a, 2.0);  // antiparallel is fine
  CHECK_THROWS_AS(g.add_edge(a, b, 3.0), GraphError);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("vertex entry level is the minimum incident weight") {
  WeightedGraph g;
  VertexId a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c");
  VertexId isolated = g.add_vertex("alone");
  g.add_edge(a, b, 4.0);
  g.add_edge(a, c, 9.0);
  CHECK(vertex_entry_level(g, a) == 4.0);
  CHECK(vertex_entry_level(g, b) == 4.0);
  CHECK(vertex_entry_level(g, c) == 9.0);
  CHECK(std::isinf(vertex_entry_level(g, isolated)));
  CHECK_THROWS_AS(vertex_entry_level(g, 99), GraphError);
}

TEST_CASE("critical levels are the sorted distinct weights") {
  WeightedGraph single;
  VertexId a = single.add_vertex("a"), b = single.add_vertex("b");
  single.add_edge(a, b, 5.0);
  CHECK(build_filtration(single).critical_levels() == std::vector<double>{5.0});

  WeightedGraph dup;
  VertexId x = dup.add_vertex("x"), y = dup.add_vertex("y"), z = dup.add_vertex("z");
  dup.add_edge(x, y, 2.0);
  dup.add_edge(y, z, 2.0);
  dup.add_edge(x, z, 7.0);
  Filtration filt = build_filtration(dup);
  CHECK(filt.critical_levels() == std::vector<double>{2.0, 7.0});
  CHECK(filt.min_level() == 2.0);
  CHECK(filt.max_level() == 7.0);
}

TEST_CASE("snapshots are sublevel subgraphs without isolated vertices") {
  Filtration filt = build_filtration(path_ab1_bc3());

  Snapshot below = filt.snapshot_at(0.5);
  CHECK(below.edge_ids().empty());
  CHECK(below.vertex_ids().empty());

  Snapshot mid = filt.snapshot_at(2.0);
  CHECK(mid.edge_ids().size() == 1);
  REQUIRE(mid.vertex_ids().size() == 2);
  CHECK(filt.graph().label(mid.vertex_ids()[0]) == "a");
  CHECK(filt.graph().label(mid.vertex_ids()[1]) == "b");
  CHECK(mid.degree(mid.vertex_ids()[0]) == 1);

  Snapshot full = filt.snapshot_at(3.0);
  CHECK(full.edge_ids().size() == 2);
  CHECK(full.vertex_ids().size() == 3);
}

TEST_CASE("snapshots are constant between consecutive critical levels") {
  Filtration filt = build_filtration(path_ab1_bc3());
  CHECK(filt.snapshot_at(1.0).edge_ids() == filt.snapshot_at(2.999).edge_ids());
  CHECK(filt.snapshot_at(3.0).edge_ids() == filt.snapshot_at(1000.0).edge_ids());
}

TEST_CASE("weighted degree sums only snapshot-present incident weights") {
  WeightedGraph g;
  VertexId a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c");
  g.add_edge(a, b, 1.0);
  g.add_edge(a, c, 5.0);
  Filtration filt = build_filtration(g);
  CHECK(filt.snapshot_at(1.0).weighted_degree(a) == 1.0);
  CHECK(filt.snapshot_at(5.0).weighted_degree(a) == 6.0);
}

TEST_CASE("filtrations own an immutable copy of the graph") {
  WeightedGraph g = path_ab1_bc3();
  Filtration filt = build_filtration(g);
  g.add_edge(g.find_vertex("a").value(), g.find_vertex("c").value(), 0.5);
  CHECK(filt.graph().edge_count() == 2);          // unaffected by later mutation
  CHECK(filt.critical_levels().size() == 2);
  CHECK(filt.snapshot_at(0.5).edge_ids().empty());
}

TEST_CASE("edgeless graphs build an empty filtration") {
  WeightedGraph g;
  g.add_vertex("a");
  Filtration filt = build_filtration(g);
  CHECK(filt.critical_levels().empty());
  CHECK_THROWS_AS(filt.min_level(), GraphError);
  CHECK(filt.snapshot_at(10.0).vertex_ids().empty());
}
