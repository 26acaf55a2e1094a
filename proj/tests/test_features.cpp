#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "grape/features.hpp"
#include "grape/random_graphs.hpp"

using namespace grape;

namespace {

std::vector<FeatureSet> sets_of(const std::string& feature, const WeightedGraph& g, double level,
                                FeatureOptions opts = {}) {
  Filtration filt = build_filtration(g);
  return enumerate_fsets(find_feature(feature), filt.snapshot_at(level), opts);
}

std::set<std::string> vertex_singletons(const std::vector<FeatureSet>& sets,
                                        const WeightedGraph& g) {
  std::set<std::string> out;
  for (const FeatureSet& s : sets) {
    REQUIRE(s.size() == 1);
    out.insert(element_labels(s, g)[0]);
  }
  return out;
}

WeightedGraph star_center_c() {
  WeightedGraph g;
  VertexId c = g.add_vertex("c");
  g.add_edge(c, g.add_vertex("x"), 1.0);
  g.add_edge(c, g.add_vertex("y"), 2.0);
  g.add_edge(c, g.add_vertex("z"), 3.0);
  return g;
}

WeightedGraph triangle(double w1 = 1.0, double w2 = 2.0, double w3 = 3.0) {
  WeightedGraph g;
  VertexId a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c");
  g.add_edge(a, b, w1);
  g.add_edge(b, c, w2);
  g.add_edge(a, c, w3);
  return g;
}

// vertices with every incident snapshot edge: used for subgraph-persistence
// checks below
bool all_elements_present(const FeatureSet& s, const Snapshot& snap) {
  for (ElementCode c : s.elems) {
    if (element_is_edge(c)) {
      const auto& ids = snap.edge_ids();
      if (!std::binary_search(ids.begin(), ids.end(), element_id(c))) return false;
    } else if (!snap.has_vertex(element_id(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("degree hubs need strictly dominating degree") {
  WeightedGraph star = star_center_c();
  CHECK(vertex_singletons(sets_of("hub", star, 3.0), star) == std::set<std::string>{"c"});
  // a single edge is a degree tie: no hub on either side
  CHECK(sets_of("hub", star, 1.0).empty());
  // all equal degrees on a triangle: no hubs
  WeightedGraph tri = triangle();
  CHECK(sets_of("hub", tri, 3.0).empty());
  // the non-strict variant turns ties into hubs
  FeatureOptions nonstrict;
  nonstrict.hub_nonstrict = true;
  CHECK(vertex_singletons(sets_of("hub", tri, 3.0, nonstrict), tri) ==
        std::set<std::string>{"a", "b", "c"});
}

TEST_CASE("weighted hubs compare snapshot-present incident weight sums") {
  // triangle: weighted degrees at level 3 are a: 1+3=4, b: 1+2=3, c: 2+3=5
  WeightedGraph tri = triangle();
  CHECK(vertex_singletons(sets_of("whub", tri, 3.0), tri) == std::set<std::string>{"c"});
  // at level 2 the path a-b-c has sums a:1, b:3, c:2 -> b wins
  CHECK(vertex_singletons(sets_of("whub", tri, 2.0), tri) == std::set<std::string>{"b"});
}

TEST_CASE("eulerian sets are maximal connected even-degree vertex sets") {
  WeightedGraph tri = triangle();
  // at level 2 only the path a-b-c is present: odd endpoints, nothing Eulerian
  CHECK(sets_of("eulerian", tri, 2.0).empty());
  auto full = sets_of("eulerian", tri, 3.0);
  REQUIRE(full.size() == 1);
  CHECK(element_labels(full[0], tri) == std::vector<std::string>{"a", "b", "c"});

  // two triangles sharing one vertex: a single Eulerian set spanning both
  WeightedGraph eight;
  VertexId a = eight.add_vertex("a"), b = eight.add_vertex("b"), c = eight.add_vertex("c");
  VertexId d = eight.add_vertex("d"), e = eight.add_vertex("e");
  eight.add_edge(a, b, 1.0);
  eight.add_edge(b, c, 1.0);
  eight.add_edge(a, c, 1.0);
  eight.add_edge(c, d, 1.0);
  eight.add_edge(d, e, 1.0);
  eight.add_edge(c, e, 1.0);
  auto joined = sets_of("eulerian", eight, 1.0);
  REQUIRE(joined.size() == 1);
  CHECK(joined[0].size() == 5);

  // two disjoint triangles: two maximal Eulerian sets
  WeightedGraph pair;
  VertexId p = pair.add_vertex("p"), q = pair.add_vertex("q"), r = pair.add_vertex("r");
  VertexId x = pair.add_vertex("x"), y = pair.add_vertex("y"), z = pair.add_vertex("z");
  pair.add_edge(p, q, 1.0);
  pair.add_edge(q, r, 1.0);
  pair.add_edge(p, r, 1.0);
  pair.add_edge(x, y, 1.0);
  pair.add_edge(y, z, 1.0);
  pair.add_edge(x, z, 1.0);
  CHECK(sets_of("eulerian", pair, 1.0).size() == 2);
}

TEST_CASE("independent sets and their maximal variant") {
  WeightedGraph path;
  VertexId a = path.add_vertex("a"), b = path.add_vertex("b"), c = path.add_vertex("c");
  path.add_edge(a, b, 1.0);
  path.add_edge(b, c, 2.0);
  auto all = sets_of("independent", path, 2.0);
  // {a}, {b}, {c}, {a,c}
  CHECK(all.size() == 4);
  auto maximal = sets_of("max-independent", path, 2.0);
  // {a,c} and {b}, in canonical element order
  REQUIRE(maximal.size() == 2);
  CHECK(element_labels(maximal[0], path) == std::vector<std::string>{"a", "c"});
  CHECK(element_labels(maximal[1], path) == std::vector<std::string>{"b"});

  WeightedGraph tri = triangle();
  CHECK(sets_of("max-independent", tri, 3.0).size() == 3);  // each single vertex
}

TEST_CASE("matchings and maximal matchings") {
  WeightedGraph path;
  VertexId a = path.add_vertex("a"), b = path.add_vertex("b"), c = path.add_vertex("c");
  path.add_edge(a, b, 1.0);
  path.add_edge(b, c, 3.0);
  auto all = sets_of("matching", path, 3.0);
  REQUIRE(all.size() == 2);  // {ab}, {bc}; they share b
  CHECK(element_labels(all[0], path) == std::vector<std::string>{"a--b"});
  CHECK(element_labels(all[1], path) == std::vector<std::string>{"b--c"});
  // both singletons are maximal: the other edge always touches a covered vertex
  CHECK(sets_of("max-matching", path, 3.0).size() == 2);

  // square: maximal matchings are the two opposite-edge pairs
  WeightedGraph sq;
  VertexId p = sq.add_vertex("p"), q = sq.add_vertex("q"), r = sq.add_vertex("r"),
           s = sq.add_vertex("s");
  sq.add_edge(p, q, 1.0);
  sq.add_edge(q, r, 1.0);
  sq.add_edge(r, s, 1.0);
  sq.add_edge(p, s, 1.0);
  auto mm = sets_of("max-matching", sq, 1.0);
  REQUIRE(mm.size() == 2);
  CHECK(mm[0].size() == 2);
  CHECK(mm[1].size() == 2);
}

TEST_CASE("directed hubs compare outdegree against adjacent vertices") {
  WeightedGraph g(true);
  VertexId a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c");
  g.add_edge(a, b, 1.0);
  g.add_edge(a, c, 2.0);
  CHECK(vertex_singletons(sets_of("dhub", g, 2.0), g) == std::set<std::string>{"a"});

  // an outdegree tie: the default >= keeps both, strict > drops both
  WeightedGraph tie(true);
  VertexId x = tie.add_vertex("x"), y = tie.add_vertex("y");
  tie.add_edge(x, y, 1.0);
  tie.add_edge(y, x, 2.0);
  CHECK(vertex_singletons(sets_of("dhub", tie, 2.0), tie) == std::set<std::string>{"x", "y"});
  FeatureOptions strict;
  strict.dhub_strict = true;
  CHECK(sets_of("dhub", tie, 2.0, strict).empty());
}

TEST_CASE("directed-only features reject undirected graphs") {
  WeightedGraph und = triangle();
  Filtration filt = build_filtration(und);
  CHECK_THROWS_AS(enumerate_fsets(find_feature("dhub"), filt.snapshot_at(3.0), {}), GraphError);
  CHECK_THROWS_AS(enumerate_fsets(find_feature("kernel"), filt.snapshot_at(3.0), {}), GraphError);
}

TEST_CASE("kernels are independent absorbing sets") {
  // directed 3-cycle: no kernel
  WeightedGraph cyc(true);
  VertexId a = cyc.add_vertex("a"), b = cyc.add_vertex("b"), c = cyc.add_vertex("c");
  cyc.add_edge(a, b, 1.0);
  cyc.add_edge(b, c, 2.0);
  cyc.add_edge(c, a, 3.0);
  CHECK(sets_of("kernel", cyc, 3.0).empty());

  // transitive tournament: only the sink absorbs everything
  WeightedGraph tr(true);
  VertexId x = tr.add_vertex("x"), y = tr.add_vertex("y"), z = tr.add_vertex("z");
  tr.add_edge(x, y, 1.0);
  tr.add_edge(y, z, 2.0);
  tr.add_edge(x, z, 3.0);
  auto kernels = vertex_singletons(sets_of("kernel", tr, 3.0), tr);
  CHECK(kernels == std::set<std::string>{"z"});

  // two arcs into a sink pair: {b, d} independent and absorbing
  WeightedGraph two(true);
  VertexId p = two.add_vertex("a"), q = two.add_vertex("b");
  VertexId r = two.add_vertex("c"), s = two.add_vertex("d");
  two.add_edge(p, q, 1.0);
  two.add_edge(r, s, 1.0);
  auto ks = sets_of("kernel", two, 1.0);
  REQUIRE(ks.size() == 1);
  CHECK(element_labels(ks[0], two) == std::vector<std::string>{"b", "d"});
}

TEST_CASE("unknown features are rejected, known ones listed") {
  CHECK_THROWS_AS(find_feature("nope"), GraphError);
  auto names = feature_names();
  CHECK(names.size() == 9);
  CHECK(std::count(names.begin(), names.end(), "kernel") == 1);
}

TEST_CASE("enumeration respects the per-snapshot budget") {
  WeightedGraph g;
  std::vector<VertexId> vs;
  for (int i = 0; i < 10; ++i) vs.push_back(g.add_vertex(std::string(1, 'a' + i)));
  g.add_edge(vs[0], vs[1], 1.0);  // one edge; eight isolated-at-threshold vertices join later
  for (int i = 2; i < 10; ++i) g.add_edge(vs[0], vs[i], 2.0);
  FeatureOptions tiny;
  tiny.max_sets = 5;
  CHECK_THROWS_AS(sets_of("independent", g, 2.0, tiny), ResourceLimitError);
  CHECK_THROWS_AS(sets_of("eulerian", g, 2.0, tiny), ResourceLimitError);
  // generous budgets pass
  CHECK(!sets_of("independent", g, 2.0).empty());
}

TEST_CASE("enumeration is deterministic and canonically sorted") {
  WeightedGraph g = random_graph(99);
  Filtration filt = build_filtration(g);
  double top = filt.max_level();
  auto once = sets_of("independent", g, top);
  auto twice = sets_of("independent", g, top);
  CHECK(once == twice);
  CHECK(std::is_sorted(once.begin(), once.end()));
  CHECK(std::adjacent_find(once.begin(), once.end()) == once.end());  // no duplicates
}

TEST_CASE("declared-monotone features are hereditary and subgraph-stable") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomGraphOptions gopts;
    gopts.max_vertices = 8;
    WeightedGraph g = random_graph(seed, gopts);
    Filtration filt = build_filtration(g);
    const auto& levels = filt.critical_levels();
    double top = levels.back();
    Snapshot snap = filt.snapshot_at(top);
    for (const char* name : {"independent", "matching"}) {
      const Feature& f = find_feature(name);
      REQUIRE(f.monotone);
      auto sets = enumerate_fsets(f, snap, {});
      std::set<FeatureSet> lookup(sets.begin(), sets.end());
      // every nonempty subset of an F-set is an F-set
      for (const FeatureSet& s : sets) {
        if (s.size() < 2) continue;
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
          FeatureSet sub;
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != skip) sub.elems.push_back(s.elems[i]);
          CHECK(lookup.count(sub) == 1);
        }
      }
      // F-sets survive into any earlier snapshot containing their elements
      for (double lv : levels) {
        if (lv == top) continue;
        Snapshot early = filt.snapshot_at(lv);
        auto early_sets = enumerate_fsets(f, early, {});
        std::set<FeatureSet> early_lookup(early_sets.begin(), early_sets.end());
        for (const FeatureSet& s : sets)
          if (all_elements_present(s, early)) CHECK(early_lookup.count(s) == 1);
      }
    }
  }
}

TEST_CASE("maximal variants return inclusion-maximal sets only") {
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    RandomGraphOptions gopts;
    gopts.max_vertices = 7;
    WeightedGraph g = random_graph(seed, gopts);
    Filtration filt = build_filtration(g);
    Snapshot snap = filt.snapshot_at(filt.max_level());
    for (const char* name : {"max-independent", "max-matching", "eulerian"}) {
      auto sets = enumerate_fsets(find_feature(name), snap, {});
      for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
          if (i != j) CHECK(!sets[i].subset_of(sets[j]));
    }
    // greedy extension check: maximal independent sets really are inextensible
    auto mis = enumerate_fsets(find_feature("max-independent"), snap, {});
    for (const FeatureSet& s : mis)
      for (VertexId v : snap.vertex_ids()) {
        if (s.contains(vertex_element(v))) continue;
        bool clashes = false;
        for (auto [u, e] : snap.incident(v)) {
          (void)e;
          if (s.contains(vertex_element(u))) clashes = true;
        }
        CHECK(clashes);  // otherwise s + {v} would still be independent
      }
  }
}
