#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grape/persistence.hpp"
#include "grape/random_graphs.hpp"

using namespace grape;

namespace {

// v is the unique hub on [2,3) and again on [4,5): x and y tie it in between
WeightedGraph comeback_hub() {
  WeightedGraph g;
  VertexId v = g.add_vertex("v"), a = g.add_vertex("a"), b = g.add_vertex("b");
  VertexId x = g.add_vertex("x"), c = g.add_vertex("c"), y = g.add_vertex("y");
  g.add_edge(v, a, 2.0);
  g.add_edge(v, b, 2.0);
  g.add_edge(a, x, 3.0);
  g.add_edge(v, c, 4.0);
  g.add_edge(a, y, 5.0);
  return g;
}

const ActivityProfile* profile_for(const std::vector<ActivityProfile>& profiles,
                                   const WeightedGraph& g, const std::string& label) {
  for (const auto& p : profiles) {
    auto labels = element_labels(p.set, g);
    if (labels.size() == 1 && labels[0] == label) return &p;
  }
  return nullptr;
}

bool has_point(const PersistenceDiagram& d, double birth, double death, std::size_t mult = 1) {
  for (const auto& c : d.points)
    if (c.birth == birth && c.death == death) return c.multiplicity() == mult;
  return false;
}

}  // namespace

TEST_CASE("activity intervals merge contiguous levels and cut gaps") {
  WeightedGraph g = comeback_hub();
  Filtration filt = build_filtration(g);
  CHECK(filt.critical_levels() == std::vector<double>{2.0, 3.0, 4.0, 5.0});
  auto profiles = compute_activities(find_feature("hub"), filt, {}, Execution::serial);
  const ActivityProfile* v = profile_for(profiles, g, "v");
  REQUIRE(v != nullptr);
  REQUIRE(v->intervals.size() == 2);
  CHECK(v->intervals[0].birth == 2.0);
  CHECK(v->intervals[0].death == 3.0);
  CHECK(v->intervals[1].birth == 4.0);
  CHECK(v->intervals[1].death == 5.0);
}

TEST_CASE("steady diagrams record interval endpoints, ranging diagrams the span") {
  WeightedGraph g = comeback_hub();
  Filtration filt = build_filtration(g);
  auto profiles = compute_activities(find_feature("hub"), filt, {});
  PersistenceDiagram steady = steady_diagram(profiles, filt, find_feature("hub"));
  PersistenceDiagram ranging = ranging_diagram(profiles, filt, find_feature("hub"));
  CHECK(steady.mode == "steady");
  CHECK(ranging.mode == "ranging");

  // v: steady on [2,3) and [4,5); ranging across the gap
  CHECK(has_point(steady, 2.0, 3.0));
  CHECK(has_point(steady, 4.0, 5.0));
  CHECK(has_point(ranging, 2.0, 5.0));
  CHECK(!has_point(ranging, 2.0, 3.0));

  // queries: sigma counts cornerpoints born at or before u and dying after v
  CHECK(sigma_at(steady, 2.0, 2.5) == 1);
  CHECK(sigma_at(steady, 3.5, 4.5) == 0);
  CHECK(rho_at(ranging, 3.5, 4.5) == 1);
  CHECK(rho_at(ranging, 2.0, 4.5) == 1);
  CHECK_THROWS_AS(sigma_at(steady, 3.0, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(sigma_at(steady, 4.0, 2.0), std::invalid_argument);
}

TEST_CASE("sets active at the last level die at infinity") {
  WeightedGraph g;
  VertexId c = g.add_vertex("c");
  g.add_edge(c, g.add_vertex("x"), 1.0);
  g.add_edge(c, g.add_vertex("y"), 2.0);
  g.add_edge(c, g.add_vertex("z"), 3.0);
  Filtration filt = build_filtration(g);
  auto profiles = compute_activities(find_feature("hub"), filt, {});
  PersistenceDiagram steady = steady_diagram(profiles, filt, find_feature("hub"));
  REQUIRE(steady.points.size() == 1);
  CHECK(steady.points[0].birth == 2.0);  // degree 1 vs 1 at level 1 is a tie
  CHECK(steady.points[0].death == kInfinity);
  CHECK(steady.points[0].persistence() == kInfinity);
  CHECK(sigma_at(steady, 2.0, 1e9) == 1);
}

TEST_CASE("cornerpoints aggregate witnesses into multiplicity") {
  // two disjoint squares; a diagonal lands in each at level 2 and splits the
  // even-degree structure into two triangles per square
  WeightedGraph g;
  VertexId a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c"),
           d = g.add_vertex("d");
  VertexId w = g.add_vertex("w"), x = g.add_vertex("x"), y = g.add_vertex("y"),
           z = g.add_vertex("z");
  g.add_edge(a, b, 1.0);
  g.add_edge(b, c, 1.0);
  g.add_edge(c, d, 1.0);
  g.add_edge(d, a, 1.0);
  g.add_edge(w, x, 1.0);
  g.add_edge(x, y, 1.0);
  g.add_edge(y, z, 1.0);
  g.add_edge(z, w, 1.0);
  g.add_edge(a, c, 2.0);
  g.add_edge(w, y, 2.0);
  Filtration filt = build_filtration(g);
  auto profiles = compute_activities(find_feature("eulerian"), filt, {});
  PersistenceDiagram steady = steady_diagram(profiles, filt, find_feature("eulerian"));
  REQUIRE(steady.points.size() == 2);
  CHECK(has_point(steady, 1.0, 2.0, 2));  // the two squares
  CHECK(has_point(steady, 2.0, kInfinity, 4));  // four diagonal-cut triangles
  CHECK(steady.total_multiplicity() == 6);
  for (const auto& p : steady.points) CHECK(p.witnesses.size() == p.multiplicity());
}

TEST_CASE("ranging covers comebacks that steady splits") {
  WeightedGraph g = comeback_hub();
  Filtration filt = build_filtration(g);
  auto profiles = compute_activities(find_feature("hub"), filt, {});
  PersistenceDiagram steady = steady_diagram(profiles, filt, find_feature("hub"));
  PersistenceDiagram ranging = ranging_diagram(profiles, filt, find_feature("hub"));
  // pointwise: ranging dominates steady on every admissible query
  for (double u : filt.critical_levels())
    for (double v : filt.critical_levels())
      if (u < v) CHECK(rho_at(ranging, u, v) >= sigma_at(steady, u, v));
}

TEST_CASE("matching queries on the weighted triangle") {
  WeightedGraph g;
  VertexId a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c");
  g.add_edge(a, b, 1.0);
  g.add_edge(b, c, 2.0);
  g.add_edge(a, c, 3.0);
  Filtration filt = build_filtration(g);
  const Feature& mm = find_feature("max-matching");
  auto profiles = compute_activities(mm, filt, {});
  PersistenceDiagram steady = steady_diagram(profiles, filt, mm);
  // {ab} is the sole matching on [1,2), maximal until 2; at 2 {ab},{bc} are
  // maximal; at 3 every singleton matching is maximal
  CHECK(sigma_at(steady, 1.0, 1.5) == 1);
  CHECK(sigma_at(steady, 1.0, 2.5) == 1);   // {ab} stays maximal through level 2
  CHECK(sigma_at(steady, 2.0, 2.5) == 2);
  CHECK(sigma_at(steady, 3.0, 4.0) == 3);
}

TEST_CASE("profiles agree between serial and parallel execution") {
  for (std::uint64_t seed = 10; seed < 40; ++seed) {
    WeightedGraph g = random_graph(seed);
    Filtration filt = build_filtration(g);
    for (const char* name : {"hub", "whub", "max-independent", "matching"}) {
      const Feature& f = find_feature(name);
      auto serial = compute_activities(f, filt, {}, Execution::serial);
      auto parallel = compute_activities(f, filt, {}, Execution::parallel);
      REQUIRE(serial.size() == parallel.size());
      for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].set == parallel[i].set);
        REQUIRE(serial[i].intervals.size() == parallel[i].intervals.size());
        for (std::size_t k = 0; k < serial[i].intervals.size(); ++k) {
          CHECK(serial[i].intervals[k].birth == parallel[i].intervals[k].birth);
          CHECK(serial[i].intervals[k].death == parallel[i].intervals[k].death);
        }
      }
    }
  }
}

TEST_CASE("diagram queries match the brute-force recomputation") {
  RandomGraphOptions gopts;
  gopts.max_vertices = 6;
  for (std::uint64_t seed = 50; seed < 110; ++seed) {
    WeightedGraph g = random_graph(seed, gopts);
    Filtration filt = build_filtration(g);
    const auto& levels = filt.critical_levels();
    for (const char* name : {"hub", "eulerian", "max-independent", "max-matching"}) {
      const Feature& f = find_feature(name);
      auto profiles = compute_activities(f, filt, {});
      PersistenceDiagram steady = steady_diagram(profiles, filt, f);
      PersistenceDiagram ranging = ranging_diagram(profiles, filt, f);
      std::vector<double> probes;
      for (std::size_t i = 0; i < levels.size(); ++i) {
        probes.push_back(levels[i]);
        probes.push_back(i + 1 < levels.size() ? (levels[i] + levels[i + 1]) / 2
                                               : levels[i] + 1.0);
      }
      probes.push_back(levels.front() - 1.0);
      for (double u : probes)
        for (double v : probes) {
          if (!(u < v)) continue;
          CHECK(sigma_at(steady, u, v) == brute_force_sigma(f, filt, u, v, {}));
          CHECK(rho_at(ranging, u, v) == brute_force_rho(f, filt, u, v, {}));
        }
    }
  }
}

TEST_CASE("diagrams carry feature and graph identity") {
  WeightedGraph g = comeback_hub();
  g.set_name("comeback");
  Filtration filt = build_filtration(g);
  auto profiles = compute_activities(find_feature("hub"), filt, {});
  PersistenceDiagram d = steady_diagram(profiles, filt, find_feature("hub"));
  CHECK(d.feature == "hub");
  CHECK(d.graph_name == "comeback");
  // cornerpoints are sorted by (birth, death)
  for (std::size_t i = 1; i < d.points.size(); ++i) {
    bool ordered = d.points[i - 1].birth < d.points[i].birth ||
                   (d.points[i - 1].birth == d.points[i].birth &&
                    d.points[i - 1].death <= d.points[i].death);
    CHECK(ordered);
  }
}
