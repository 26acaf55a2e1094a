#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grape/diagram_tools.hpp"
#include "grape/persistence.hpp"

namespace grape {

struct HubRow {
  std::string label;
  double birth = 0.0;
  double death = 0.0;
  double persistence = 0.0;
};

struct PersistentHubReport {
  std::string feature;
  std::string mode;
  std::size_t gap_index = 1;
  PersistenceDiagram diagram;
  GapSelection selection;
  // one row per (selected cornerpoint, witness vertex), ordered by
  // decreasing persistence (essential rows first), then label, then birth
  std::vector<HubRow> rows;
};

// End-to-end hub analysis of one weighted (di)graph: filtration, activity
// profiles, diagram, diagonal-gap selection. feature must be one of hub,
// whub, dhub; mode is "steady" or "ranging". An edgeless graph yields an
// empty diagram and an empty report.
PersistentHubReport persistent_hubs(const WeightedGraph& g, const std::string& feature,
                                    const std::string& mode, std::size_t gap_index = 1,
                                    const FeatureOptions& opts = {});

struct HubTimelineEntry {
  std::string name;  // snapshot graph name
  std::vector<HubRow> top;
};

struct HubTimeline {
  std::string feature;
  std::string mode;
  std::vector<HubTimelineEntry> entries;
};

// Ranks each snapshot's vertices by the persistence of their hub
// cornerpoints and keeps the top_n best per snapshot. In ranging mode every
// vertex has at most one cornerpoint; in steady mode a vertex witnessing
// several cornerpoints is ranked by its most persistent one.
HubTimeline track_hubs(const std::vector<WeightedGraph>& snapshots, const std::string& feature,
                       const std::string& mode, std::size_t top_n = 6,
                       const FeatureOptions& opts = {});

struct SearchOptions {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned max_vertices = 7;
  std::vector<double> offsets = {1.0, 2.0};  // weight perturbation radii to try
  Execution execution = Execution::parallel;
  FeatureOptions feature_options;
};

struct UnbalancedWitness {
  WeightedGraph left;   // the graph whose widened query stays larger
  WeightedGraph right;  // same shape, every weight within h of left's
  double h = 0.0;
  double u = 0.0, v = 0.0;
  int wide = 0;    // p_left(u - h, v + h)
  int narrow = 0;  // p_right(u, v) < wide: the balancedness violation
  std::uint64_t trial = 0;
};

// Randomized hunt for a balancedness violation of the generator given by
// feature and mode ("steady" = sigma, "ranging" = rho): random graphs get
// their weights perturbed by at most h, and the widened count
// p_left(u-h, v+h) is compared with p_right(u, v) over a query grid derived
// from both graphs' critical levels, in both directions. Every candidate is
// re-verified with the brute-force oracles before being returned.
// Deterministic for a given seed: trials are seeded independently and the
// lowest successful trial index wins, serial or parallel.
std::optional<UnbalancedWitness> search_unbalanced(const std::string& feature,
                                                   const std::string& mode,
                                                   const SearchOptions& opts = {});

}  // namespace grape
