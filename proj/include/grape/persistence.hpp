#pragma once

#include <string>
#include <vector>

#include "grape/features.hpp"
#include "grape/graph.hpp"

namespace grape {

// Half-open activity interval [birth, death); death may be +infinity.
struct Interval {
  double birth = 0.0;
  double death = 0.0;
};

// For one F-set: the maximal disjoint intervals of critical levels at which
// the set is an F-set of the snapshot, in ascending order.
struct ActivityProfile {
  FeatureSet set;
  std::vector<Interval> intervals;
};

struct Cornerpoint {
  double birth = 0.0;
  double death = 0.0;  // +infinity for essential cornerpoints
  // The F-sets accounting for this cornerpoint, rendered as sorted lists of
  // element labels; multiplicity == witnesses.size().
  std::vector<std::vector<std::string>> witnesses;

  std::size_t multiplicity() const { return witnesses.size(); }
  double persistence() const { return death - birth; }
};

struct PersistenceDiagram {
  std::string feature;
  std::string mode;  // "steady" or "ranging"
  std::string graph_name;
  std::vector<Cornerpoint> points;  // ascending (birth, death), all distinct

  std::size_t total_multiplicity() const;
};

enum class Execution { serial, parallel };

// Activity profiles of every F-set that appears at some critical level,
// sorted canonically by set. Active at the top level means death +infinity;
// runs over consecutive critical levels merge into one interval. The
// parallel path fans the per-level enumerations out over OpenMP threads and
// returns output identical to the serial reference.
std::vector<ActivityProfile> compute_activities(const Feature& f, const Filtration& filt,
                                                const FeatureOptions& opts = {},
                                                Execution ex = Execution::parallel);

// One cornerpoint per maximal activity interval (steady) or one per F-set
// spanning first birth to last death (ranging). Cornerpoints sharing
// (birth, death) merge, accumulating witnesses.
PersistenceDiagram steady_diagram(const std::vector<ActivityProfile>& profiles,
                                  const Filtration& filt, const Feature& f);
PersistenceDiagram ranging_diagram(const std::vector<ActivityProfile>& profiles,
                                   const Filtration& filt, const Feature& f);

// Number of F-sets steady (resp. ranging) on [u, v], read off the diagram as
// the total multiplicity with birth <= u and death > v. Requires u < v.
int sigma_at(const PersistenceDiagram& d, double u, double v);
int rho_at(const PersistenceDiagram& d, double u, double v);

// Definition-level recomputation bypassing diagrams entirely: enumerates
// F-sets at every snapshot relevant to [u, v] and intersects (steady) or
// unions then intersects (ranging). The independent oracle the diagram
// queries are validated against. Requires u < v.
int brute_force_sigma(const Feature& f, const Filtration& filt, double u, double v,
                      const FeatureOptions& opts = {});
int brute_force_rho(const Feature& f, const Filtration& filt, double u, double v,
                    const FeatureOptions& opts = {});

}  // namespace grape
