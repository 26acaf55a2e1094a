#include "grape/persistence.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>

namespace grape {

namespace {

std::vector<std::vector<FeatureSet>> per_level_fsets(const Feature& f, const Filtration& filt,
                                                     const FeatureOptions& opts, Execution ex) {
  const auto& levels = filt.critical_levels();
  std::vector<std::vector<FeatureSet>> out(levels.size());
  if (ex == Execution::parallel) {
    std::exception_ptr error;
#ifdef GRAPE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(levels.size()); ++i) {
      try {
        out[i] = enumerate_fsets(f, filt.snapshot_at(levels[i]), opts);
      } catch (...) {
#ifdef GRAPE_HAVE_OPENMP
#pragma omp critical
#endif
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (std::size_t i = 0; i < levels.size(); ++i)
      out[i] = enumerate_fsets(f, filt.snapshot_at(levels[i]), opts);
  }
  return out;
}

void check_query(double u, double v) {
  if (!(u < v)) throw std::invalid_argument("query requires u < v");
}

PersistenceDiagram make_diagram(std::map<std::pair<double, double>, std::vector<const FeatureSet*>>&& pts,
                                const Filtration& filt, const Feature& f, const char* mode) {
  PersistenceDiagram d;
  d.feature = f.name;
  d.mode = mode;
  d.graph_name = filt.graph().name();
  for (auto& [bd, sets] : pts) {
    Cornerpoint cp;
    cp.birth = bd.first;
    cp.death = bd.second;
    for (const FeatureSet* s : sets) cp.witnesses.push_back(element_labels(*s, filt.graph()));
    std::sort(cp.witnesses.begin(), cp.witnesses.end());
    d.points.push_back(std::move(cp));
  }
  return d;
}

}  // namespace

std::size_t PersistenceDiagram::total_multiplicity() const {
  std::size_t n = 0;
  for (const Cornerpoint& cp : points) n += cp.multiplicity();
  return n;
}

std::vector<ActivityProfile> compute_activities(const Feature& f, const Filtration& filt,
                                                const FeatureOptions& opts, Execution ex) {
  const auto& levels = filt.critical_levels();
  auto per_level = per_level_fsets(f, filt, opts, ex);

  std::map<FeatureSet, std::vector<std::size_t>> active_at;
  for (std::size_t i = 0; i < per_level.size(); ++i)
    for (FeatureSet& s : per_level[i]) active_at[std::move(s)].push_back(i);

  std::vector<ActivityProfile> profiles;
  profiles.reserve(active_at.size());
  for (auto& [set, idxs] : active_at) {
    ActivityProfile p;
    p.set = set;
    for (std::size_t i : idxs) {
      double birth = levels[i];
      double death = i + 1 < levels.size() ? levels[i + 1] : kInfinity;
      if (!p.intervals.empty() && p.intervals.back().death == birth)
        p.intervals.back().death = death;
      else
        p.intervals.push_back(Interval{birth, death});
    }
    profiles.push_back(std::move(p));
  }
  return profiles;
}

PersistenceDiagram steady_diagram(const std::vector<ActivityProfile>& profiles,
                                  const Filtration& filt, const Feature& f) {
  std::map<std::pair<double, double>, std::vector<const FeatureSet*>> pts;
  for (const ActivityProfile& p : profiles)
    for (const Interval& iv : p.intervals) pts[{iv.birth, iv.death}].push_back(&p.set);
  return make_diagram(std::move(pts), filt, f, "steady");
}

PersistenceDiagram ranging_diagram(const std::vector<ActivityProfile>& profiles,
                                   const Filtration& filt, const Feature& f) {
  std::map<std::pair<double, double>, std::vector<const FeatureSet*>> pts;
  for (const ActivityProfile& p : profiles) {
    if (p.intervals.empty()) continue;
    pts[{p.intervals.front().birth, p.intervals.back().death}].push_back(&p.set);
  }
  return make_diagram(std::move(pts), filt, f, "ranging");
}

int sigma_at(const PersistenceDiagram& d, double u, double v) {
  check_query(u, v);
  int n = 0;
  for (const Cornerpoint& cp : d.points)
    if (cp.birth <= u && cp.death > v) n += static_cast<int>(cp.multiplicity());
  return n;
}

int rho_at(const PersistenceDiagram& d, double u, double v) { return sigma_at(d, u, v); }

int brute_force_sigma(const Feature& f, const Filtration& filt, double u, double v,
                      const FeatureOptions& opts) {
  check_query(u, v);
  const auto& levels = filt.critical_levels();
  if (levels.empty() || u < levels.front()) return 0;

  // Levels whose snapshots must all contain the set: u itself, then every
  // critical level inside (u, v].
  std::vector<double> pts{u};
  for (double w : levels)
    if (w > u && w <= v) pts.push_back(w);

  std::vector<FeatureSet> common;
  bool first = true;
  for (double p : pts) {
    std::vector<FeatureSet> cur = enumerate_fsets(f, filt.snapshot_at(p), opts);
    if (first) {
      common = std::move(cur);
      first = false;
    } else {
      std::vector<FeatureSet> next;
      std::set_intersection(common.begin(), common.end(), cur.begin(), cur.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    if (common.empty()) return 0;
  }
  return static_cast<int>(common.size());
}

int brute_force_rho(const Feature& f, const Filtration& filt, double u, double v,
                    const FeatureOptions& opts) {
  check_query(u, v);
  const auto& levels = filt.critical_levels();
  if (levels.empty() || u < levels.front()) return 0;

  auto accumulate = [&](std::vector<FeatureSet>& acc, double level) {
    std::vector<FeatureSet> cur = enumerate_fsets(f, filt.snapshot_at(level), opts);
    std::vector<FeatureSet> merged;
    std::set_union(acc.begin(), acc.end(), cur.begin(), cur.end(), std::back_inserter(merged));
    acc = std::move(merged);
  };

  std::vector<FeatureSet> low;
  for (double w : levels)
    if (w <= u) accumulate(low, w);

  std::vector<FeatureSet> high;
  accumulate(high, v);
  for (double w : levels)
    if (w > v) accumulate(high, w);

  std::vector<FeatureSet> both;
  std::set_intersection(low.begin(), low.end(), high.begin(), high.end(),
                        std::back_inserter(both));
  return static_cast<int>(both.size());
}

}  // namespace grape
