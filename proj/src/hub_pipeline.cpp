#include "grape/hub_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>

#include "grape/random_graphs.hpp"

namespace grape {

namespace {

void check_mode(const std::string& mode) {
  if (mode != "steady" && mode != "ranging")
    throw std::invalid_argument("mode must be steady or ranging, got: " + mode);
}

PersistenceDiagram diagram_for(const WeightedGraph& g, const Feature& f, const std::string& mode,
                               const FeatureOptions& opts, Execution ex) {
  Filtration filt = build_filtration(g);
  auto profiles = compute_activities(f, filt, opts, ex);
  return mode == "steady" ? steady_diagram(profiles, filt, f) : ranging_diagram(profiles, filt, f);
}

bool row_before(const HubRow& a, const HubRow& b) {
  if (a.persistence != b.persistence) return a.persistence > b.persistence;
  if (a.label != b.label) return a.label < b.label;
  return a.birth < b.birth;
}

const Feature& hub_feature(const std::string& feature) {
  if (feature != "hub" && feature != "whub" && feature != "dhub")
    throw std::invalid_argument("hub analysis supports hub, whub, dhub; got: " + feature);
  return find_feature(feature);
}

}  // namespace

PersistentHubReport persistent_hubs(const WeightedGraph& g, const std::string& feature,
                                    const std::string& mode, std::size_t gap_index,
                                    const FeatureOptions& opts) {
  check_mode(mode);
  const Feature& f = hub_feature(feature);

  PersistentHubReport report;
  report.feature = feature;
  report.mode = mode;
  report.gap_index = gap_index;
  report.diagram = diagram_for(g, f, mode, opts, Execution::parallel);
  report.selection = select_above_gap(report.diagram, gap_index);
  for (const Cornerpoint& cp : report.selection.selected)
    for (const auto& witness : cp.witnesses)
      for (const std::string& label : witness)
        report.rows.push_back(HubRow{label, cp.birth, cp.death, cp.persistence()});
  std::sort(report.rows.begin(), report.rows.end(), row_before);
  return report;
}

HubTimeline track_hubs(const std::vector<WeightedGraph>& snapshots, const std::string& feature,
                       const std::string& mode, std::size_t top_n, const FeatureOptions& opts) {
  check_mode(mode);
  const Feature& f = hub_feature(feature);

  HubTimeline timeline;
  timeline.feature = feature;
  timeline.mode = mode;
  for (const WeightedGraph& g : snapshots) {
    PersistenceDiagram d = diagram_for(g, f, mode, opts, Execution::parallel);
    std::map<std::string, HubRow> best;
    for (const Cornerpoint& cp : d.points)
      for (const auto& witness : cp.witnesses)
        for (const std::string& label : witness) {
          HubRow row{label, cp.birth, cp.death, cp.persistence()};
          auto [it, inserted] = best.emplace(label, row);
          if (!inserted && row_before(row, it->second)) it->second = row;
        }
    HubTimelineEntry entry;
    entry.name = g.name();
    for (const auto& [label, row] : best) entry.top.push_back(row);
    std::sort(entry.top.begin(), entry.top.end(), row_before);
    if (entry.top.size() > top_n) entry.top.resize(top_n);
    timeline.entries.push_back(std::move(entry));
  }
  return timeline;
}

namespace {

// Midpoints between consecutive grid base values, plus one point past the
// end: enough resolution to distinguish every pair of snapshots of either
// graph once the left query is widened by h.
std::vector<double> grid_axis(const std::vector<double>& base_left,
                              const std::vector<double>& base_right, double shift) {
  std::set<double> base(base_right.begin(), base_right.end());
  for (double w : base_left) base.insert(w + shift);
  std::vector<double> b(base.begin(), base.end());
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) out.push_back((b[i] + b[i + 1]) / 2.0);
  if (!b.empty()) out.push_back(b.back() + 1.0);
  return out;
}

struct TrialContext {
  const Feature* feature;
  bool steady;
  const SearchOptions* opts;
};

// One direction of one trial: does left's widened count exceed right's?
std::optional<UnbalancedWitness> check_direction(const WeightedGraph& left,
                                                 const WeightedGraph& right, double h,
                                                 const TrialContext& ctx) {
  Filtration fl = build_filtration(left);
  Filtration fr = build_filtration(right);
  const FeatureOptions& fopts = ctx.opts->feature_options;
  auto profiles_l = compute_activities(*ctx.feature, fl, fopts, Execution::serial);
  auto profiles_r = compute_activities(*ctx.feature, fr, fopts, Execution::serial);
  PersistenceDiagram dl = ctx.steady ? steady_diagram(profiles_l, fl, *ctx.feature)
                                     : ranging_diagram(profiles_l, fl, *ctx.feature);
  PersistenceDiagram dr = ctx.steady ? steady_diagram(profiles_r, fr, *ctx.feature)
                                     : ranging_diagram(profiles_r, fr, *ctx.feature);

  auto us = grid_axis(fl.critical_levels(), fr.critical_levels(), h);
  auto vs = grid_axis(fl.critical_levels(), fr.critical_levels(), -h);
  for (double u : us)
    for (double v : vs) {
      if (!(u < v)) continue;
      int wide = sigma_at(dl, u - h, v + h);
      int narrow = sigma_at(dr, u, v);
      if (wide <= narrow) continue;
      // candidate: confirm against the definition-level oracles
      int brute_wide = ctx.steady ? brute_force_sigma(*ctx.feature, fl, u - h, v + h, fopts)
                                  : brute_force_rho(*ctx.feature, fl, u - h, v + h, fopts);
      int brute_narrow = ctx.steady ? brute_force_sigma(*ctx.feature, fr, u, v, fopts)
                                    : brute_force_rho(*ctx.feature, fr, u, v, fopts);
      if (brute_wide > brute_narrow) {
        UnbalancedWitness w;
        w.left = left;
        w.right = right;
        w.h = h;
        w.u = u;
        w.v = v;
        w.wide = brute_wide;
        w.narrow = brute_narrow;
        return w;
      }
    }
  return std::nullopt;
}

std::optional<UnbalancedWitness> run_trial(std::uint64_t trial, const TrialContext& ctx) {
  std::uint64_t seed = ctx.opts->seed + 0x9e3779b97f4a7c15ull * (trial + 1);
  RandomGraphOptions gopts;
  gopts.max_vertices = ctx.opts->max_vertices;
  gopts.directed = ctx.feature->directed_only;
  WeightedGraph base = random_graph(seed, gopts);

  // deterministic perturbation stream, separate from the topology stream
  std::uint64_t pstate = seed ^ 0xd1b54a32d192ed03ull;
  auto next = [&pstate]() {
    std::uint64_t z = (pstate += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  const auto& offsets = ctx.opts->offsets;
  if (offsets.empty()) throw std::invalid_argument("search needs at least one offset");
  double h = offsets[next() % offsets.size()];

  WeightedGraph perturbed(base.directed(), base.name());
  for (VertexId v = 0; v < base.vertex_count(); ++v) perturbed.add_vertex(base.label(v));
  int ih = static_cast<int>(h);
  for (const Edge& e : base.edges()) {
    double w = std::max(1.0, e.weight + static_cast<int>(next() % (2 * ih + 1)) - ih);
    perturbed.add_edge(e.a, e.b, w);
  }

  for (auto* pair : {&base, &perturbed}) {
    const WeightedGraph& left = *pair;
    const WeightedGraph& right = pair == &base ? perturbed : base;
    if (auto w = check_direction(left, right, h, ctx)) {
      w->trial = trial;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<UnbalancedWitness> search_unbalanced(const std::string& feature,
                                                   const std::string& mode,
                                                   const SearchOptions& opts) {
  check_mode(mode);
  TrialContext ctx{&find_feature(feature), mode == "steady", &opts};

  const std::uint64_t chunk = 64;
  for (std::uint64_t start = 0; start < opts.trials; start += chunk) {
    std::uint64_t end = std::min(opts.trials, start + chunk);
    std::vector<std::optional<UnbalancedWitness>> found(end - start);
    if (opts.execution == Execution::parallel) {
      std::exception_ptr error;
#ifdef GRAPE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (long long t = static_cast<long long>(start); t < static_cast<long long>(end); ++t) {
        try {
          found[t - start] = run_trial(static_cast<std::uint64_t>(t), ctx);
        } catch (...) {
#ifdef GRAPE_HAVE_OPENMP
#pragma omp critical
#endif
          if (!error) error = std::current_exception();
        }
      }
      if (error) std::rethrow_exception(error);
    } else {
      for (std::uint64_t t = start; t < end; ++t) found[t - start] = run_trial(t, ctx);
    }
    for (auto& w : found)
      if (w) return w;
  }
  return std::nullopt;
}

}  // namespace grape
