#include "grape/graph.hpp"

#include <algorithm>
#include <cmath>

namespace grape {

VertexId WeightedGraph::add_vertex(std::string label) {
  if (label.empty()) throw GraphError("vertex label must be nonempty");
  if (by_label_.count(label))
    throw GraphError("duplicate vertex label: " + label);
  VertexId id = static_cast<VertexId>(labels_.size());
  by_label_.emplace(label, id);
  labels_.push_back(std::move(label));
  return id;
}

VertexId WeightedGraph::ensure_vertex(const std::string& label) {
  auto it = by_label_.find(label);
  if (it != by_label_.end()) return it->second;
  return add_vertex(label);
}

std::uint64_t WeightedGraph::pair_key(VertexId a, VertexId b) const {
  if (!directed_ && a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

EdgeId WeightedGraph::add_edge(VertexId a, VertexId b, double weight) {
  if (a >= labels_.size() || b >= labels_.size())
    throw GraphError("edge endpoint does not name a vertex");
  if (a == b)
    throw GraphError("self-loop rejected at vertex " + labels_[a]);
  if (!std::isfinite(weight))
    throw GraphError("edge weight must be finite: " + labels_[a] + (directed_ ? "->" : "--") + labels_[b]);
  auto key = pair_key(a, b);
  if (by_pair_.count(key))
    throw GraphError("duplicate edge rejected: " + labels_[a] + (directed_ ? "->" : "--") + labels_[b]);
  EdgeId id = static_cast<EdgeId>(edges_.size());
  by_pair_.emplace(key, id);
  edges_.push_back(Edge{a, b, weight});
  return id;
}

std::optional<VertexId> WeightedGraph::find_vertex(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

double vertex_entry_level(const WeightedGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw GraphError("vertex id out of range");
  double best = kInfinity;
  for (const Edge& e : g.edges())
    if (e.a == v || e.b == v) best = std::min(best, e.weight);
  return best;
}

Snapshot::Snapshot(const WeightedGraph* g, double level, std::vector<EdgeId> edge_ids)
    : g_(g),
      level_(level),
      edge_ids_(std::move(edge_ids)),
      present_(g->vertex_count(), 0),
      adj_(g->vertex_count()),
      out_(g->vertex_count()) {
  std::sort(edge_ids_.begin(), edge_ids_.end());
  for (EdgeId e : edge_ids_) {
    const Edge& ed = g_->edge(e);
    present_[ed.a] = 1;
    present_[ed.b] = 1;
    adj_[ed.a].emplace_back(ed.b, e);
    adj_[ed.b].emplace_back(ed.a, e);
    if (g_->directed()) out_[ed.a].emplace_back(ed.b, e);
  }
  for (VertexId v = 0; v < present_.size(); ++v)
    if (present_[v]) vertex_ids_.push_back(v);
}

double Snapshot::weighted_degree(VertexId v) const {
  double sum = 0.0;
  for (auto [u, e] : adj_[v]) sum += g_->edge(e).weight;
  return sum;
}

Filtration::Filtration(WeightedGraph g) : g_(std::move(g)) {
  order_.resize(g_.edge_count());
  for (EdgeId e = 0; e < order_.size(); ++e) order_[e] = e;
  std::sort(order_.begin(), order_.end(), [&](EdgeId x, EdgeId y) {
    double wx = g_.edge(x).weight, wy = g_.edge(y).weight;
    return wx != wy ? wx < wy : x < y;
  });
  for (std::size_t i = 0; i < order_.size(); ++i) {
    double w = g_.edge(order_[i]).weight;
    if (levels_.empty() || levels_.back() != w) {
      levels_.push_back(w);
      prefix_.push_back(i + 1);
    } else {
      prefix_.back() = i + 1;
    }
  }
}

double Filtration::min_level() const {
  if (levels_.empty()) throw GraphError("filtration has no edges, so no critical levels");
  return levels_.front();
}

double Filtration::max_level() const {
  if (levels_.empty()) throw GraphError("filtration has no edges, so no critical levels");
  return levels_.back();
}

Snapshot Filtration::snapshot_at(double level) const {
  // Number of critical levels <= level gives the edge prefix to include.
  auto it = std::upper_bound(levels_.begin(), levels_.end(), level);
  std::size_t k = it == levels_.begin() ? 0 : prefix_[(it - levels_.begin()) - 1];
  return Snapshot(&g_, level, std::vector<EdgeId>(order_.begin(), order_.begin() + k));
}

Filtration build_filtration(WeightedGraph g) { return Filtration(std::move(g)); }

}  // namespace grape
