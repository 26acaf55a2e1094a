#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grape/errors.hpp"

namespace grape {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Edge {
  VertexId a = 0;  // tail when directed
  VertexId b = 0;  // head when directed
  double weight = 0.0;
};

// A simple weighted graph or digraph. Vertices carry string labels; edges
// carry finite real weights. Self-loops and duplicate edges (unordered pair
// when undirected, ordered pair when directed) are rejected, so antiparallel
// arcs are allowed in digraphs. Mutation is construction-only: once a graph
// feeds a Filtration it is copied and never changed underneath readers.
class WeightedGraph {
 public:
  explicit WeightedGraph(bool directed = false, std::string name = "")
      : directed_(directed), name_(std::move(name)) {}

  VertexId add_vertex(std::string label);
  // Returns the existing vertex with this label, adding it if absent.
  VertexId ensure_vertex(const std::string& label);
  EdgeId add_edge(VertexId a, VertexId b, double weight);

  bool directed() const { return directed_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<VertexId> find_vertex(const std::string& label) const;

 private:
  bool directed_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> by_label_;
  std::unordered_map<std::uint64_t, EdgeId> by_pair_;  // duplicate detection

  std::uint64_t pair_key(VertexId a, VertexId b) const;
};

// Minimum weight over edges incident to v (arcs in either direction), or
// +infinity when v is isolated: the sublevel filtration level at which v
// first appears in a snapshot.
double vertex_entry_level(const WeightedGraph& g, VertexId v);

// The subgraph of all edges with weight <= level, together with their
// endpoints. Vertices not reached by any such edge are absent. Holds a
// pointer into the owning Filtration's graph; cheap to copy.
class Snapshot {
 public:
  Snapshot(const WeightedGraph* g, double level, std::vector<EdgeId> edge_ids);

  const WeightedGraph& graph() const { return *g_; }
  double level() const { return level_; }
  bool directed() const { return g_->directed(); }

  const std::vector<EdgeId>& edge_ids() const { return edge_ids_; }
  const std::vector<VertexId>& vertex_ids() const { return vertex_ids_; }
  bool has_vertex(VertexId v) const { return present_[v]; }

  // Underlying (direction-blind) incidences: pairs (other endpoint, edge id).
  const std::vector<std::pair<VertexId, EdgeId>>& incident(VertexId v) const {
    return adj_.at(v);
  }
  // Out-arcs (tail == v); empty lists on undirected graphs.
  const std::vector<std::pair<VertexId, EdgeId>>& out_arcs(VertexId v) const {
    return out_.at(v);
  }

  std::size_t degree(VertexId v) const { return adj_[v].size(); }
  std::size_t out_degree(VertexId v) const { return out_[v].size(); }
  double weighted_degree(VertexId v) const;

 private:
  const WeightedGraph* g_;
  double level_;
  std::vector<EdgeId> edge_ids_;
  std::vector<VertexId> vertex_ids_;
  std::vector<char> present_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> out_;
};

// Edge-weight sublevel filtration: the sorted distinct weights are the
// critical levels, and snapshot_at(u) materializes the subgraph at u.
// Snapshots are constant between consecutive critical levels. Immutable
// after construction; owns a copy of the graph so it can be shared freely.
class Filtration {
 public:
  explicit Filtration(WeightedGraph g);

  const WeightedGraph& graph() const { return g_; }
  const std::vector<double>& critical_levels() const { return levels_; }
  double min_level() const;
  double max_level() const;

  Snapshot snapshot_at(double level) const;

 private:
  WeightedGraph g_;
  std::vector<double> levels_;
  std::vector<EdgeId> order_;         // edge ids sorted by (weight, id)
  std::vector<std::size_t> prefix_;   // per critical level: #edges present
};

Filtration build_filtration(WeightedGraph g);

}  // namespace grape
