#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grape/graph.hpp"

namespace grape {

// Element of an F-set: a vertex or an edge of the host graph, packed into one
// integer so that vertices order before edges and every set has a single
// canonical sorted representation.
using ElementCode = std::uint64_t;

constexpr ElementCode vertex_element(VertexId v) { return v; }
constexpr ElementCode edge_element(EdgeId e) {
  return (std::uint64_t{1} << 32) | e;
}
constexpr bool element_is_edge(ElementCode c) { return (c >> 32) != 0; }
constexpr std::uint32_t element_id(ElementCode c) {
  return static_cast<std::uint32_t>(c);
}

// A set of vertices and/or edges, kept sorted and duplicate-free.
struct FeatureSet {
  std::vector<ElementCode> elems;

  static FeatureSet of_vertices(std::vector<VertexId> vs);
  static FeatureSet of_edges(std::vector<EdgeId> es);

  std::size_t size() const { return elems.size(); }
  bool contains(ElementCode c) const;
  bool subset_of(const FeatureSet& other) const;

  bool operator==(const FeatureSet& o) const { return elems == o.elems; }
  bool operator<(const FeatureSet& o) const { return elems < o.elems; }
};

struct FeatureSetHash {
  std::size_t operator()(const FeatureSet& s) const;
};

// Labels of the set's elements in canonical order: vertex labels first, then
// edges rendered "a--b" (undirected, endpoint labels sorted) or "a->b" (arcs).
std::vector<std::string> element_labels(const FeatureSet& s, const WeightedGraph& g);

enum class FeatureKind { vertex_sets, edge_sets };
enum class DhubNeighbourhood { adjacent, out_neighbours, in_neighbours };

struct FeatureOptions {
  // Enumeration budget per snapshot (candidate sets examined). Exceeding it
  // raises ResourceLimitError rather than silently truncating results. The
  // CLI lets the GRAPE_MAX_SETS environment variable override this.
  std::size_t max_sets = 1'000'000;
  // Undirected hub comparisons use strict > by default; >= when set.
  bool hub_nonstrict = false;
  // Directed hub comparisons use >= by default, which is the convention that
  // reproduces the reference classification of 3-vertex tournaments; strict >
  // is available here.
  bool dhub_strict = false;
  // Which neighbours a directed hub's outdegree is compared against.
  DhubNeighbourhood dhub_neighbourhood = DhubNeighbourhood::adjacent;
};

// A feature assigns to every snapshot a finite collection of F-sets.
// `monotone` declares the hereditary property (subsets of F-sets are F-sets,
// and an F-set keeps being one in any subgraph containing it) that makes the
// steady and ranging diagrams coincide.
struct Feature {
  std::string name;
  FeatureKind kind = FeatureKind::vertex_sets;
  bool monotone = false;
  bool directed_only = false;
  std::function<std::vector<FeatureSet>(const Snapshot&, const FeatureOptions&)> enumerate;
};

// Built-in features: hub, whub, eulerian, independent, max-independent,
// matching, max-matching, dhub, kernel.
const std::vector<Feature>& feature_registry();
const Feature& find_feature(const std::string& name);  // throws GraphError
std::vector<std::string> feature_names();

// All F-sets of the snapshot, each exactly once, canonically sorted.
// Directed-only features reject undirected snapshots; undirected features on
// digraphs act on the underlying graph (each arc is an edge).
std::vector<FeatureSet> enumerate_fsets(const Feature& f, const Snapshot& s,
                                        const FeatureOptions& opts = {});

}  // namespace grape
