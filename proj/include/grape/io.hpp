#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grape/graph.hpp"
#include "grape/persistence.hpp"

namespace grape {

struct EdgeListRecord {
  std::string source;
  std::string target;
  double weight = 0.0;
  std::optional<double> weight2;  // optional fourth column
  std::size_t line = 0;           // 1-based line number in the source file
};

struct LoadOptions {
  bool directed = false;
  char delimiter = ',';
};

// Parses a CSV edge list: source,target,weight[,weight2]. A header line is
// auto-detected (non-numeric weight field on the first row) and skipped.
// Blank lines are ignored; anything else malformed raises ParseError naming
// the offending line.
std::vector<EdgeListRecord> parse_edge_list(const std::string& path,
                                            const LoadOptions& opts = {});

enum class WeightTransform { identity, inverse, negate_shift, product };

// Accepts identity | inverse | negshift | product.
WeightTransform transform_from_name(const std::string& name);
std::string transform_name(WeightTransform t);

// Record-level transform, applied before graph construction.
//   inverse:      w -> 1 / w          (all weights must be nonzero)
//   negate_shift: w -> max(w) - w
//   product:      w -> w * w2         (every record needs the extra column)
void apply_transform(std::vector<EdgeListRecord>& records, WeightTransform t);

// Graph-level transform returning a reweighted copy. product is only
// meaningful on records (it needs the extra CSV column) and is rejected.
WeightedGraph transform_weights(const WeightedGraph& g, WeightTransform t);

WeightedGraph build_graph(const std::vector<EdgeListRecord>& records,
                          const LoadOptions& opts = {}, std::string name = "");

// parse_edge_list + build_graph with identity weights.
WeightedGraph load_edge_list(const std::string& path, const LoadOptions& opts = {},
                             std::string name = "");

// Diagram serialization. Schema:
//   {"schema": 1, "kind": "grape-diagram", "feature": ..., "mode": ...,
//    "graph": ..., "cornerpoints": [{"birth": b, "death": d or "inf",
//    "multiplicity": m, "witnesses": [[labels...], ...]}, ...]}
// Round-trips losslessly; unknown schemas or malformed documents raise
// SchemaError. Output is byte-deterministic.
std::string diagram_to_json(const PersistenceDiagram& d);
PersistenceDiagram diagram_from_json(const std::string& text);
void export_diagram(const PersistenceDiagram& d, const std::string& path);
PersistenceDiagram import_diagram(const std::string& path);

struct SvgOptions {
  int size = 520;  // square canvas edge, px
};

// Deterministic diagram plot: axes, the diagonal, finite cornerpoints as
// disks scaled by multiplicity (labelled when multiplicity > 1), essential
// cornerpoints as triangles on a dashed top band.
std::string render_svg(const PersistenceDiagram& d, const SvgOptions& opts = {});
void export_svg(const PersistenceDiagram& d, const std::string& path,
                const SvgOptions& opts = {});

}  // namespace grape
