#pragma once

#include <cstddef>
#include <vector>

#include "grape/persistence.hpp"

namespace grape {

// Open interval between consecutive distinct finite persistence values of a
// diagram (the first gap runs from 0 to the smallest persistence).
struct DiagonalGap {
  double lower = 0.0;
  double upper = 0.0;
  double width() const { return upper - lower; }
};

// All gaps, sorted widest first; ties broken by the larger lower bound
// (farther from the diagonal). Diagrams without finite cornerpoints have no
// gaps.
std::vector<DiagonalGap> diagonal_gaps(const PersistenceDiagram& d);

struct GapSelection {
  std::vector<DiagonalGap> gaps;      // as returned by diagonal_gaps
  double threshold = kInfinity;       // minimum selected finite persistence
  std::vector<Cornerpoint> selected;  // above-gap finite points + every essential point
};

// Cornerpoints whose persistence is at least the upper bound of the k-th
// widest gap, plus all essential (infinite-death) cornerpoints, which are
// always selected. k is 1-based; k = 1 stays valid on diagrams without
// finite cornerpoints, where it selects exactly the essential points.
GapSelection select_above_gap(const PersistenceDiagram& d, std::size_t k = 1);

// Bottleneck distance between diagrams: the smallest cost for which the
// points of one diagram can be matched to points of the other or to the
// diagonal, under the sup metric. Points with infinite death match among
// themselves (by sorted birth) or not at all. Exact: the result is either
// 0, +infinity, or one of the finitely many candidate costs.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

// Exhaustive reference matcher for small diagrams (at most 6 points per side
// counting multiplicity); the independent check for bottleneck_distance.
double bottleneck_oracle(const PersistenceDiagram& a, const PersistenceDiagram& b);

// Smallest, over all isomorphisms between the two (di)graphs, of the largest
// per-edge weight discrepancy; +infinity when they are not isomorphic.
// Brute-force over vertex bijections; supports at most 8 vertices.
double natural_pseudodistance_oracle(const WeightedGraph& f, const WeightedGraph& g);

}  // namespace grape
