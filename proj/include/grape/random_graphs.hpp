#pragma once

#include <cstdint>
#include <string>

#include "grape/graph.hpp"

namespace grape {

struct RandomGraphOptions {
  unsigned min_vertices = 2;
  unsigned max_vertices = 7;
  bool directed = false;
  int min_weight = 1;
  int max_weight = 12;
  std::string name;
};

// Small random simple (di)graph with integer weights and single-letter
// labels: vertex count uniform in [min, max], then a uniform nonzero number
// of distinct vertex pairs, each weighted uniformly and (when directed)
// oriented by a coin flip. Fully determined by the seed; the generator does
// not depend on standard-library distribution internals.
WeightedGraph random_graph(std::uint64_t seed, const RandomGraphOptions& opts = {});

}  // namespace grape
