#include "grape/random_graphs.hpp"

#include <utility>
#include <vector>

namespace grape {

namespace {

// splitmix64: tiny, stable, and independent of library implementations
struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace

WeightedGraph random_graph(std::uint64_t seed, const RandomGraphOptions& opts) {
  Rng rng{seed};
  unsigned span = opts.max_vertices - opts.min_vertices + 1;
  unsigned n = opts.min_vertices + static_cast<unsigned>(rng.below(span));

  WeightedGraph g(opts.directed, opts.name);
  for (unsigned i = 0; i < n; ++i) g.add_vertex(std::string(1, static_cast<char>('a' + i)));

  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[rng.below(i)]);

  std::size_t m = 1 + static_cast<std::size_t>(rng.below(pairs.size()));
  int wspan = opts.max_weight - opts.min_weight + 1;
  for (std::size_t i = 0; i < m; ++i) {
    auto [a, b] = pairs[i];
    double w = opts.min_weight + static_cast<int>(rng.below(wspan));
    if (opts.directed && rng.below(2) == 1) std::swap(a, b);
    g.add_edge(a, b, w);
  }
  return g;
}

}  // namespace grape
