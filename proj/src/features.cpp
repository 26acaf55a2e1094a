#include "grape/features.hpp"

#include <algorithm>
#include <bit>

namespace grape {

namespace {

// Counts candidate sets examined during one snapshot enumeration and fails
// loudly when the configured cap is passed.
class Budget {
 public:
  Budget(const char* feature, std::size_t cap) : feature_(feature), cap_(cap) {}

  void charge() {
    if (++used_ > cap_)
      throw ResourceLimitError(std::string(feature_) +
                               ": enumeration budget of " + std::to_string(cap_) +
                               " sets per snapshot exceeded (raise GRAPE_MAX_SETS "
                               "or FeatureOptions::max_sets)");
  }

 private:
  const char* feature_;
  std::size_t cap_;
  std::size_t used_ = 0;
};

// Present vertices of a snapshot reindexed 0..n-1 with 64-bit adjacency
// masks. Combinatorial enumerators work on this compact view.
struct MaskView {
  std::vector<VertexId> verts;       // local index -> vertex id (ascending)
  std::vector<std::uint64_t> adj;    // underlying adjacency
  std::vector<std::uint64_t> heads;  // out-arc heads (digraphs only)
  std::uint64_t full = 0;

  std::size_t size() const { return verts.size(); }
};

MaskView make_mask_view(const Snapshot& s, const char* feature) {
  const auto& vs = s.vertex_ids();
  if (vs.size() > 63)
    throw ResourceLimitError(std::string(feature) +
                             ": snapshot has more than 63 vertices, beyond the "
                             "subset-enumeration range");
  MaskView mv;
  mv.verts = vs;
  std::vector<std::uint32_t> local(s.graph().vertex_count(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<std::uint32_t>(i);
  mv.adj.assign(vs.size(), 0);
  mv.heads.assign(vs.size(), 0);
  for (EdgeId e : s.edge_ids()) {
    const Edge& ed = s.graph().edge(e);
    std::uint32_t ia = local[ed.a], ib = local[ed.b];
    mv.adj[ia] |= std::uint64_t{1} << ib;
    mv.adj[ib] |= std::uint64_t{1} << ia;
    if (s.directed()) mv.heads[ia] |= std::uint64_t{1} << ib;
  }
  mv.full = vs.size() == 63 ? ~std::uint64_t{0} >> 1
                            : (std::uint64_t{1} << vs.size()) - 1;
  return mv;
}

FeatureSet vertex_set_from_mask(const MaskView& mv, std::uint64_t mask) {
  std::vector<VertexId> ids;
  for (std::uint64_t m = mask; m; m &= m - 1)
    ids.push_back(mv.verts[std::countr_zero(m)]);
  return FeatureSet::of_vertices(std::move(ids));
}

// ---- hubs -------------------------------------------------------------

std::vector<FeatureSet> hub_like(const Snapshot& s, const FeatureOptions& o, bool weighted) {
  std::vector<FeatureSet> out;
  for (VertexId v : s.vertex_ids()) {
    double mine = weighted ? s.weighted_degree(v) : static_cast<double>(s.degree(v));
    bool ok = true;
    for (auto [u, e] : s.incident(v)) {
      (void)e;
      double theirs = weighted ? s.weighted_degree(u) : static_cast<double>(s.degree(u));
      if (o.hub_nonstrict ? mine < theirs : mine <= theirs) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(FeatureSet::of_vertices({v}));
  }
  return out;
}

std::vector<FeatureSet> dhub_sets(const Snapshot& s, const FeatureOptions& o) {
  std::vector<FeatureSet> out;
  for (VertexId v : s.vertex_ids()) {
    auto mine = s.out_degree(v);
    bool ok = true;
    auto compare = [&](VertexId u) {
      auto theirs = s.out_degree(u);
      if (o.dhub_strict ? mine <= theirs : mine < theirs) ok = false;
    };
    for (auto [u, e] : s.incident(v)) {
      const Edge& ed = s.graph().edge(e);
      bool is_out = ed.a == v;
      bool relevant = o.dhub_neighbourhood == DhubNeighbourhood::adjacent ||
                      (o.dhub_neighbourhood == DhubNeighbourhood::out_neighbours && is_out) ||
                      (o.dhub_neighbourhood == DhubNeighbourhood::in_neighbours && !is_out);
      if (relevant) compare(u);
      if (!ok) break;
    }
    if (ok) out.push_back(FeatureSet::of_vertices({v}));
  }
  return out;
}

// ---- eulerian ---------------------------------------------------------

// Maximal vertex sets inducing a connected subgraph with at least one edge
// and all degrees even. Searched in descending subset size so that the
// first Eulerian set met is maximal unless contained in one already found.
std::vector<FeatureSet> eulerian_sets(const Snapshot& s, const FeatureOptions& o) {
  MaskView mv = make_mask_view(s, "eulerian");
  std::size_t n = mv.size();
  Budget budget("eulerian", o.max_sets);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  std::vector<std::uint32_t> local(s.graph().vertex_count(), 0);
  for (std::size_t i = 0; i < n; ++i) local[mv.verts[i]] = static_cast<std::uint32_t>(i);
  for (EdgeId e : s.edge_ids()) {
    const Edge& ed = s.graph().edge(e);
    arcs.emplace_back(local[ed.a], local[ed.b]);
  }

  std::vector<std::uint64_t> maximal;
  std::vector<FeatureSet> out;
  std::vector<std::uint32_t> deg(n, 0);
  for (std::size_t r = n; r >= 1; --r) {
    std::uint64_t mask = (std::uint64_t{1} << r) - 1;
    while ((mask & ~mv.full) == 0) {
      budget.charge();
      std::fill(deg.begin(), deg.end(), 0);
      for (auto [ia, ib] : arcs)
        if ((mask >> ia & 1) && (mask >> ib & 1)) {
          ++deg[ia];
          ++deg[ib];
        }
      bool good = true;
      for (std::uint64_t m = mask; m && good; m &= m - 1) {
        std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(m));
        if (deg[i] == 0 || deg[i] % 2 == 1) good = false;
      }
      if (good) {
        // connectivity of the induced subgraph over every vertex of the set
        std::uint64_t seen = mask & -mask;
        std::uint64_t frontier = seen;
        while (frontier) {
          std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(frontier));
          frontier &= frontier - 1;
          std::uint64_t next = mv.adj[i] & mask & ~seen;
          seen |= next;
          frontier |= next;
        }
        good = seen == mask;
      }
      if (good) {
        bool contained = false;
        for (std::uint64_t big : maximal)
          if ((mask | big) == big) {
            contained = true;
            break;
          }
        if (!contained) {
          maximal.push_back(mask);
          out.push_back(vertex_set_from_mask(mv, mask));
        }
      }
      if (r == n) break;
      // Gosper's hack: next mask with the same popcount.
      std::uint64_t c = mask & -mask;
      std::uint64_t rr = mask + c;
      mask = (((rr ^ mask) >> 2) / c) | rr;
    }
  }
  return out;
}

// ---- conflict-free subset machinery (independent sets & matchings) -----

// Enumerates every nonempty subset of 0..n-1 avoiding the conflict masks,
// in increasing lexicographic order.
template <typename Emit>
void backtrack_conflict_free(const std::vector<std::uint64_t>& conflict, Budget& budget,
                             Emit&& emit) {
  std::size_t n = conflict.size();
  // chosen sets grow element by element; forbidden accumulates conflicts
  auto rec = [&](auto&& self, std::size_t start, std::uint64_t chosen,
                 std::uint64_t forbidden) -> void {
    for (std::size_t i = start; i < n; ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if (forbidden & bit) continue;
      budget.charge();
      emit(chosen | bit);
      self(self, i + 1, chosen | bit, forbidden | conflict[i]);
    }
  };
  rec(rec, 0, 0, 0);
}

// Bron–Kerbosch with pivoting over the conflict-free relation: reports
// exactly the maximal conflict-free subsets.
template <typename Emit>
void maximal_conflict_free(const std::vector<std::uint64_t>& conflict, std::uint64_t full,
                           Budget& budget, Emit&& emit) {
  if (full == 0) return;
  std::size_t n = conflict.size();
  std::vector<std::uint64_t> comp(n);
  for (std::size_t i = 0; i < n; ++i)
    comp[i] = full & ~conflict[i] & ~(std::uint64_t{1} << i);
  auto rec = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
    budget.charge();
    if (!p && !x) {
      if (r) emit(r);
      return;
    }
    // pivot maximizing |P & comp(pivot)|
    std::uint64_t px = p | x;
    int best = -1;
    std::uint64_t pivot_reach = 0;
    for (std::uint64_t m = px; m; m &= m - 1) {
      std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(m));
      int cnt = std::popcount(p & comp[i]);
      if (cnt > best) {
        best = cnt;
        pivot_reach = comp[i];
      }
    }
    std::uint64_t cands = p & ~pivot_reach;
    for (std::uint64_t m = cands; m; m &= m - 1) {
      std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(m));
      std::uint64_t bit = std::uint64_t{1} << i;
      self(self, r | bit, p & comp[i], x & comp[i]);
      p &= ~bit;
      x |= bit;
    }
  };
  rec(rec, 0, full, 0);
}

std::vector<FeatureSet> independent_sets(const Snapshot& s, const FeatureOptions& o,
                                         bool maximal_only) {
  const char* name = maximal_only ? "max-independent" : "independent";
  MaskView mv = make_mask_view(s, name);
  Budget budget(name, o.max_sets);
  std::vector<FeatureSet> out;
  auto emit = [&](std::uint64_t mask) { out.push_back(vertex_set_from_mask(mv, mask)); };
  if (maximal_only)
    maximal_conflict_free(mv.adj, mv.full, budget, emit);
  else
    backtrack_conflict_free(mv.adj, budget, emit);
  return out;
}

// Local view of present edges with "shares an endpoint" conflict masks.
struct EdgeView {
  std::vector<EdgeId> edges;
  std::vector<std::uint64_t> conflict;
  std::uint64_t full = 0;
};

EdgeView make_edge_view(const Snapshot& s, const char* feature) {
  const auto& es = s.edge_ids();
  if (es.size() > 63)
    throw ResourceLimitError(std::string(feature) +
                             ": snapshot has more than 63 edges, beyond the "
                             "subset-enumeration range");
  EdgeView ev;
  ev.edges = es;
  ev.conflict.assign(es.size(), 0);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Edge& ei = s.graph().edge(es[i]);
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const Edge& ej = s.graph().edge(es[j]);
      if (ei.a == ej.a || ei.a == ej.b || ei.b == ej.a || ei.b == ej.b) {
        ev.conflict[i] |= std::uint64_t{1} << j;
        ev.conflict[j] |= std::uint64_t{1} << i;
      }
    }
  }
  ev.full = es.empty() ? 0 : (std::uint64_t{1} << es.size()) - 1;
  return ev;
}

std::vector<FeatureSet> matching_sets(const Snapshot& s, const FeatureOptions& o,
                                      bool maximal_only) {
  const char* name = maximal_only ? "max-matching" : "matching";
  EdgeView ev = make_edge_view(s, name);
  Budget budget(name, o.max_sets);
  std::vector<FeatureSet> out;
  auto emit = [&](std::uint64_t mask) {
    std::vector<EdgeId> ids;
    for (std::uint64_t m = mask; m; m &= m - 1)
      ids.push_back(ev.edges[std::countr_zero(m)]);
    out.push_back(FeatureSet::of_edges(std::move(ids)));
  };
  if (maximal_only)
    maximal_conflict_free(ev.conflict, ev.full, budget, emit);
  else
    backtrack_conflict_free(ev.conflict, budget, emit);
  return out;
}

// ---- kernels ------------------------------------------------------------

// Kernels: independent in the underlying graph, and every present vertex
// outside the set has an arc into it.
std::vector<FeatureSet> kernel_sets(const Snapshot& s, const FeatureOptions& o) {
  MaskView mv = make_mask_view(s, "kernel");
  Budget budget("kernel", o.max_sets);
  std::vector<FeatureSet> out;
  auto emit = [&](std::uint64_t mask) {
    std::uint64_t outside = mv.full & ~mask;
    for (std::uint64_t m = outside; m; m &= m - 1) {
      std::uint32_t w = static_cast<std::uint32_t>(std::countr_zero(m));
      if ((mv.heads[w] & mask) == 0) return;  // w has no arc into the set
    }
    out.push_back(vertex_set_from_mask(mv, mask));
  };
  backtrack_conflict_free(mv.adj, budget, emit);
  return out;
}

}  // namespace

FeatureSet FeatureSet::of_vertices(std::vector<VertexId> vs) {
  FeatureSet s;
  s.elems.reserve(vs.size());
  for (VertexId v : vs) s.elems.push_back(vertex_element(v));
  std::sort(s.elems.begin(), s.elems.end());
  s.elems.erase(std::unique(s.elems.begin(), s.elems.end()), s.elems.end());
  return s;
}

FeatureSet FeatureSet::of_edges(std::vector<EdgeId> es) {
  FeatureSet s;
  s.elems.reserve(es.size());
  for (EdgeId e : es) s.elems.push_back(edge_element(e));
  std::sort(s.elems.begin(), s.elems.end());
  s.elems.erase(std::unique(s.elems.begin(), s.elems.end()), s.elems.end());
  return s;
}

bool FeatureSet::contains(ElementCode c) const {
  return std::binary_search(elems.begin(), elems.end(), c);
}

bool FeatureSet::subset_of(const FeatureSet& other) const {
  return std::includes(other.elems.begin(), other.elems.end(), elems.begin(), elems.end());
}

std::size_t FeatureSetHash::operator()(const FeatureSet& s) const {
  std::size_t h = 1469598103934665603ull;
  for (ElementCode c : s.elems) {
    h ^= static_cast<std::size_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> element_labels(const FeatureSet& s, const WeightedGraph& g) {
  std::vector<std::string> out;
  out.reserve(s.elems.size());
  for (ElementCode c : s.elems) {
    if (element_is_edge(c)) {
      const Edge& e = g.edge(element_id(c));
      std::string la = g.label(e.a), lb = g.label(e.b);
      if (!g.directed() && lb < la) std::swap(la, lb);
      out.push_back(la + (g.directed() ? "->" : "--") + lb);
    } else {
      out.push_back(g.label(element_id(c)));
    }
  }
  return out;
}

const std::vector<Feature>& feature_registry() {
  static const std::vector<Feature> reg = {
      {"hub", FeatureKind::vertex_sets, false, false,
       [](const Snapshot& s, const FeatureOptions& o) { return hub_like(s, o, false); }},
      {"whub", FeatureKind::vertex_sets, false, false,
       [](const Snapshot& s, const FeatureOptions& o) { return hub_like(s, o, true); }},
      {"eulerian", FeatureKind::vertex_sets, false, false, eulerian_sets},
      {"independent", FeatureKind::vertex_sets, true, false,
       [](const Snapshot& s, const FeatureOptions& o) { return independent_sets(s, o, false); }},
      {"max-independent", FeatureKind::vertex_sets, false, false,
       [](const Snapshot& s, const FeatureOptions& o) { return independent_sets(s, o, true); }},
      {"matching", FeatureKind::edge_sets, true, false,
       [](const Snapshot& s, const FeatureOptions& o) { return matching_sets(s, o, false); }},
      {"max-matching", FeatureKind::edge_sets, false, false,
       [](const Snapshot& s, const FeatureOptions& o) { return matching_sets(s, o, true); }},
      {"dhub", FeatureKind::vertex_sets, false, true, dhub_sets},
      {"kernel", FeatureKind::vertex_sets, false, true, kernel_sets},
  };
  return reg;
}

const Feature& find_feature(const std::string& name) {
  for (const Feature& f : feature_registry())
    if (f.name == name) return f;
  throw GraphError("unknown feature: " + name);
}

std::vector<std::string> feature_names() {
  std::vector<std::string> out;
  for (const Feature& f : feature_registry()) out.push_back(f.name);
  return out;
}

std::vector<FeatureSet> enumerate_fsets(const Feature& f, const Snapshot& s,
                                        const FeatureOptions& opts) {
  if (f.directed_only && !s.directed())
    throw GraphError(f.name + " is defined on directed graphs only");
  std::vector<FeatureSet> out = f.enumerate(s, opts);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grape
