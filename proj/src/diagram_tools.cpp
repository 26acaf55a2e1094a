#include "grape/diagram_tools.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace grape {

namespace {

struct Pt {
  double b = 0.0, d = 0.0;
  std::size_t mult = 0;
};

double diag_cost(const Pt& p) { return (p.d - p.b) / 2.0; }

double pair_cost(const Pt& p, const Pt& q) {
  return std::max(std::abs(p.b - q.b), std::abs(p.d - q.d));
}

void split_points(const PersistenceDiagram& dia, std::vector<Pt>& finite,
                  std::vector<double>& essential_births) {
  for (const Cornerpoint& cp : dia.points) {
    if (std::isinf(cp.death))
      essential_births.insert(essential_births.end(), cp.multiplicity(), cp.birth);
    else
      finite.push_back(Pt{cp.birth, cp.death, cp.multiplicity()});
  }
}

// Unit-capacity-free max flow (Dinic) on a tiny graph; enough for the
// matching feasibility checks below.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1) {}

  void add_edge(int from, int to, long long cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) total += f;
    }
    return total;
  }

 private:
  struct E {
    int to, next;
    long long cap;
  };
  std::vector<E> edges_;
  std::vector<int> head_, iter_;
  std::vector<int> level_;

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[v]; e != -1; e = edges_[e].next)
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[v] + 1;
          q.push(edges_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& e = iter_[v]; e != -1; e = edges_[e].next) {
      E& ed = edges_[e];
      if (ed.cap > 0 && level_[ed.to] == level_[v] + 1) {
        long long got = dfs(ed.to, t, std::min(f, ed.cap));
        if (got > 0) {
          ed.cap -= got;
          edges_[e ^ 1].cap += got;
          return got;
        }
      }
    }
    return 0;
  }
};

// Can every finite point of both diagrams be matched (to an opposite point
// or to the diagonal) at cost <= c? Multiplicities ride along as flow
// capacities; diagonal slots of each side absorb the other side's overflow.
bool matchable_at(const std::vector<Pt>& A, const std::vector<Pt>& B, double c) {
  long long totalA = 0, totalB = 0;
  for (const Pt& p : A) totalA += static_cast<long long>(p.mult);
  for (const Pt& p : B) totalB += static_cast<long long>(p.mult);

  int nA = static_cast<int>(A.size()), nB = static_cast<int>(B.size());
  // nodes: 0 = source, 1 = sink, 2 = left diagonal, 3 = right diagonal,
  // 4..4+nA-1 = A points, then B points
  MaxFlow flow(4 + nA + nB);
  const int S = 0, T = 1, LD = 2, RD = 3;
  flow.add_edge(S, LD, totalB);
  flow.add_edge(RD, T, totalA);
  flow.add_edge(LD, RD, totalA + totalB);
  for (int i = 0; i < nA; ++i) {
    flow.add_edge(S, 4 + i, static_cast<long long>(A[i].mult));
    if (diag_cost(A[i]) <= c) flow.add_edge(4 + i, RD, static_cast<long long>(A[i].mult));
  }
  for (int j = 0; j < nB; ++j) {
    flow.add_edge(4 + nA + j, T, static_cast<long long>(B[j].mult));
    if (diag_cost(B[j]) <= c) flow.add_edge(LD, 4 + nA + j, static_cast<long long>(B[j].mult));
  }
  for (int i = 0; i < nA; ++i)
    for (int j = 0; j < nB; ++j)
      if (pair_cost(A[i], B[j]) <= c)
        flow.add_edge(4 + i, 4 + nA + j,
                      static_cast<long long>(std::min(A[i].mult, B[j].mult)));
  return flow.run(S, T) == totalA + totalB;
}

double finite_bottleneck(const std::vector<Pt>& A, const std::vector<Pt>& B) {
  if (A.empty() && B.empty()) return 0.0;
  std::vector<double> candidates;
  for (const Pt& p : A) candidates.push_back(diag_cost(p));
  for (const Pt& q : B) candidates.push_back(diag_cost(q));
  for (const Pt& p : A)
    for (const Pt& q : B) candidates.push_back(pair_cost(p, q));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::size_t lo = 0, hi = candidates.size() - 1;
  if (matchable_at(A, B, candidates[lo])) return candidates[lo];
  // invariant: candidates[lo] infeasible, candidates[hi] feasible
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    (matchable_at(A, B, candidates[mid]) ? hi : lo) = mid;
  }
  return candidates[hi];
}

double essential_bottleneck(std::vector<double> ba, std::vector<double> bb) {
  if (ba.size() != bb.size()) return kInfinity;
  std::sort(ba.begin(), ba.end());
  std::sort(bb.begin(), bb.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < ba.size(); ++i)
    worst = std::max(worst, std::abs(ba[i] - bb[i]));
  return worst;
}

}  // namespace

std::vector<DiagonalGap> diagonal_gaps(const PersistenceDiagram& d) {
  std::set<double> pers;
  for (const Cornerpoint& cp : d.points)
    if (!std::isinf(cp.death)) pers.insert(cp.persistence());
  std::vector<double> ps(pers.begin(), pers.end());
  std::vector<DiagonalGap> gaps;
  if (!ps.empty()) {
    gaps.push_back(DiagonalGap{0.0, ps.front()});
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
      gaps.push_back(DiagonalGap{ps[i], ps[i + 1]});
  }
  std::sort(gaps.begin(), gaps.end(), [](const DiagonalGap& x, const DiagonalGap& y) {
    if (x.width() != y.width()) return x.width() > y.width();
    return x.lower > y.lower;
  });
  return gaps;
}

GapSelection select_above_gap(const PersistenceDiagram& d, std::size_t k) {
  GapSelection sel;
  sel.gaps = diagonal_gaps(d);
  if (k < 1 || k > std::max<std::size_t>(sel.gaps.size(), 1))
    throw std::invalid_argument("gap index " + std::to_string(k) + " out of range (diagram has " +
                                std::to_string(sel.gaps.size()) + " gaps)");
  sel.threshold = sel.gaps.empty() ? kInfinity : sel.gaps[k - 1].upper;
  for (const Cornerpoint& cp : d.points)
    if (std::isinf(cp.death) || cp.persistence() >= sel.threshold) sel.selected.push_back(cp);
  return sel;
}

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  std::vector<Pt> fa, fb;
  std::vector<double> ea, eb;
  split_points(a, fa, ea);
  split_points(b, fb, eb);
  double essential = essential_bottleneck(std::move(ea), std::move(eb));
  if (std::isinf(essential)) return kInfinity;
  return std::max(essential, finite_bottleneck(fa, fb));
}

double bottleneck_oracle(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  // expand multiplicities; infinite-death points participate like any other,
  // with +infinity distances to finite points and to the diagonal
  auto expand = [](const PersistenceDiagram& d) {
    std::vector<Pt> out;
    for (const Cornerpoint& cp : d.points)
      out.insert(out.end(), cp.multiplicity(), Pt{cp.birth, cp.death, 1});
    return out;
  };
  std::vector<Pt> A = expand(a), B = expand(b);
  if (A.size() > 6 || B.size() > 6)
    throw ResourceLimitError("bottleneck oracle supports at most 6 points per diagram");

  auto cost = [](const Pt& p, const Pt& q) {
    bool pi = std::isinf(p.d), qi = std::isinf(q.d);
    if (pi != qi) return kInfinity;
    if (pi && qi) return std::abs(p.b - q.b);
    return pair_cost(p, q);
  };
  auto diag = [](const Pt& p) { return std::isinf(p.d) ? kInfinity : diag_cost(p); };

  std::size_t nB = B.size();
  auto solve = [&](auto&& self, std::size_t i, std::uint32_t used) -> double {
    if (i == A.size()) {
      double worst = 0.0;
      for (std::size_t j = 0; j < nB; ++j)
        if (!(used >> j & 1)) worst = std::max(worst, diag(B[j]));
      return worst;
    }
    double best = std::max(diag(A[i]), self(self, i + 1, used));
    for (std::size_t j = 0; j < nB; ++j) {
      if (used >> j & 1) continue;
      double c = cost(A[i], B[j]);
      if (c >= best) continue;  // cannot improve on this branch
      best = std::min(best, std::max(c, self(self, i + 1, used | (1u << j))));
    }
    return best;
  };
  return solve(solve, 0, 0);
}

double natural_pseudodistance_oracle(const WeightedGraph& f, const WeightedGraph& g) {
  if (f.directed() != g.directed())
    throw GraphError("pseudodistance requires two graphs of the same kind");
  if (f.vertex_count() > 8 || g.vertex_count() > 8)
    throw ResourceLimitError("pseudodistance oracle supports at most 8 vertices");
  if (f.vertex_count() != g.vertex_count() || f.edge_count() != g.edge_count())
    return kInfinity;

  std::size_t n = f.vertex_count();
  constexpr double kAbsent = std::numeric_limits<double>::quiet_NaN();
  auto weight_matrix = [n, kAbsent](const WeightedGraph& gr) {
    std::vector<std::vector<double>> w(n, std::vector<double>(n, kAbsent));
    for (const Edge& e : gr.edges()) {
      w[e.a][e.b] = e.weight;
      if (!gr.directed()) w[e.b][e.a] = e.weight;
    }
    return w;
  };
  auto wf = weight_matrix(f), wg = weight_matrix(g);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = kInfinity;
  do {
    double worst = 0.0;
    bool iso = true;
    for (std::size_t a = 0; a < n && iso; ++a)
      for (std::size_t b = 0; b < n && iso; ++b) {
        bool fe = !std::isnan(wf[a][b]);
        bool ge = !std::isnan(wg[perm[a]][perm[b]]);
        if (fe != ge)
          iso = false;
        else if (fe)
          worst = std::max(worst, std::abs(wf[a][b] - wg[perm[a]][perm[b]]));
      }
    if (iso) best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace grape
