#include "fiberwalk/graph.hpp"

#include "fiberwalk/adapted.hpp"
#include "fiberwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace fiberwalk {

void FiberGraph::check_regularity() const {
  for (std::size_t v = 0; v < node_count; ++v) {
    std::size_t s = loops[v];
    for (auto [w, mult] : neighbors[v]) s += mult;
    if (s != degree)
      throw std::logic_error("FiberGraph: regularity violated at node " + std::to_string(v));
  }
}

FiberGraph build_fiber_graph(std::shared_ptr<const Fiber> fiber, MoveSet moves) {
  if (moves.dim() != fiber->dim())
    throw std::invalid_argument("build_fiber_graph: move dimension mismatch");
  FiberGraph g;
  g.node_count = fiber->size();
  g.degree = moves.effective_degree();
  g.neighbors.assign(g.node_count, {});
  g.loops.assign(g.node_count, 0);

  const auto effective = moves.effective_moves();
  for (std::size_t v = 0; v < g.node_count; ++v) {
    for (const auto& m : effective) {
      if (is_zero(m)) {
        ++g.loops[v];
        continue;
      }
      auto target = fiber->find(vec_add(fiber->point(v), m));
      if (target) {
        auto& nb = g.neighbors[v];
        auto it = std::find_if(nb.begin(), nb.end(),
                               [&](const auto& p) { return p.first == *target; });
        if (it == nb.end())
          nb.emplace_back(static_cast<std::uint32_t>(*target), 1);
        else
          ++it->second;
      } else {
        ++g.loops[v];
      }
    }
  }
  g.fiber = std::move(fiber);
  g.moveset = std::move(moves);
  g.check_regularity();
  return g;
}

FiberGraph build_fiber_graph(const Fiber& fiber, MoveSet moves) {
  return build_fiber_graph(std::make_shared<const Fiber>(fiber), std::move(moves));
}

namespace {

// BFS distances ignoring loops; -1 marks unreachable.
std::vector<long long> bfs_distances(const FiberGraph& g, std::size_t start) {
  std::vector<long long> dist(g.node_count, -1);
  std::deque<std::size_t> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (auto [w, mult] : g.neighbors[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace

bool is_connected(const FiberGraph& g) {
  if (g.node_count == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::size_t diameter(const FiberGraph& g) {
  if (g.node_count == 0) throw std::invalid_argument("diameter: empty graph");
  std::size_t diam = 0;
  for (std::size_t v = 0; v < g.node_count; ++v) {
    auto dist = bfs_distances(g, v);
    for (std::size_t w = 0; w < g.node_count; ++w) {
      if (dist[w] < 0) throw DisconnectedError(v, w);
      diam = std::max(diam, static_cast<std::size_t>(dist[w]));
    }
  }
  return diam;
}

ExpansionResult edge_expansion_exact(const FiberGraph& g, std::size_t node_limit) {
  const std::size_t n = g.node_count;
  if (n < 2) throw std::invalid_argument("edge_expansion_exact: need at least 2 nodes");
  if (n > node_limit || n > 62) throw NodeLimitError(n, std::min<std::size_t>(node_limit, 62));

  // Gray-code walk over all subsets; toggling one node updates the cut in
  // O(deg). Only subsets with 0 < 2|S| <= n compete.
  std::vector<bool> in_set(n, false);
  long long cut = 0;
  std::size_t set_size = 0;
  bool have_best = false;
  Rat best;
  std::uint64_t best_mask = 0;
  long long best_cut = 0;

  const std::uint64_t total = 1ull << n;
  std::uint64_t gray_prev = 0;
  for (std::uint64_t s = 1; s < total; ++s) {
    std::uint64_t gray = s ^ (s >> 1);
    std::uint64_t changed = gray ^ gray_prev;
    gray_prev = gray;
    std::size_t v = static_cast<std::size_t>(__builtin_ctzll(changed));
    if (!in_set[v]) {
      for (auto [w, mult] : g.neighbors[v]) cut += in_set[w] ? -(long long)mult : (long long)mult;
      in_set[v] = true;
      ++set_size;
    } else {
      in_set[v] = false;
      --set_size;
      for (auto [w, mult] : g.neighbors[v]) cut += in_set[w] ? (long long)mult : -(long long)mult;
    }
    if (set_size == 0 || 2 * set_size > n) continue;
    Rat ratio(cut, (long long)set_size);
    if (!have_best || ratio < best) {
      have_best = true;
      best = ratio;
      best_mask = gray;
      best_cut = cut;
    }
  }

  ExpansionResult res;
  res.h = best;
  res.cut_edges = best_cut;
  for (std::size_t v = 0; v < n; ++v)
    if (best_mask >> v & 1) res.min_set.push_back(v);
  return res;
}

std::vector<IntVec> boundary(const Fiber& f_small, const IntVec& u,
                             const Fiber& f_big, const MoveSet& m) {
  if (u.size() != f_small.dim() || f_small.dim() != f_big.dim() ||
      m.dim() != f_small.dim())
    throw std::invalid_argument("boundary: dimension mismatch");
  for (const auto& w : f_small.points())
    if (!f_big.contains(vec_add(u, w)))
      throw BoundaryHypothesisError(BoundaryHypothesisError::Kind::containment,
                                    "boundary: u + F_small is not contained in F_big");

  const auto effective = m.effective_moves();
  std::vector<IntVec> out;
  for (const auto& w : f_small.points()) {
    IntVec v = vec_add(u, w);
    for (const auto& mv : effective) {
      if (is_zero(mv)) continue;  // v + 0 stays inside
      IntVec vm = vec_add(v, mv);
      if (!is_nonnegative(vm)) continue;
      if (!f_small.contains(vec_add(w, mv))) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

std::size_t boundary_slice_superset_size(const Fiber& f_small, const IntVec& u,
                                         const MoveSet& m) {
  if (u.size() != f_small.dim())
    throw std::invalid_argument("boundary_slice_superset_size: dimension mismatch");
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u[j] != 0) support.push_back(j);
  if (support.empty() || m.empty()) return 0;

  Int c = complexity(m);
  std::size_t count = 0;
  for (const auto& w : f_small.points()) {
    for (std::size_t j : support)
      if (w[j] <= c) {
        ++count;
        break;
      }
  }
  return count;
}

Rat expansion_upper_bound(const Fiber& f_small, const IntVec& u,
                          const Fiber& f_big, const MoveSet& m) {
  if (2 * f_small.size() > f_big.size())
    throw BoundaryHypothesisError(BoundaryHypothesisError::Kind::size,
                                  "expansion_upper_bound: 2|F_small| > |F_big|");
  auto bd = boundary(f_small, u, f_big, m);  // re-checks containment
  // |±M| incident edges per boundary node; effective_degree is 2|M| for a
  // one-sided basis.
  return Rat(Int(m.effective_degree()) * Int(bd.size()), Int(f_small.size()));
}

Rat slem_lower_bound_from_expansion(const FiberGraph& g, std::size_t node_limit) {
  if (!is_connected(g))
    throw std::invalid_argument("slem_lower_bound_from_expansion: graph disconnected");
  auto h = edge_expansion_exact(g, node_limit).h;
  return Rat(1) - Rat(2, (long long)g.degree) * h;
}

LoopRemovedReport loop_removed(const FiberGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("loop_removed: graph disconnected");
  const std::size_t n = g.node_count;
  if (n < 2) throw std::invalid_argument("loop_removed: need at least 2 nodes");

  LoopRemovedReport rep;
  rep.degrees.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    rep.degrees[v] = g.nonloop_degree(v);
    if (rep.degrees[v] == 0)
      throw std::logic_error("loop_removed: isolated node in a connected graph");
  }

  // Two-colouring over non-loop edges.
  std::vector<int> color(n, -1);
  std::deque<std::size_t> queue{0};
  color[0] = 0;
  rep.bipartite = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (auto [w, mult] : g.neighbors[v]) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        rep.bipartite = false;
      }
    }
  }

  // Symmetrized walk: N[i][j] = w(i,j) / sqrt(d'_i d'_j).
  std::vector<double> sym(n * n, 0.0);
  for (std::size_t v = 0; v < n; ++v)
    for (auto [w, mult] : g.neighbors[v])
      sym[v * n + w] = mult / std::sqrt(double(rep.degrees[v]) * double(rep.degrees[w]));
  rep.slem_prime = slem_of_symmetric(sym, n);
  rep.slem = slem(transition_matrix(g));
  rep.gap_prime = 1.0 - rep.slem_prime;
  rep.degree_times_gap = double(g.degree) * (1.0 - rep.slem);
  return rep;
}

}  // namespace fiberwalk
