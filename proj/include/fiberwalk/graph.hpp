#pragma once

#include "fiberwalk/fiber.hpp"
#include "fiberwalk/moves.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace fiberwalk {

// Regular multigraph on a fiber: neighbor lists between distinct nodes plus
// a loop count per node. Every node satisfies
//   sum of neighbor multiplicities + loops = degree.
// Model graphs (no fiber attached) reuse the same shape.
struct FiberGraph {
  std::shared_ptr<const Fiber> fiber;  // null for model graphs
  std::optional<MoveSet> moveset;      // null for model graphs
  std::size_t node_count = 0;
  std::size_t degree = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> neighbors;
  std::vector<std::uint32_t> loops;

  std::size_t nonloop_degree(std::size_t v) const {
    std::size_t s = 0;
    for (auto [w, mult] : neighbors[v]) s += mult;
    return s;
  }

  void check_regularity() const;  // throws on violation
};

// Each effective move either lands in the fiber (edge) or becomes a loop;
// the 0 move is always a loop.
FiberGraph build_fiber_graph(std::shared_ptr<const Fiber> fiber, MoveSet moves);
FiberGraph build_fiber_graph(const Fiber& fiber, MoveSet moves);

bool is_connected(const FiberGraph& g);

class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError(std::size_t a, std::size_t b)
      : std::runtime_error("graph is disconnected: nodes " + std::to_string(a) +
                           " and " + std::to_string(b) + " are mutually unreachable"),
        node_a(a), node_b(b) {}
  std::size_t node_a, node_b;
};

// Max BFS eccentricity, loops ignored. Throws DisconnectedError.
std::size_t diameter(const FiberGraph& g);

class NodeLimitError : public std::runtime_error {
 public:
  explicit NodeLimitError(std::size_t n, std::size_t limit)
      : std::runtime_error("edge_expansion_exact: " + std::to_string(n) +
                           " nodes exceeds the subset-enumeration limit " +
                           std::to_string(limit)) {}
};

constexpr std::size_t kDefaultExpansionNodeLimit = 24;

struct ExpansionResult {
  Rat h;                               // min |E(S)| / |S| over 0 < 2|S| <= |V|
  std::vector<std::size_t> min_set;    // first minimizing S in Gray-code order
  Int cut_edges;                       // crossing edges of that S
};

// Exact edge-expansion by Gray-code subset enumeration with incremental cut
// updates. Loops never cross a cut, so they are irrelevant here.
ExpansionResult edge_expansion_exact(const FiberGraph& g,
                                     std::size_t node_limit = kDefaultExpansionNodeLimit);

class BoundaryHypothesisError : public std::runtime_error {
 public:
  enum class Kind { containment, size };
  BoundaryHypothesisError(Kind k, std::string msg)
      : std::runtime_error(std::move(msg)), kind(k) {}
  Kind kind;
};

// u-boundary of F_small: the nodes v of u + F_small from which some
// effective move reaches N^d \ (u + F_small). F_big only enters through the
// checked precondition u + F_small <= F_big.
std::vector<IntVec> boundary(const Fiber& f_small, const IntVec& u,
                             const Fiber& f_big, const MoveSet& m);

// |u + union_{j in supp(u)} union_{r=0..C(M)} {w in F : w_j = r}| — the
// slice superset that contains every boundary point. Empty support gives 0.
std::size_t boundary_slice_superset_size(const Fiber& f_small, const IntVec& u,
                                         const MoveSet& m);

// h(F_big graph) <= degree * |boundary| / |F_small|, hypotheses
// 2|F_small| <= |F_big| and u + F_small <= F_big checked separately.
Rat expansion_upper_bound(const Fiber& f_small, const IntVec& u,
                          const Fiber& f_big, const MoveSet& m);

// 1 - (2/degree) * h(G), a certified lower bound for the SLEM.
Rat slem_lower_bound_from_expansion(const FiberGraph& g,
                                    std::size_t node_limit = kDefaultExpansionNodeLimit);

struct LoopRemovedReport {
  std::vector<std::size_t> degrees;  // varying degrees of the loop-free graph
  bool bipartite = false;
  double slem = 0.0;        // lambda of the original simple walk
  double slem_prime = 0.0;  // lambda' of the loop-free walk
  double gap_prime = 0.0;   // 1 - lambda'
  double degree_times_gap = 0.0;  // degree * (1 - lambda)
};

// Drops all loops and analyses the applicable-moves walk. The loop-free walk
// is reversible w.r.t. pi'(v) ~ deg'(v); its SLEM is computed on the
// symmetric similarity transform D^{1/2} S' D^{-1/2}.
LoopRemovedReport loop_removed(const FiberGraph& g);

}  // namespace fiberwalk
