#pragma once

#include "fiberwalk/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fiberwalk {

// A finite set of moves in Z^d. Two storage modes:
//  - one-sided: 0 not in M and M, -M disjoint; the walk uses +-M, so the
//    effective degree is 2|M|. Raw Markov bases live here.
//  - symmetric_closed: 0 in M and M = -M; each element is one effective
//    move, degree |M|. Adapted bases M(l) live here.
class MoveSet {
 public:
  static MoveSet one_sided(std::size_t dim, std::vector<IntVec> moves) {
    MoveSet m(dim, false, std::move(moves));
    m.sort_dedup();
    for (const auto& v : m.moves_) {
      if (is_zero(v)) throw std::invalid_argument("MoveSet: zero move in one-sided set");
      if (m.contains(negated(v)))
        throw std::invalid_argument("MoveSet: one-sided set meets its negation");
    }
    return m;
  }

  static MoveSet symmetric_closed(std::size_t dim, std::vector<IntVec> moves) {
    MoveSet m(dim, true, std::move(moves));
    m.sort_dedup();
    if (!m.contains(IntVec(dim, 0)))
      throw std::invalid_argument("MoveSet: symmetric set must contain 0");
    for (const auto& v : m.moves_)
      if (!m.contains(negated(v)))
        throw std::invalid_argument("MoveSet: set not closed under negation");
    return m;
  }

  std::size_t dim() const { return dim_; }
  bool is_symmetric_closed() const { return symmetric_closed_; }
  const std::vector<IntVec>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }

  std::size_t effective_degree() const {
    return symmetric_closed_ ? moves_.size() : 2 * moves_.size();
  }

  // The moves the walk actually applies: +-M in one-sided mode, M itself in
  // symmetric_closed mode.
  std::vector<IntVec> effective_moves() const {
    if (symmetric_closed_) return moves_;
    std::vector<IntVec> eff;
    eff.reserve(2 * moves_.size());
    for (const auto& v : moves_) eff.push_back(v);
    for (const auto& v : moves_) eff.push_back(negated(v));
    return eff;
  }

  bool contains(const IntVec& v) const {
    return std::binary_search(moves_.begin(), moves_.end(), v);
  }

 private:
  MoveSet(std::size_t dim, bool sym, std::vector<IntVec> moves)
      : dim_(dim), symmetric_closed_(sym), moves_(std::move(moves)) {
    for (const auto& v : moves_)
      if (v.size() != dim_) throw std::invalid_argument("MoveSet: dimension mismatch");
  }

  void sort_dedup() {
    std::sort(moves_.begin(), moves_.end());
    auto last = std::unique(moves_.begin(), moves_.end());
    if (last != moves_.end())
      throw std::invalid_argument("MoveSet: duplicate move");
  }

  std::size_t dim_;
  bool symmetric_closed_;
  std::vector<IntVec> moves_;  // sorted ascending (lexicographic)
};

}  // namespace fiberwalk
