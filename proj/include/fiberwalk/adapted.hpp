#pragma once

#include "fiberwalk/fiber.hpp"
#include "fiberwalk/linalg.hpp"
#include "fiberwalk/matrix.hpp"
#include "fiberwalk/moves.hpp"
#include "fiberwalk/rng.hpp"

#include <memory>
#include <vector>

namespace fiberwalk {

// C(M) = max over moves of the largest absolute coordinate.
inline Int complexity(const MoveSet& m) {
  if (m.empty()) throw std::invalid_argument("complexity: empty move set");
  Int c = 0;
  for (const auto& v : m.moves()) c = std::max(c, max_abs_entry(v));
  return c;
}

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const Int& count)
      : std::runtime_error("power_moves: coefficient enumeration would visit " +
                           count.str() + " vectors (budget 10^7)") {}
};

struct AdaptedBasis {
  MoveSet base;   // the one-sided set the combinations were taken over
  Int level;      // the l of M(l) (for the lattice superset: C * l)
  MoveSet moves;  // symmetric-closed, contains 0, deduplicated images
  enum class Provenance { direct, lattice_superset } provenance;
  // One coefficient vector per element of `moves` (aligned), the first
  // realization in (norm, composition, sign) enumeration order; |coeff|_1
  // <= level holds for each and is spot-checked by tests.
  std::vector<std::vector<Int>> coefficient_witnesses;
};

// |{x in Z^k : |x|_1 <= l}|, exact.
Int count_coefficient_vectors(std::size_t k, const Int& l);

// |{x in Z^k : |x|_1 = s}|, exact.
Int count_coefficient_shell(std::size_t k, const Int& s);

// M(l): all distinct images sum_j coeff_j * m_j with |coeff|_1 <= l.
// Throws BudgetExceededError when the coefficient count exceeds 10^7.
AdaptedBasis power_moves(const MoveSet& m, const Int& level);

struct AdaptResult {
  AdaptedBasis basis;
  std::size_t fiber_diameter = 0;
  std::shared_ptr<const Fiber> fiber;
};

// M^b = M(diam of the fiber graph under M); the resulting fiber graph is
// verified to be complete (pairwise, for fibers up to 200 nodes).
AdaptResult adapt_to_fiber(const IntegerMatrix& a, const IntVec& b, const MoveSet& m);

// Rejection-sampling superset: lattice basis B of the move lattice, blow-up
// constant C = sum_j max_i |coeff_j^i|, result = B(C*l) >= M(l).
AdaptedBasis lattice_superset(const MoveSet& m, const Int& level);

// Exactly uniform over {x in Z^r : |x|_1 <= l} by counting-based inverse
// transform (norm shell, then support, composition and signs).
IntVec sample_cross_polytope(std::size_t r, const Int& l, SplitMix64& rng);

}  // namespace fiberwalk
