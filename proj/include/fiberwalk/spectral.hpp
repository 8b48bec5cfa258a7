#pragma once

#include "fiberwalk/graph.hpp"
#include "fiberwalk/numeric.hpp"

#include <optional>
#include <vector>

namespace fiberwalk {

// Dense symmetric row-stochastic transition matrix of the simple walk,
// S = (1/degree) * (adjacency + loop diagonal). The exact rational form is
// kept alongside the doubles for n <= 64 and backs drift checks and exact
// distribution evolutions.
struct TransitionMatrix {
  std::size_t n = 0;
  std::size_t degree = 0;
  std::vector<double> entries;              // row-major, n*n
  std::optional<std::vector<Rat>> exact;    // populated for n <= 64

  double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  const Rat& exact_at(std::size_t i, std::size_t j) const { return (*exact)[i * n + j]; }
};

constexpr std::size_t kExactTransitionLimit = 64;

class ZeroDegreeError : public std::runtime_error {
 public:
  ZeroDegreeError() : std::runtime_error("transition_matrix: graph has degree 0") {}
};

TransitionMatrix transition_matrix(const FiberGraph& g);

// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations;
// sweeps until the off-diagonal Frobenius norm drops below `tol`.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double tol = 1e-12);

// Second largest eigenvalue modulus: sort by modulus, drop the one
// eigenvalue closest to 1 (the stationary direction), return the largest
// remaining modulus. Disconnected graphs correctly give 1.
double slem(const TransitionMatrix& s);

// Same rule applied to a raw symmetric matrix (used by the loop-removed
// walk after its similarity transform).
double slem_of_symmetric(const std::vector<double>& a, std::size_t n);

}  // namespace fiberwalk
