#pragma once

#include "fiberwalk/matrix.hpp"
#include "fiberwalk/numeric.hpp"

#include <variant>
#include <vector>

namespace fiberwalk {

// Rank over Q of the matrix whose columns are the given vectors
// (fraction-free Gaussian elimination, exact). Empty set has rank 0.
std::size_t integer_rank(const std::vector<IntVec>& vectors);

struct LatticeBasis {
  // Basis of the lattice generated by Z-combinations of the input vectors,
  // in column-echelon form with positive pivots.
  std::vector<IntVec> basis;
  // coefficients[i] expresses input vector i over `basis` (exact integers).
  std::vector<std::vector<Int>> coefficients;
  // C = sum_j max_i |coefficients[i][j]|; the blow-up factor used by the
  // lattice-superset construction.
  Int superset_constant;
};

LatticeBasis lattice_basis(const std::vector<IntVec>& vectors);

struct KernelCertificate {
  RatVec lambda;  // lambda^T A >= 1 componentwise, verified exactly
};

struct KernelWitness {
  IntVec u;  // nonzero, u >= 0, A u = 0, verified exactly
};

using KernelPositivity = std::variant<KernelCertificate, KernelWitness>;

// Decides whether ker_Z(A) meets N^d \ {0}. Exactly one of the two outcomes
// is returned: a certificate lambda with lambda^T A >= 1 (so all fibers of A
// are finite), or a nonzero nonnegative integer kernel element. Exact
// rational simplex (Bland's rule) on the system lambda^T A >= 1; the witness
// comes out of the phase-1 dual when that system is infeasible.
KernelPositivity certify_kernel_positivity(const IntegerMatrix& a);

inline bool holds_certificate(const KernelPositivity& r) {
  return std::holds_alternative<KernelCertificate>(r);
}

}  // namespace fiberwalk
