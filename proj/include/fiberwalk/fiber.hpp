#pragma once

#include "fiberwalk/matrix.hpp"
#include "fiberwalk/numeric.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace fiberwalk {

// The complete, lexicographically sorted set of nonnegative integer
// solutions of A u = b. Completeness is certified by the coordinate box
// bounds u_j <= lambda^T b / (lambda^T A)_j derived from the positivity
// certificate attached to A.
class Fiber {
 public:
  Fiber(std::shared_ptr<const IntegerMatrix> matrix, IntVec rhs,
        std::vector<IntVec> points)
      : matrix_(std::move(matrix)), rhs_(std::move(rhs)), points_(std::move(points)) {}

  const IntegerMatrix& matrix() const { return *matrix_; }
  std::shared_ptr<const IntegerMatrix> matrix_ptr() const { return matrix_; }
  const IntVec& rhs() const { return rhs_; }
  const std::vector<IntVec>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return matrix_->cols(); }

  const IntVec& point(std::size_t i) const { return points_[i]; }

  // Position of a point in the sorted enumeration, if present.
  std::optional<std::size_t> find(const IntVec& p) const;

  bool contains(const IntVec& p) const { return find(p).has_value(); }

 private:
  std::shared_ptr<const IntegerMatrix> matrix_;
  IntVec rhs_;
  std::vector<IntVec> points_;  // strictly increasing lexicographically
};

class MissingCertificateError : public std::runtime_error {
 public:
  MissingCertificateError()
      : std::runtime_error("enumerate_fiber: matrix carries no positivity certificate") {}
};

// Depth-first enumeration in natural coordinate order with exact residual
// feasibility pruning. b outside the cone yields an empty fiber, not an
// error.
Fiber enumerate_fiber(const IntegerMatrix& a, const IntVec& b);
Fiber enumerate_fiber(std::shared_ptr<const IntegerMatrix> a, const IntVec& b);

// |{w in F : w_j = value}| for a 0-based coordinate j.
std::size_t slice_count(const Fiber& f, std::size_t j, const Int& value);

// [|F(A, i*b)|] for i = 0..i_max.
std::vector<Int> ray_growth(const IntegerMatrix& a, const IntVec& b, std::size_t i_max);

struct GrowthFit {
  bool conclusive = false;
  std::size_t degree = 0;
  Int stabilized_value = 0;  // the constant the forward differences settle at
};

// Heuristic degree probe: smallest r whose r-th forward differences are
// constant over the trailing half of the sequence. Handles the quasi-period
// one (true polynomial) case only; anything else reports inconclusive.
GrowthFit fit_growth_degree(const std::vector<Int>& counts);

// Exact value of (m * |lambda|_inf * |b|_inf / min_j (lambda^T A)_j)^d,
// clamped to 1 when b = 0 (the fiber of 0 is {0}).
Rat fiber_size_upper_bound(const IntegerMatrix& a, const IntVec& b);

}  // namespace fiberwalk
