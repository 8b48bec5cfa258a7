#pragma once

#include "fiberwalk/numeric.hpp"

#include <optional>
#include <stdexcept>

namespace fiberwalk {

// Constraint matrix A in Z^{m x d}, row-major, with an optional rational
// certificate lambda satisfying lambda^T A >= 1 componentwise. The
// certificate is what makes every fiber {u >= 0 : Au = b} finite and is
// checked exactly whenever it is attached.
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("IntegerMatrix: zero dimension");
  }

  static IntegerMatrix from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty() || rows.front().empty())
      throw std::invalid_argument("IntegerMatrix: empty row set");
    IntegerMatrix a(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != a.cols_)
        throw std::invalid_argument("IntegerMatrix: ragged rows");
      for (std::size_t j = 0; j < a.cols_; ++j) a.at(i, j) = rows[i][j];
    }
    return a;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const {
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
  }

  IntVec column(std::size_t c) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
  }

  // A * u for u in Z^d.
  IntVec apply(const IntVec& u) const {
    if (u.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    IntVec b(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) b[i] += at(i, j) * u[j];
    return b;
  }

  bool in_kernel(const IntVec& u) const { return is_zero(apply(u)); }

  // lambda^T A as exact rationals.
  RatVec left_apply(const RatVec& lambda) const {
    if (lambda.size() != rows_)
      throw std::invalid_argument("left_apply: dimension mismatch");
    RatVec w(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) w[j] += lambda[i] * at(i, j);
    return w;
  }

  // Attaches lambda after checking lambda^T A >= 1 exactly.
  void attach_certificate(RatVec lambda) {
    RatVec w = left_apply(lambda);
    for (const Rat& x : w)
      if (x < 1)
        throw std::invalid_argument(
            "attach_certificate: lambda^T A has an entry below 1");
    certificate_ = std::move(lambda);
  }

  const std::optional<RatVec>& positivity_certificate() const { return certificate_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
  std::optional<RatVec> certificate_;
};

}  // namespace fiberwalk
