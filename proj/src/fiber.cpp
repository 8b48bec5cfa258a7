#include "fiberwalk/fiber.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiberwalk {

std::optional<std::size_t> Fiber::find(const IntVec& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

namespace {

struct Enumerator {
  const IntegerMatrix& a;
  std::size_t m, d;
  std::vector<Int> box;           // per-coordinate upper bound
  std::vector<Int> weight;        // scaled mu^T A, entries >= 1
  std::vector<IntVec> suffix_min; // suffix_min[t][i]: least reachable value of
  std::vector<IntVec> suffix_max; // sum_{j>=t} A[i][j]*u_j, and the largest
  std::vector<IntVec> out;

  void dfs(std::size_t t, IntVec& residual, Int budget, IntVec& u) {
    if (t == d) {
      if (is_zero(residual)) out.push_back(u);
      return;
    }
    for (std::size_t i = 0; i < m; ++i)
      if (residual[i] < suffix_min[t][i] || residual[i] > suffix_max[t][i]) return;
    Int hi = budget / weight[t];
    if (hi > box[t]) hi = box[t];
    for (Int v = 0; v <= hi; ++v) {
      if (v > 0) {
        for (std::size_t i = 0; i < m; ++i) residual[i] -= a.at(i, t);
        budget -= weight[t];
      }
      u[t] = v;
      dfs(t + 1, residual, budget, u);
    }
    // restore residual for the caller
    for (Int v = hi; v > 0; --v)
      for (std::size_t i = 0; i < m; ++i) residual[i] += a.at(i, t);
    u[t] = 0;
  }
};

}  // namespace

Fiber enumerate_fiber(std::shared_ptr<const IntegerMatrix> a, const IntVec& b) {
  const auto& cert = a->positivity_certificate();
  if (!cert) throw MissingCertificateError();
  if (b.size() != a->rows())
    throw std::invalid_argument("enumerate_fiber: rhs dimension mismatch");

  const std::size_t m = a->rows(), d = a->cols();

  // Scale the certificate to integers: mu = L*lambda, weight = mu^T A >= L.
  Int scale = 1;
  for (const Rat& r : *cert) scale = lcm(scale, denominator(r));
  IntVec mu(m);
  for (std::size_t i = 0; i < m; ++i)
    mu[i] = numerator((*cert)[i]) * (scale / denominator((*cert)[i]));
  IntVec weight(d);
  for (std::size_t j = 0; j < d; ++j) {
    weight[j] = 0;
    for (std::size_t i = 0; i < m; ++i) weight[j] += mu[i] * a->at(i, j);
  }

  Int total = dot(mu, b);  // = sum_j weight_j * u_j for any solution u
  if (total < 0) return Fiber(std::move(a), b, {});

  Enumerator e{*a, m, d, {}, weight, {}, {}, {}};
  e.box.resize(d);
  for (std::size_t j = 0; j < d; ++j) e.box[j] = total / weight[j];

  e.suffix_min.assign(d + 1, IntVec(m, 0));
  e.suffix_max.assign(d + 1, IntVec(m, 0));
  for (std::size_t t = d; t-- > 0;) {
    for (std::size_t i = 0; i < m; ++i) {
      Int c = a->at(i, t) * e.box[t];
      e.suffix_min[t][i] = e.suffix_min[t + 1][i] + (c < 0 ? c : Int(0));
      e.suffix_max[t][i] = e.suffix_max[t + 1][i] + (c > 0 ? c : Int(0));
    }
  }

  IntVec residual = b;
  IntVec u(d, 0);
  e.dfs(0, residual, total, u);
  // Ascending DFS in natural coordinate order emits points in lex order.
  return Fiber(std::move(a), b, std::move(e.out));
}

Fiber enumerate_fiber(const IntegerMatrix& a, const IntVec& b) {
  return enumerate_fiber(std::make_shared<const IntegerMatrix>(a), b);
}

std::size_t slice_count(const Fiber& f, std::size_t j, const Int& value) {
  if (j >= f.dim()) throw std::invalid_argument("slice_count: coordinate out of range");
  std::size_t n = 0;
  for (const auto& p : f.points())
    if (p[j] == value) ++n;
  return n;
}

std::vector<Int> ray_growth(const IntegerMatrix& a, const IntVec& b, std::size_t i_max) {
  if (i_max < 1) throw std::invalid_argument("ray_growth: i_max must be >= 1");
  auto shared = std::make_shared<const IntegerMatrix>(a);
  std::vector<Int> counts;
  counts.reserve(i_max + 1);
  for (std::size_t i = 0; i <= i_max; ++i) {
    IntVec bi(b.size());
    for (std::size_t r = 0; r < b.size(); ++r) bi[r] = Int(i) * b[r];
    counts.push_back(Int(enumerate_fiber(shared, bi).size()));
  }
  return counts;
}

GrowthFit fit_growth_degree(const std::vector<Int>& counts) {
  if (counts.size() < 4)
    throw std::invalid_argument("fit_growth_degree: need at least 4 counts");
  for (const Int& c : counts)
    if (c <= 0) throw std::invalid_argument("fit_growth_degree: counts must be positive");

  std::vector<Int> seq = counts;
  for (std::size_t r = 0;; ++r) {
    const std::size_t len = seq.size();
    if (len < 2) break;
    const std::size_t window = std::max<std::size_t>(2, (len + 1) / 2);
    if (window <= len) {
      bool constant = true;
      for (std::size_t i = len - window + 1; i < len; ++i)
        if (seq[i] != seq[len - window]) {
          constant = false;
          break;
        }
      if (constant) return GrowthFit{true, r, seq.back()};
    }
    std::vector<Int> diff(len - 1);
    for (std::size_t i = 0; i + 1 < len; ++i) diff[i] = seq[i + 1] - seq[i];
    seq = std::move(diff);
  }
  return GrowthFit{};
}

Rat fiber_size_upper_bound(const IntegerMatrix& a, const IntVec& b) {
  const auto& cert = a.positivity_certificate();
  if (!cert) throw MissingCertificateError();
  if (b.size() != a.rows())
    throw std::invalid_argument("fiber_size_upper_bound: rhs dimension mismatch");

  Rat lambda_inf = 0;
  for (const Rat& r : *cert) lambda_inf = std::max(lambda_inf, abs(r));
  Int b_inf = max_abs_entry(b);
  RatVec w = a.left_apply(*cert);
  Rat w_min = w.front();
  for (const Rat& x : w) w_min = std::min(w_min, x);

  Rat base = Rat(a.rows()) * lambda_inf * Rat(b_inf) / w_min;
  Rat bound = 1;
  for (std::size_t j = 0; j < a.cols(); ++j) bound *= base;
  if (is_zero(b) && bound < 1) bound = 1;  // F(A, 0) = {0}; formula degenerates at b = 0
  return bound;
}

}  // namespace fiberwalk
