#include "fiberwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fiberwalk {

TransitionMatrix transition_matrix(const FiberGraph& g) {
  if (g.degree == 0) throw ZeroDegreeError();
  const std::size_t n = g.node_count;
  TransitionMatrix s;
  s.n = n;
  s.degree = g.degree;
  s.entries.assign(n * n, 0.0);
  const double inv = 1.0 / double(g.degree);
  for (std::size_t v = 0; v < n; ++v) {
    s.entries[v * n + v] = g.loops[v] * inv;
    for (auto [w, mult] : g.neighbors[v]) s.entries[v * n + w] = mult * inv;
  }
  for (std::size_t v = 0; v < n; ++v) {
    double row = 0.0;
    for (std::size_t w = 0; w < n; ++w) row += s.entries[v * n + w];
    if (std::abs(row - 1.0) > 1e-12)
      throw std::logic_error("transition_matrix: row sum off by more than 1e-12");
  }
  if (n <= kExactTransitionLimit) {
    std::vector<Rat> exact(n * n, Rat(0));
    for (std::size_t v = 0; v < n; ++v) {
      exact[v * n + v] = Rat((long long)g.loops[v], (long long)g.degree);
      for (auto [w, mult] : g.neighbors[v])
        exact[v * n + w] = Rat((long long)mult, (long long)g.degree);
    }
    // Rows sum to exactly 1 in the rational form.
    for (std::size_t v = 0; v < n; ++v) {
      Rat row = 0;
      for (std::size_t w = 0; w < n; ++w) row += exact[v * n + w];
      if (row != 1) throw std::logic_error("transition_matrix: row sum != 1");
    }
    s.exact = std::move(exact);
  }
  return s;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, double tol) {
  if (n == 0) return {};
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
    return std::sqrt(s);
  };

  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps && off_norm() >= tol; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (apq == 0.0) continue;
        double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  return eig;
}

namespace {

double slem_from_eigenvalues(std::vector<double> eig) {
  if (eig.size() <= 1) return 0.0;
  // Drop the eigenvalue closest to 1 (the stationary eigenvector) rather
  // than requiring exact equality.
  std::size_t drop = 0;
  for (std::size_t i = 1; i < eig.size(); ++i)
    if (std::abs(eig[i] - 1.0) < std::abs(eig[drop] - 1.0)) drop = i;
  eig.erase(eig.begin() + (long)drop);
  double m = 0.0;
  for (double e : eig) m = std::max(m, std::abs(e));
  if (m > 1.0 + 1e-9) throw std::logic_error("slem: eigenvalue modulus exceeds 1");
  return std::min(m, 1.0);
}

}  // namespace

double slem(const TransitionMatrix& s) {
  const std::size_t n = s.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(s.at(i, j) - s.at(j, i)) > 1e-9)
        throw std::invalid_argument("slem: matrix not symmetric");

  auto eig = jacobi_eigenvalues(s.entries, n);

  if (s.exact) {
    // Drift check against the exact form: eigenvalue sums must match the
    // trace and the squared Frobenius norm.
    Rat trace = 0, frob2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += s.exact_at(i, i);
      for (std::size_t j = 0; j < n; ++j) frob2 += s.exact_at(i, j) * s.exact_at(i, j);
    }
    double sum = 0.0, sum2 = 0.0;
    for (double e : eig) {
      sum += e;
      sum2 += e * e;
    }
    if (std::abs(sum - to_double(trace)) > 1e-8 || std::abs(sum2 - to_double(frob2)) > 1e-8)
      throw std::logic_error("slem: eigenvalues drifted from the exact matrix");
  }
  return slem_from_eigenvalues(std::move(eig));
}

double slem_of_symmetric(const std::vector<double>& a, std::size_t n) {
  return slem_from_eigenvalues(jacobi_eigenvalues(a, n));
}

}  // namespace fiberwalk
