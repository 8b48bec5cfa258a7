#include "fiberwalk/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fiberwalk {

std::size_t integer_rank(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t d = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != d) throw std::invalid_argument("integer_rank: ragged vectors");

  // Work on the transpose (vectors as rows); row rank == column rank.
  std::vector<IntVec> m(vectors);
  const std::size_t nrows = m.size();
  std::size_t rank = 0;
  Int prev_pivot = 1;
  for (std::size_t col = 0; col < d && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && m[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[rank], m[piv]);
    // Bareiss step: exact division by the previous pivot.
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < d; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev_pivot;
      m[i][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

// Solves B x = target for column-echelon B (pivot rows strictly increasing,
// positive pivots). Returns integer coefficients; throws if the target is
// not in the lattice spanned by B.
std::vector<Int> solve_over_echelon(const std::vector<IntVec>& basis,
                                    const std::vector<std::size_t>& pivot_rows,
                                    IntVec target) {
  std::vector<Int> coeff(basis.size(), 0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const std::size_t r = pivot_rows[j];
    if (target[r] % basis[j][r] != 0)
      throw std::runtime_error("solve_over_echelon: target not in lattice");
    Int q = target[r] / basis[j][r];
    coeff[j] = q;
    for (std::size_t i = 0; i < target.size(); ++i) target[i] -= q * basis[j][i];
  }
  if (!is_zero(target))
    throw std::runtime_error("solve_over_echelon: target not in lattice");
  return coeff;
}

}  // namespace

LatticeBasis lattice_basis(const std::vector<IntVec>& vectors) {
  LatticeBasis out;
  out.superset_constant = 0;
  if (vectors.empty()) return out;
  const std::size_t d = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != d) throw std::invalid_argument("lattice_basis: ragged vectors");

  // Columns generate the lattice; column operations (swap, negate, add
  // integer multiples) preserve it. Pivot on minimal absolute value to keep
  // entries small (HNF-style column reduction).
  std::vector<IntVec> cols(vectors);
  std::size_t c = 0;
  std::vector<std::size_t> pivot_rows;
  for (std::size_t r = 0; r < d && c < cols.size(); ++r) {
    for (;;) {
      std::size_t best = cols.size();
      for (std::size_t j = c; j < cols.size(); ++j) {
        if (cols[j][r] == 0) continue;
        if (best == cols.size() || abs(cols[j][r]) < abs(cols[best][r])) best = j;
      }
      if (best == cols.size()) break;  // row r clear beyond c
      std::swap(cols[c], cols[best]);
      bool others = false;
      for (std::size_t j = c + 1; j < cols.size(); ++j) {
        if (cols[j][r] == 0) continue;
        // Round-to-nearest quotient shrinks |remainder| to <= |pivot|/2.
        Int p = cols[c][r];
        Int q = cols[j][r] / p;
        Int rem = cols[j][r] - q * p;
        if (2 * abs(rem) > abs(p)) q += (rem > 0) == (p > 0) ? 1 : -1;
        if (q != 0)
          for (std::size_t i = 0; i < d; ++i) cols[j][i] -= q * cols[c][i];
        if (cols[j][r] != 0) others = true;
      }
      if (!others) break;
    }
    if (cols[c][r] != 0) {
      if (cols[c][r] < 0)
        for (std::size_t i = 0; i < d; ++i) cols[c][i] = -cols[c][i];
      pivot_rows.push_back(r);
      ++c;
    }
  }
  out.basis.assign(cols.begin(), cols.begin() + c);

  // Coefficients of every input over the basis, and the superset constant
  // C = sum_j max_i |lambda_j^i|.
  out.coefficients.reserve(vectors.size());
  for (const auto& v : vectors)
    out.coefficients.push_back(solve_over_echelon(out.basis, pivot_rows, v));
  for (std::size_t j = 0; j < out.basis.size(); ++j) {
    Int mx = 0;
    for (const auto& cf : out.coefficients) mx = std::max(mx, abs(cf[j]));
    out.superset_constant += mx;
  }
  return out;
}

namespace {

// Dense exact-rational phase-1 simplex used only by the certificate op.
// Minimizes the sum of artificial variables for  M x = rhs, x >= 0  with
// rhs >= 0; artificials occupy the last `nrows` columns.
struct Phase1 {
  std::size_t nrows, ncols;        // structural columns (without artificials)
  std::vector<RatVec> t;           // nrows+1 rows, ncols+nrows+1 columns
  std::vector<std::size_t> basis;  // basic column per row

  Phase1(const std::vector<RatVec>& m, const RatVec& rhs)
      : nrows(m.size()), ncols(m.empty() ? 0 : m.front().size()) {
    t.assign(nrows + 1, RatVec(ncols + nrows + 1, 0));
    for (std::size_t i = 0; i < nrows; ++i) {
      for (std::size_t j = 0; j < ncols; ++j) t[i][j] = m[i][j];
      t[i][ncols + i] = 1;
      t[i].back() = rhs[i];
      basis.push_back(ncols + i);
    }
    // Objective row: reduced costs for cost vector (0,...,0,1,...,1).
    for (std::size_t j = 0; j <= ncols + nrows; ++j) {
      Rat s = 0;
      for (std::size_t i = 0; i < nrows; ++i) s += t[i][j];
      t[nrows][j] = (j >= ncols && j < ncols + nrows ? Rat(1) : Rat(0)) - s;
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rat p = t[row][col];
    for (auto& x : t[row]) x /= p;
    for (std::size_t i = 0; i <= nrows; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (std::size_t j = 0; j <= ncols + nrows; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Bland's rule; cannot cycle, so this always terminates.
  void solve() {
    for (;;) {
      std::size_t enter = ncols + nrows;
      for (std::size_t j = 0; j < ncols + nrows; ++j)
        if (t[nrows][j] < 0) {
          enter = j;
          break;
        }
      if (enter == ncols + nrows) return;
      std::size_t leave = nrows;
      for (std::size_t i = 0; i < nrows; ++i) {
        if (t[i][enter] <= 0) continue;
        if (leave == nrows) {
          leave = i;
          continue;
        }
        Rat cur = t[i].back() / t[i][enter];
        Rat best = t[leave].back() / t[leave][enter];
        if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
      }
      if (leave == nrows)
        throw std::runtime_error("phase-1 simplex: unbounded (internal error)");
      pivot(leave, enter);
    }
  }

  Rat objective() const { return -t[nrows].back(); }

  Rat value(std::size_t col) const {
    for (std::size_t i = 0; i < nrows; ++i)
      if (basis[i] == col) return t[i].back();
    return 0;
  }

  // Dual value of constraint i at optimality: cost(artificial_i) minus its
  // reduced cost.
  Rat dual(std::size_t i) const { return Rat(1) - t[nrows][ncols + i]; }
};

IntVec primitive_integer(const RatVec& y) {
  Int l = 1;
  for (const Rat& r : y) l = lcm(l, denominator(r));
  IntVec u(y.size());
  Int g = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    u[i] = numerator(y[i]) * (l / denominator(y[i]));
    g = gcd(g, u[i]);
  }
  if (g > 1)
    for (auto& x : u) x /= g;
  return u;
}

}  // namespace

KernelPositivity certify_kernel_positivity(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), d = a.cols();
  // Feasibility of lambda^T A >= 1 in standard form:
  //   A^T lam+ - A^T lam- - s = 1,   lam+, lam-, s >= 0.
  std::vector<RatVec> rows(d, RatVec(2 * m + d, 0));
  RatVec rhs(d, 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      rows[j][i] = Rat(a.at(i, j));
      rows[j][m + i] = Rat(-a.at(i, j));
    }
    rows[j][2 * m + j] = -1;
  }
  Phase1 lp(rows, rhs);
  lp.solve();

  if (lp.objective() == 0) {
    RatVec lambda(m);
    for (std::size_t i = 0; i < m; ++i) lambda[i] = lp.value(i) - lp.value(m + i);
    // Exact verification before returning.
    RatVec w = a.left_apply(lambda);
    for (const Rat& x : w)
      if (x < 1) throw std::runtime_error("certificate verification failed");
    return KernelCertificate{std::move(lambda)};
  }

  // Infeasible: the phase-1 dual y satisfies y >= 0, A y = 0, sum(y) > 0,
  // which after clearing denominators is the kernel witness.
  RatVec y(d);
  for (std::size_t j = 0; j < d; ++j) y[j] = lp.dual(j);
  IntVec u = primitive_integer(y);
  if (is_zero(u) || !is_nonnegative(u) || !a.in_kernel(u))
    throw std::runtime_error("witness verification failed");
  return KernelWitness{std::move(u)};
}

}  // namespace fiberwalk
