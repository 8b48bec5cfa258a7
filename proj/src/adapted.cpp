#include "fiberwalk/adapted.hpp"

#include "fiberwalk/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fiberwalk {

namespace {

Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

constexpr long long kCoefficientBudget = 10'000'000;

}  // namespace

Int count_coefficient_shell(std::size_t k, const Int& s) {
  if (s == 0) return 1;
  // Choose j nonzero coordinates, a composition of s into j positive parts,
  // and a sign per part.
  Int total = 0;
  Int pow2 = 1;
  for (Int j = 1; j <= Int(k) && j <= s; ++j) {
    pow2 *= 2;
    total += pow2 * binomial(Int(k), j) * binomial(s - 1, j - 1);
  }
  return total;
}

Int count_coefficient_vectors(std::size_t k, const Int& l) {
  Int total = 0;
  for (Int s = 0; s <= l; ++s) total += count_coefficient_shell(k, s);
  return total;
}

namespace {

// Enumerates coefficient vectors with |coeff|_1 = s in (composition, sign)
// lexicographic order: absolute values first (odometer over compositions of
// s), then + before - on each nonzero slot.
template <typename Fn>
void for_each_signed_composition(std::size_t k, long long s, Fn&& fn) {
  std::vector<long long> mag(k, 0);
  std::vector<Int> coeff(k, 0);
  auto signs = [&](auto&& self, std::size_t j) -> void {
    if (j == k) {
      fn(coeff);
      return;
    }
    if (mag[j] == 0) {
      coeff[j] = 0;
      self(self, j + 1);
      return;
    }
    coeff[j] = mag[j];
    self(self, j + 1);
    coeff[j] = -mag[j];
    self(self, j + 1);
  };
  auto comps = [&](auto&& self, std::size_t j, long long rem) -> void {
    if (j + 1 == k) {
      mag[j] = rem;
      signs(signs, 0);
      return;
    }
    for (long long v = 0; v <= rem; ++v) {
      mag[j] = v;
      self(self, j + 1, rem - v);
    }
  };
  if (k == 0) return;
  comps(comps, 0, s);
}

}  // namespace

AdaptedBasis power_moves(const MoveSet& m, const Int& level) {
  if (m.is_symmetric_closed())
    throw std::invalid_argument("power_moves: base must be a one-sided move set");
  if (level < 0) throw std::invalid_argument("power_moves: negative level");
  const std::size_t k = m.size();
  const std::size_t d = m.dim();

  Int budget = count_coefficient_vectors(k, level);
  if (budget > kCoefficientBudget) throw BudgetExceededError(budget);

  std::map<IntVec, std::vector<Int>> images;
  images.emplace(IntVec(d, 0), std::vector<Int>(k, 0));
  const long long lmax = level.convert_to<long long>();
  for (long long s = 1; s <= lmax; ++s) {
    for_each_signed_composition(k, s, [&](const std::vector<Int>& coeff) {
      IntVec img(d, 0);
      for (std::size_t j = 0; j < k; ++j) {
        if (coeff[j] == 0) continue;
        for (std::size_t i = 0; i < d; ++i) img[i] += coeff[j] * m.moves()[j][i];
      }
      images.emplace(std::move(img), coeff);  // keeps the first witness
    });
  }

  std::vector<IntVec> vecs;
  std::vector<std::vector<Int>> witnesses;
  vecs.reserve(images.size());
  witnesses.reserve(images.size());
  for (auto& [img, coeff] : images) {
    vecs.push_back(img);
    witnesses.push_back(coeff);
  }
  // std::map iterates in the same lexicographic order MoveSet sorts by, so
  // the witness array stays aligned.
  AdaptedBasis out{m, level, MoveSet::symmetric_closed(d, std::move(vecs)),
                   AdaptedBasis::Provenance::direct, std::move(witnesses)};
  return out;
}

AdaptResult adapt_to_fiber(const IntegerMatrix& a, const IntVec& b, const MoveSet& m) {
  auto fiber = std::make_shared<const Fiber>(enumerate_fiber(a, b));
  if (fiber->size() == 0) throw std::invalid_argument("adapt_to_fiber: empty fiber");
  FiberGraph g = build_fiber_graph(fiber, m);
  std::size_t fdiam = diameter(g);  // throws DisconnectedError when M fails
  AdaptResult res{power_moves(m, Int(fdiam)), fdiam, fiber};

  for (const auto& mv : res.basis.moves.moves())
    if (!a.in_kernel(mv)) throw std::logic_error("adapt_to_fiber: move outside kernel");

  // Postcondition: the adapted fiber graph is complete. Checked pairwise on
  // desk-scale fibers.
  if (fiber->size() <= 200) {
    const auto& pts = fiber->points();
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (!res.basis.moves.contains(vec_sub(pts[j], pts[i])))
          throw std::logic_error("adapt_to_fiber: adapted graph not complete");
  }
  return res;
}

AdaptedBasis lattice_superset(const MoveSet& m, const Int& level) {
  if (m.is_symmetric_closed())
    throw std::invalid_argument("lattice_superset: base must be a one-sided move set");
  if (level < 0) throw std::invalid_argument("lattice_superset: negative level");
  LatticeBasis lb = lattice_basis(m.moves());
  if (lb.basis.empty())
    throw std::invalid_argument("lattice_superset: empty move set");
  MoveSet basis_set = MoveSet::one_sided(m.dim(), lb.basis);
  AdaptedBasis out = power_moves(basis_set, lb.superset_constant * level);
  out.provenance = AdaptedBasis::Provenance::lattice_superset;
  return out;
}

IntVec sample_cross_polytope(std::size_t r, const Int& l, SplitMix64& rng) {
  if (r < 1) throw std::invalid_argument("sample_cross_polytope: r >= 1 required");
  if (l < 0) throw std::invalid_argument("sample_cross_polytope: negative level");

  // Pick the shell |x|_1 = s with probability proportional to its size.
  Int total = count_coefficient_vectors(r, l);
  Int ticket = rng.below_big(total);
  Int s = 0;
  for (;; ++s) {
    Int shell = count_coefficient_shell(r, s);
    if (ticket < shell) break;
    ticket -= shell;
  }
  IntVec x(r, 0);
  if (s == 0) return x;

  // Pick the support size j within the shell: 2^j C(r,j) C(s-1,j-1) points.
  Int ticket2 = rng.below_big(count_coefficient_shell(r, s));
  Int j = 0, pow2 = 1;
  for (j = 1, pow2 = 2;; ++j, pow2 *= 2) {
    Int block = pow2 * binomial(Int(r), j) * binomial(s - 1, j - 1);
    if (ticket2 < block) break;
    ticket2 -= block;
  }
  const std::size_t jj = j.convert_to<std::size_t>();

  // Uniform j-subset of positions (unranked combination).
  std::vector<std::size_t> positions;
  {
    Int rank = rng.below_big(binomial(Int(r), j));
    std::size_t next = 0;
    Int remaining = j;
    while (Int(positions.size()) < j) {
      Int with_next = binomial(Int(r - next - 1), remaining - 1);
      if (rank < with_next) {
        positions.push_back(next);
        remaining -= 1;
      } else {
        rank -= with_next;
      }
      ++next;
    }
  }

  // Uniform composition of s into j positive parts (unranked), then signs.
  std::vector<Int> parts;
  {
    Int rank = rng.below_big(binomial(s - 1, j - 1));
    Int rem = s;
    for (std::size_t idx = 0; idx + 1 < jj; ++idx) {
      Int v = 1;
      for (;; ++v) {
        // compositions of rem - v into remaining slots
        Int cnt = binomial(rem - v - 1, Int(jj - idx - 2));
        if (rank < cnt) break;
        rank -= cnt;
      }
      parts.push_back(v);
      rem -= v;
    }
    parts.push_back(rem);
  }
  std::uint64_t signs = rng.below(1ull << jj);
  for (std::size_t idx = 0; idx < jj; ++idx)
    x[positions[idx]] = (signs >> idx & 1) ? -parts[idx] : parts[idx];
  return x;
}

}  // namespace fiberwalk
