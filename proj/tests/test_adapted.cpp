#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fiberwalk/adapted.hpp"
#include "fiberwalk/graph.hpp"
#include "fiberwalk/models.hpp"
#include "fiberwalk/spectral.hpp"
#include "oracles.hpp"

#include <set>

using namespace fiberwalk;
using oracles::vec;

namespace {

std::set<IntVec> as_set(const MoveSet& m) {
  return std::set<IntVec>(m.moves().begin(), m.moves().end());
}

}  // namespace

TEST_CASE("complexity") {
  CHECK(complexity(build_single_row(3).markov_basis) == 1);
  CHECK(complexity(MoveSet::one_sided(2, {vec({2, -2})})) == 2);
  CHECK(complexity(build_hemmecke(2).markov_basis) == 1);
  CHECK_THROWS_AS(complexity(MoveSet::one_sided(2, {})), std::invalid_argument);
}

TEST_CASE("counting coefficient vectors") {
  CHECK(count_coefficient_vectors(2, 2) == 13);  // 1 + 4 + 8
  CHECK(count_coefficient_shell(2, 0) == 1);
  CHECK(count_coefficient_shell(2, 1) == 4);
  CHECK(count_coefficient_shell(2, 2) == 8);
  CHECK(count_coefficient_vectors(1, 3) == 7);
  // matches the naive odometer on a rank-k independent instance
  auto m = MoveSet::one_sided(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  for (long long l = 0; l <= 4; ++l)
    CHECK(Int(oracles::brute_force_power_images(m, l).size()) ==
          count_coefficient_vectors(3, l));
}

TEST_CASE("power moves of a single move") {
  auto m = MoveSet::one_sided(2, {vec({1, -1})});
  auto p = power_moves(m, 2);
  CHECK(as_set(p.moves) == std::set<IntVec>{vec({0, 0}), vec({1, -1}), vec({-1, 1}),
                                            vec({2, -2}), vec({-2, 2})});
  CHECK(p.moves.is_symmetric_closed());
  CHECK(p.level == 2);
}

TEST_CASE("power moves at levels 0 and 1") {
  auto m3 = build_single_row(3).markov_basis;
  auto p0 = power_moves(m3, 0);
  CHECK(as_set(p0.moves) == std::set<IntVec>{vec({0, 0, 0})});
  auto p1 = power_moves(m3, 1);
  std::set<IntVec> expect{vec({0, 0, 0})};
  for (const auto& mv : m3.effective_moves()) expect.insert(mv);
  CHECK(as_set(p1.moves) == expect);
}

TEST_CASE("power moves match the naive coefficient odometer") {
  // fixed families
  auto m3 = build_single_row(3).markov_basis;
  for (long long l = 0; l <= 5; ++l)
    CHECK(as_set(power_moves(m3, l).moves) == oracles::brute_force_power_images(m3, l));
  auto hem = build_hemmecke(1).markov_basis;
  for (long long l = 0; l <= 3; ++l)
    CHECK(as_set(power_moves(hem, l).moves) == oracles::brute_force_power_images(hem, l));
  // seeded random move sets
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto rm = oracles::random_model(seed);
    long long l = 1 + seed % 3;
    CHECK(as_set(power_moves(rm.moves, l).moves) ==
          oracles::brute_force_power_images(rm.moves, l));
  }
}

TEST_CASE("power moves monotone in the level") {
  auto m3 = build_single_row(3).markov_basis;
  auto prev = as_set(power_moves(m3, 0).moves);
  for (long long l = 1; l <= 6; ++l) {
    auto cur = as_set(power_moves(m3, l).moves);
    CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    prev = std::move(cur);
  }
}

TEST_CASE("power-move growth tracks the move-lattice rank") {
  auto m3 = build_single_row(3).markov_basis;  // rank 2
  for (long long l : {8, 16}) {
    double ratio = double(power_moves(m3, 2 * l).moves.size()) /
                   double(power_moves(m3, l).moves.size());
    CHECK(ratio > 4.0 * 0.8);
    CHECK(ratio < 4.0 * 1.2);
  }
}

TEST_CASE("witnesses reconstruct their images within the level") {
  auto m3 = build_single_row(3).markov_basis;
  auto p = power_moves(m3, 3);
  REQUIRE(p.coefficient_witnesses.size() == p.moves.size());
  for (std::size_t i = 0; i < p.moves.size(); ++i) {
    const auto& coeff = p.coefficient_witnesses[i];
    IntVec img(3, 0);
    Int norm = 0;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      norm += abs(coeff[j]);
      for (std::size_t t = 0; t < 3; ++t) img[t] += coeff[j] * m3.moves()[j][t];
    }
    CHECK(norm <= p.level);
    CHECK(img == p.moves.moves()[i]);
  }
}

TEST_CASE("budget cap rejects oversized enumerations") {
  auto hem = build_hemmecke(2).markov_basis;  // 5 moves
  CHECK_THROWS_AS(power_moves(hem, 50), BudgetExceededError);
}

TEST_CASE("adapt to fiber: complete graph and closed-form slem") {
  auto a2 = build_single_row(2);
  auto res = adapt_to_fiber(a2.matrix, vec({2}), a2.markov_basis);
  CHECK(res.fiber_diameter == 2);
  CHECK(res.basis.moves.size() == 5);
  auto g = build_fiber_graph(res.fiber, res.basis.moves);
  CHECK(diameter(g) == 1);  // complete
  // slem = 1 - |F| / |M^b| exactly
  double expected = 1.0 - 3.0 / 5.0;
  CHECK(slem(transition_matrix(g)) == doctest::Approx(expected).epsilon(1e-10));

  auto a3 = build_single_row(3);
  auto res3 = adapt_to_fiber(a3.matrix, vec({2}), a3.markov_basis);
  CHECK(res3.fiber_diameter == 4);
  auto g3 = build_fiber_graph(res3.fiber, res3.basis.moves);
  CHECK(diameter(g3) == 1);
}

TEST_CASE("adapted transition matrix is uniform plus a loop diagonal") {
  // S = (1/|M^b|) * (all-ones) + ((|M^b| - |F|)/|M^b|) * identity
  auto a2 = build_single_row(2);
  auto res = adapt_to_fiber(a2.matrix, vec({2}), a2.markov_basis);
  auto s = transition_matrix(build_fiber_graph(res.fiber, res.basis.moves));
  REQUIRE(s.exact.has_value());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(s.exact_at(i, j) == (i == j ? Rat(3, 5) : Rat(1, 5)));
}

TEST_CASE("adapt to fiber rejects disconnecting move sets") {
  auto a2 = build_single_row(2);
  CHECK_THROWS_AS(
      adapt_to_fiber(a2.matrix, vec({3}), MoveSet::one_sided(2, {vec({2, -2})})),
      DisconnectedError);
}

TEST_CASE("lattice superset of dependent moves") {
  auto m = MoveSet::one_sided(2, {vec({1, -1}), vec({2, -2})});
  auto sup = lattice_superset(m, 1);
  CHECK(sup.provenance == AdaptedBasis::Provenance::lattice_superset);
  CHECK(sup.level == 2);  // C * l with C = 2
  CHECK(as_set(sup.moves) == std::set<IntVec>{vec({0, 0}), vec({1, -1}), vec({-1, 1}),
                                              vec({2, -2}), vec({-2, 2})});
  // contains M(1)
  auto direct = as_set(power_moves(m, 1).moves);
  auto s = as_set(sup.moves);
  CHECK(std::includes(s.begin(), s.end(), direct.begin(), direct.end()));
}

TEST_CASE("lattice superset contains the direct power set") {
  for (std::uint64_t seed = 3; seed <= 7; ++seed) {
    auto rm = oracles::random_model(seed);
    long long l = 1 + seed % 2;
    auto direct = as_set(power_moves(rm.moves, l).moves);
    auto sup = as_set(lattice_superset(rm.moves, l).moves);
    CHECK(std::includes(sup.begin(), sup.end(), direct.begin(), direct.end()));
  }
}

TEST_CASE("cross-polytope sampling: degenerate case") {
  SplitMix64 rng(7);
  for (int i = 0; i < 10; ++i) CHECK(sample_cross_polytope(1, 0, rng) == vec({0}));
}

TEST_CASE("cross-polytope sampling: uniform over the 13 points") {
  // chi-square uniformity over {x in Z^2 : |x|_1 <= 2}, 13000 draws
  SplitMix64 rng(20240601);
  std::map<IntVec, long long> freq;
  const long long draws = 13000;
  for (long long i = 0; i < draws; ++i) freq[sample_cross_polytope(2, 2, rng)]++;
  CHECK(freq.size() == 13);
  double stat = 0.0;
  const double expect = double(draws) / 13.0;
  for (const auto& [pt, cnt] : freq) {
    CHECK(Int(abs(pt[0]) + abs(pt[1])) <= 2);
    stat += (cnt - expect) * (cnt - expect) / expect;
  }
  CHECK(oracles::chi2_pvalue(stat, 12.0) >= 0.001);
}

TEST_CASE("cross-polytope sampling: full coverage in 100N draws") {
  SplitMix64 rng(99);
  std::set<IntVec> seen;
  const long long n = 25;  // |{x in Z^2 : |x|_1 <= 3}| = 1 + 4 + 8 + 12
  for (long long i = 0; i < 100 * n; ++i) seen.insert(sample_cross_polytope(2, 3, rng));
  CHECK(Int(seen.size()) == count_coefficient_vectors(2, 3));
}
