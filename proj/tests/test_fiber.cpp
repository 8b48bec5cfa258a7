#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fiberwalk/fiber.hpp"
#include "fiberwalk/models.hpp"
#include "oracles.hpp"

using namespace fiberwalk;
using oracles::vec;

TEST_CASE("fiber of the two-coordinate sum") {
  auto model = build_single_row(2);
  auto f = enumerate_fiber(model.matrix, vec({3}));
  REQUIRE(f.size() == 4);
  CHECK(f.point(0) == vec({0, 3}));
  CHECK(f.point(1) == vec({1, 2}));
  CHECK(f.point(2) == vec({2, 1}));
  CHECK(f.point(3) == vec({3, 0}));
  CHECK(f.find(vec({2, 1})) == 2);
  CHECK(!f.find(vec({2, 2})).has_value());
}

TEST_CASE("fiber sizes of the built-in families") {
  auto a3 = build_single_row(3);
  CHECK(enumerate_fiber(a3.matrix, vec({6})).size() == 28);  // (6+1)(6+2)/2

  auto ind = build_independence(2, 2);
  for (long long i = 0; i <= 5; ++i)
    CHECK(enumerate_fiber(ind.matrix, vec({i, i, i, i})).size() == std::size_t(i) + 1);
}

TEST_CASE("negative rhs gives an empty fiber, missing certificate throws") {
  auto model = build_single_row(2);
  CHECK(enumerate_fiber(model.matrix, vec({-1})).size() == 0);
  IntegerMatrix bare = IntegerMatrix::from_rows({vec({1, 1})});
  CHECK_THROWS_AS(enumerate_fiber(bare, vec({2})), MissingCertificateError);
}

TEST_CASE("enumeration matches the box brute force on the model families") {
  auto a3 = build_single_row(3);
  for (long long b = 0; b <= 7; ++b) {
    auto f = enumerate_fiber(a3.matrix, vec({b}));
    auto oracle = oracles::brute_force_fiber(a3.matrix, vec({b}),
                                             std::vector<long long>(3, b));
    CHECK(f.points() == oracle);
  }
  auto hem = build_hemmecke(1);
  IntVec b(3, 0);
  b[2] = 2;
  auto f = enumerate_fiber(hem.matrix, b);
  CHECK(f.points() == oracles::brute_force_fiber(hem.matrix, b,
                                                 std::vector<long long>(6, 2)));
}

TEST_CASE("enumeration matches the box brute force on seeded random systems") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto model = oracles::random_model(seed);
    auto f = enumerate_fiber(model.matrix, model.rhs);
    // box bound from the (first-row) certificate: u_j <= b_0 / a_0j <= b_0
    long long cap = model.rhs[0].convert_to<long long>();
    auto oracle = oracles::brute_force_fiber(
        model.matrix, model.rhs,
        std::vector<long long>(model.matrix.cols(), cap));
    CHECK(f.points() == oracle);
  }
}

TEST_CASE("enumeration with a mixed-sign second row") {
  auto a = IntegerMatrix::from_rows({oracles::vec({1, 1, 1}), oracles::vec({1, -1, 0})});
  a.attach_certificate(RatVec{Rat(1), Rat(0)});
  auto f = enumerate_fiber(a, oracles::vec({4, 0}));
  REQUIRE(f.size() == 3);  // (a, a, 4 - 2a)
  CHECK(f.point(0) == oracles::vec({0, 0, 4}));
  CHECK(f.point(1) == oracles::vec({1, 1, 2}));
  CHECK(f.point(2) == oracles::vec({2, 2, 0}));
}

TEST_CASE("slice counts partition the fiber") {
  auto a3 = build_single_row(3);
  auto f = enumerate_fiber(a3.matrix, vec({4}));
  CHECK(slice_count(f, 0, 0) == 5);  // points (0, a, 4-a)
  auto f2 = enumerate_fiber(build_single_row(2).matrix, vec({3}));
  CHECK(slice_count(f2, 0, 5) == 0);
  for (std::size_t j = 0; j < 3; ++j) {
    std::size_t total = 0;
    for (long long l = 0; l <= 4; ++l) total += slice_count(f, j, l);
    CHECK(total == f.size());
  }
}

TEST_CASE("ray growth sequences") {
  auto a3 = build_single_row(3);
  CHECK(ray_growth(a3.matrix, vec({1}), 3) ==
        std::vector<Int>{1, 3, 6, 10});  // triangular numbers
  auto a2 = build_single_row(2);
  CHECK(ray_growth(a2.matrix, vec({1}), 4) == std::vector<Int>{1, 2, 3, 4, 5});
  auto ind = build_independence(2, 2);
  CHECK(ray_growth(ind.matrix, vec({1, 1, 1, 1}), 3) == std::vector<Int>{1, 2, 3, 4});
}

TEST_CASE("ray growth requires a nontrivial range") {
  auto a2 = build_single_row(2);
  CHECK_THROWS_AS(ray_growth(a2.matrix, oracles::vec({1}), 0), std::invalid_argument);
}

TEST_CASE("growth degree fit") {
  auto fit = fit_growth_degree({1, 3, 6, 10, 15, 21});
  REQUIRE(fit.conclusive);
  CHECK(fit.degree == 2);
  CHECK(fit.stabilized_value == 1);

  auto lin = fit_growth_degree({1, 2, 3, 4, 5});
  REQUIRE(lin.conclusive);
  CHECK(lin.degree == 1);

  CHECK(!fit_growth_degree({1, 2, 4, 8, 16}).conclusive);
  CHECK_THROWS_AS(fit_growth_degree({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(fit_growth_degree({0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("fiber size upper bound") {
  auto a2 = build_single_row(2);
  CHECK(fiber_size_upper_bound(a2.matrix, vec({3})) == 9);
  CHECK(enumerate_fiber(a2.matrix, vec({3})).size() <= 9);

  auto a3 = build_single_row(3);
  CHECK(fiber_size_upper_bound(a3.matrix, vec({6})) == 216);
  CHECK(enumerate_fiber(a3.matrix, vec({6})).size() <= 216);

  CHECK(fiber_size_upper_bound(a2.matrix, vec({0})) == 1);
}

TEST_CASE("growth is non-decreasing along the family rays") {
  auto a4 = build_single_row(4);
  auto counts = ray_growth(a4.matrix, vec({1}), 6);
  for (std::size_t i = 0; i + 1 < counts.size(); ++i) CHECK(counts[i] <= counts[i + 1]);
  auto hem = build_hemmecke(1);
  IntVec e3(3, 0);
  e3[2] = 1;
  auto hc = ray_growth(hem.matrix, e3, 4);
  CHECK(hc == std::vector<Int>{1, 4, 10, 20, 35});
  for (std::size_t i = 0; i + 1 < hc.size(); ++i) CHECK(hc[i] <= hc[i + 1]);
}
