#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fiberwalk/linalg.hpp"
#include "fiberwalk/models.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

using namespace fiberwalk;
using oracles::vec;

TEST_CASE("single-row family") {
  auto m2 = build_single_row(2);
  CHECK(m2.matrix.rows() == 1);
  CHECK(m2.matrix.row(0) == vec({1, 1}));
  REQUIRE(m2.markov_basis.size() == 1);
  CHECK(m2.markov_basis.moves()[0] == vec({1, -1}));

  auto m3 = build_single_row(3);
  CHECK(m3.markov_basis.size() == 2);
  CHECK(m3.markov_basis.contains(vec({1, -1, 0})));
  CHECK(m3.markov_basis.contains(vec({1, 0, -1})));

  CHECK_THROWS_AS(build_single_row(1), std::invalid_argument);
}

TEST_CASE("independence model: matrix shape and the 2x2 move") {
  auto m = build_independence(2, 2);
  CHECK(m.matrix.rows() == 4);
  CHECK(m.matrix.cols() == 4);
  REQUIRE(m.markov_basis.size() == 1);
  CHECK(m.markov_basis.moves()[0] == vec({1, -1, -1, 1}));

  CHECK(build_independence(2, 3).markov_basis.size() == 3);
  CHECK_THROWS_AS(build_independence(1, 3), std::invalid_argument);
}

TEST_CASE("independence model: moves have zero row and column sums") {
  for (auto [n, mm] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 3}, {4, 2}}) {
    auto model = build_independence(n, mm);
    for (const auto& mv : model.markov_basis.moves()) {
      for (std::size_t i = 0; i < n; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < mm; ++j) s += mv[i * mm + j];
        CHECK(s == 0);
      }
      for (std::size_t j = 0; j < mm; ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += mv[i * mm + j];
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("independence model: basic-move count matches orbit enumeration") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t m = 2; m <= 4; ++m) {
      auto model = build_independence(n, m);
      // binom(n,2) * binom(m,2)
      std::size_t expected = n * (n - 1) / 2 * (m * (m - 1) / 2);
      CHECK(model.markov_basis.size() == expected);

      // Brute-force orbit of the seed swap under S_n x S_m, dedup up to sign.
      IntVec seed(n * m, 0);
      seed[0 * m + 0] = 1;
      seed[0 * m + 1] = -1;
      seed[1 * m + 0] = -1;
      seed[1 * m + 1] = 1;
      std::vector<std::size_t> rperm(n), cperm(m);
      std::iota(rperm.begin(), rperm.end(), 0);
      std::set<IntVec> orbit;
      do {
        std::iota(cperm.begin(), cperm.end(), 0);
        do {
          IntVec img(n * m);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
              img[rperm[i] * m + cperm[j]] = seed[i * m + j];
          orbit.insert(std::max(img, negated(img)));
        } while (std::next_permutation(cperm.begin(), cperm.end()));
      } while (std::next_permutation(rperm.begin(), rperm.end()));
      std::set<IntVec> built(model.markov_basis.moves().begin(),
                             model.markov_basis.moves().end());
      CHECK(orbit == built);
    }
}

TEST_CASE("hemmecke matrix k=1 matches the block layout") {
  auto h1 = build_hemmecke(1);
  CHECK(h1.matrix.rows() == 3);
  CHECK(h1.matrix.cols() == 6);
  CHECK(h1.matrix.row(0) == vec({1, 1, 0, 0, -1, 0}));
  CHECK(h1.matrix.row(1) == vec({0, 0, 1, 1, 0, -1}));
  CHECK(h1.matrix.row(2) == vec({0, 0, 0, 0, 1, 1}));
  REQUIRE(h1.markov_basis.size() == 3);
  CHECK(h1.markov_basis.contains(vec({1, -1, 0, 0, 0, 0})));
  CHECK(h1.markov_basis.contains(vec({0, 0, 1, -1, 0, 0})));
  CHECK(h1.markov_basis.contains(vec({0, 1, 0, -1, 1, -1})));
}

TEST_CASE("hemmecke blocks for k = 2, 3") {
  for (std::size_t k = 2; k <= 3; ++k) {
    auto h = build_hemmecke(k);
    CHECK(h.matrix.rows() == 2 * k + 1);
    CHECK(h.matrix.cols() == 4 * k + 2);
    CHECK(h.markov_basis.size() == 2 * k + 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        CHECK(h.matrix.at(i, j) == (i == j ? 1 : 0));          // I_k
        CHECK(h.matrix.at(i, k + j) == (i == j ? 1 : 0));      // I_k
        CHECK(h.matrix.at(k + i, 2 * k + j) == (i == j ? 1 : 0));
        CHECK(h.matrix.at(k + i, 3 * k + j) == (i == j ? 1 : 0));
      }
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(h.matrix.at(i, 4 * k) == -1);
      CHECK(h.matrix.at(i, 4 * k + 1) == 0);
      CHECK(h.matrix.at(k + i, 4 * k) == 0);
      CHECK(h.matrix.at(k + i, 4 * k + 1) == -1);
    }
    CHECK(h.matrix.at(2 * k, 4 * k) == 1);
    CHECK(h.matrix.at(2 * k, 4 * k + 1) == 1);
    // moves in the kernel (also enforced by the ModelInstance constructor)
    for (const auto& mv : h.markov_basis.moves()) CHECK(h.matrix.in_kernel(mv));
  }
  CHECK_THROWS_AS(build_hemmecke(0), std::invalid_argument);
}

TEST_CASE("all built models carry verified certificates") {
  for (const ModelInstance& m :
       {build_single_row(4), build_independence(3, 2), build_hemmecke(2)}) {
    REQUIRE(m.matrix.positivity_certificate().has_value());
    for (const auto& x : m.matrix.left_apply(*m.matrix.positivity_certificate()))
      CHECK(x >= 1);
    CHECK(holds_certificate(certify_kernel_positivity(m.matrix)));
  }
}

TEST_CASE("hypercube model graph") {
  auto g1 = build_hemmecke_hypercube_graph(1);
  CHECK(g1.node_count == 4);
  CHECK(g1.degree == 3);
  std::size_t edge_halves = 0;
  for (std::size_t v = 0; v < g1.node_count; ++v) {
    CHECK(g1.loops[v] == 0);
    edge_halves += g1.nonloop_degree(v);
  }
  CHECK(edge_halves == 12);  // 6 undirected edges

  auto g2 = build_hemmecke_hypercube_graph(2);
  CHECK(g2.node_count == 8);
  CHECK(g2.degree == 2 + 4);
  for (std::size_t v = 0; v < g2.node_count; ++v) CHECK(g2.nonloop_degree(v) == 6);

  CHECK(build_hemmecke_hypercube_graph(3).node_count == 16);
}

TEST_CASE("matrix parser") {
  std::istringstream ok("# comment\n1 2\n1 1\n");
  auto a = parse_matrix(ok);
  CHECK(a.rows() == 1);
  CHECK(a.cols() == 2);
  CHECK(a.row(0) == vec({1, 1}));

  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.kind;
    }
    return ParseErrorKind::io;
  };
  CHECK(kind([] {
          std::istringstream s("x 2\n1 1\n");
          parse_matrix(s);
        }) == ParseErrorKind::malformed_header);
  CHECK(kind([] {
          std::istringstream s("2 2\n1 1\n");
          parse_matrix(s);
        }) == ParseErrorKind::wrong_entry_count);
  CHECK(kind([] {
          std::istringstream s("1 2\n1 1 1\n");
          parse_matrix(s);
        }) == ParseErrorKind::wrong_entry_count);
  CHECK(kind([] {
          std::istringstream s("1 2\n1 a\n");
          parse_matrix(s);
        }) == ParseErrorKind::bad_token);
}

TEST_CASE("move parser validates the kernel") {
  auto a = IntegerMatrix::from_rows({vec({1, 1})});
  std::istringstream ok("1 2\n1 -1\n");
  auto ms = parse_moves(ok, &a);
  CHECK(ms.size() == 1);
  CHECK(ms.moves()[0] == vec({1, -1}));

  std::istringstream bad("1 2\n1 0\n");
  try {
    parse_moves(bad, &a);
    FAIL("expected kernel violation");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseErrorKind::kernel_violation);
  }

  std::istringstream dup("2 2\n1 -1\n-1 1\n");
  try {
    parse_moves(dup, &a);
    FAIL("expected invalid move set");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseErrorKind::invalid_moves);
  }
}

TEST_CASE("vector parser") {
  std::istringstream ok("3\n4 -1 0\n");
  CHECK(parse_vector(ok) == vec({4, -1, 0}));
  std::istringstream bad("3\n4 -1\n");
  CHECK_THROWS_AS(parse_vector(bad), ParseError);
}
