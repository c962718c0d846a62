#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "sspec/complex.hpp"
#include "sspec/errors.hpp"
#include "sspec/graph6.hpp"

using namespace sspec;

TEST_CASE("two-triangle graph coboundaries equal the reference matrices") {
  CliqueComplex x(parse_graph6("Cz"), 2);
  CHECK(coboundary(x, 0) == IntMatrix::from_dense({{-1, 1, 0, 0},
                                                   {-1, 0, 1, 0},
                                                   {0, -1, 1, 0},
                                                   {0, -1, 0, 1},
                                                   {0, 0, -1, 1}}));
  CHECK(coboundary(x, 1) == IntMatrix::from_dense({{1, -1, 1, 0, 0}, {0, 0, 1, -1, 1}}));
  CHECK(coboundary(x, 2).rows() == 0);
  CHECK(coboundary(x, 2).cols() == 2);
  CHECK(coboundary(x, -1) == IntMatrix::from_dense({{1}, {1}, {1}, {1}}));
}

TEST_CASE("face enumeration matches subset filtering") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_graph(n, 0.55, rng());
    auto full = CliqueComplex::full(g);
    auto adj = testutil::adj_set(g);
    CHECK(static_cast<int>(clique_number(g)) == full.max_dim() + 1);
    for (int d = 0; d <= full.max_dim(); ++d) {
      auto want = oracle::cliques_of_size(n, adj, d + 1);
      auto got = full.faces(d);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(std::vector<int>(got[i].begin(), got[i].end()) == want[i]);
        CHECK(full.index_of(got[i]) == i);
      }
    }
    CHECK(oracle::cliques_of_size(n, adj, full.max_dim() + 2).empty());
  }
}

TEST_CASE("consecutive coboundaries compose to zero") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_graph(4 + static_cast<int>(rng() % 10), 0.6, rng());
    auto x = CliqueComplex::full(g);
    for (int i = 0; i < x.max_dim(); ++i) CHECK((coboundary(x, i) * coboundary(x, i - 1)).is_zero());
  }
}

TEST_CASE("signs, degrees and epsilon") {
  CHECK(face_sign({1, 2, 3}, {2, 3}) == 1);
  CHECK(face_sign({1, 2, 3}, {1, 3}) == -1);
  CHECK(face_sign({1, 2, 3}, {1, 2}) == 1);
  CHECK(face_sign({1, 2, 3}, {1, 4}) == 0);
  CHECK(face_sign({5}, {}) == 1);
  CHECK(epsilon({1, 2}, {1, 3}) == 1);   // [12:1][13:1]
  CHECK(epsilon({1, 2}, {2, 3}) == -1);  // [12:2][23:2]
  CHECK(epsilon({1, 2}, {3, 4}) == 0);
  CHECK_THROWS_AS(epsilon({1, 2}, {1, 2, 3}), InputError);
  CHECK(face_union({1, 3}, {2, 3}) == Face{1, 2, 3});
  CliqueComplex x(parse_graph6("Cz"), 2);
  CHECK(face_degree(x, {1, 2}) == 2);
  CHECK(face_degree(x, {0, 1}) == 1);
}

TEST_CASE("face cap raises CapExceeded") {
  ComplexOptions opt;
  opt.max_faces = 50;
  CHECK_THROWS_AS(CliqueComplex(complete_graph(10), 3, opt), CapExceeded);
}

TEST_CASE("K_n complex counts binomials") {
  auto x = CliqueComplex::full(complete_graph(6));
  CHECK(x.max_dim() == 5);
  CHECK(x.count(2) == 20);
  CHECK(x.count(-1) == 1);
  CHECK(x.top_dim() == 5);
}
