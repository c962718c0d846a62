#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sspec/errors.hpp"
#include "sspec/matrix.hpp"
#include "sspec/modular.hpp"

using namespace sspec;

namespace {

std::vector<std::vector<std::int64_t>> random_dense(std::size_t r, std::size_t c, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(c));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

std::vector<std::vector<std::int64_t>> random_symmetric(std::size_t n, std::mt19937_64& rng) {
  auto m = random_dense(n, n, -4, 4, rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m[i][j] = m[j][i];
  return m;
}

}  // namespace

TEST_CASE("CSR matrix basics") {
  IntMatrix m = IntMatrix::from_triplets(2, 3, {{0, 1, 2}, {0, 1, 3}, {1, 0, -1}, {1, 2, 0}});
  CHECK(m.nnz() == 2);
  CHECK(m.at(0, 1) == 5);
  CHECK(m.at(1, 2) == 0);
  CHECK(m.transpose().at(1, 0) == 5);
  CHECK(m.inf_norm() == 5);
  IntMatrix sq = IntMatrix::from_dense({{1, 2}, {2, -3}});
  CHECK(sq.is_symmetric());
  CHECK(sq.trace() == -2);
  CHECK(sq.shifted(1).at(0, 0) == 0);
  CHECK((sq * IntMatrix::identity(2)) == sq);
  CHECK((sq - sq).is_zero());
  CHECK(m.apply(std::vector<std::int64_t>{1, 1, 1}) == std::vector<std::int64_t>{5, -1});
}

TEST_CASE("MatrixMarket round trip keeps entries and dimension tags") {
  IntMatrix m = IntMatrix::from_dense({{1, 0, -1}, {0, 7, 0}});
  m.tag(1, 0);
  std::stringstream ss;
  write_matrix_market(ss, m);
  IntMatrix back = read_matrix_market(ss);
  CHECK(back == m);
  CHECK(back.row_dim == 1);
  CHECK(back.col_dim == 0);
  std::stringstream bad("%%MatrixMarket matrix array real general\n1 1\n1\n");
  CHECK_THROWS_AS(read_matrix_market(bad), InputError);
}

TEST_CASE("primality and prime lists") {
  CHECK(is_prime(2147483647));
  CHECK(!is_prime(2147483649ULL));
  CHECK(!is_prime(1));
  for (auto p : default_primes()) CHECK(is_prime(p));
  auto below = primes_below(2147483587, 3);
  CHECK(below.size() == 3);
  for (auto p : below) CHECK((is_prime(p) && p < 2147483587));
  CHECK(parse_prime_list("2147483647,2147483629") == std::vector<std::uint64_t>{2147483647, 2147483629});
  CHECK_THROWS_AS(parse_prime_list("2147483647"), InputError);
  CHECK_THROWS_AS(parse_prime_list("2147483647,12"), InputError);
  CHECK_THROWS_AS(parse_prime_list("2147483647,2147483649"), InputError);
  CHECK(inverse_mod(3, 7) == 5);
}

TEST_CASE("rank mod p agrees with exact rational rank") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    auto d = random_dense(r, c, -2, 2, rng);
    // force some dependency
    if (r > 2) d[r - 1] = d[0], d[r - 2][0] = 0;
    IntMatrix m = IntMatrix::from_dense(d);
    const auto want = oracle::rank_rational(d);
    for (auto p : default_primes()) {
      CHECK(rank_mod_p(m, p) == want);
      CHECK(rank_mod_p(m, p, true) == want);
      CHECK(rank_mod_p(m.transpose(), p, true) == want);
    }
  }
}

TEST_CASE("charpoly mod p matches cofactor-expansion determinants") {
  std::mt19937_64 rng(9);
  const std::uint64_t p = default_primes()[0];
  for (int t = 0; t < 25; ++t) {
    std::size_t n = 1 + rng() % 7;
    auto d = random_symmetric(n, rng);
    auto f = charpoly_mod_p(IntMatrix::from_dense(d), p);
    REQUIRE(f.size() == n + 1);
    CHECK(f.back() == 1);
    for (std::int64_t x = -3; x <= 3; ++x) {
      auto xi = d;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) xi[i][j] = (i == j ? x : 0) - d[i][j];
      CHECK(poly_eval(f, x, p) == static_cast<std::uint64_t>(oracle::det_minors(xi, static_cast<std::int64_t>(p))));
    }
  }
}

TEST_CASE("companion matrix of x^3 - 2") {
  IntMatrix c = IntMatrix::from_dense({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}});
  for (auto p : default_primes()) CHECK(charpoly_mod_p(c, p) == poly_from_integers({-2, 0, 0, 1}, p));
}

TEST_CASE("nullity and exact root division") {
  const std::uint64_t p = default_primes()[1];
  IntMatrix m = IntMatrix::from_dense({{2, 0, 0}, {0, 2, 0}, {0, 0, 5}});
  CHECK(nullity_mod_p(m, 2, p) == 2);
  CHECK(nullity_mod_p(m, 5, p) == 1);
  CHECK(nullity_mod_p(m, 0, p) == 0);
  auto f = charpoly_mod_p(m, p);
  CHECK(f == poly_from_roots({{2, 2}, {5, 1}}, p));
  auto g = f;
  CHECK(poly_divide_root(g, 2, 2, p));
  CHECK(g == poly_from_roots({{5, 1}}, p));
  auto h = f;
  CHECK(!poly_divide_root(h, 2, 3, p));
  CHECK(poly_pow(poly_from_integers({-1, 1}, p), 3, p) == poly_from_roots({{1, 3}}, p));
}

TEST_CASE("overflow in integer products is detected") {
  IntMatrix big = IntMatrix::from_dense({{INT64_MAX / 2 + 1}});
  CHECK_THROWS(big * big);
}
