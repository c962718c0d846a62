#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>

#include "helpers.hpp"
#include "sspec/errors.hpp"
#include "sspec/generators.hpp"
#include "sspec/graph6.hpp"

using namespace sspec;

namespace {

std::vector<std::string> fixture_lines(const std::string& name) {
  std::ifstream in(std::string(SSPEC_TEST_DATA) + "/" + name);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

std::size_t parse_offset(std::string_view s) {
  try {
    parse_graph6(s);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for " << s);
  return 0;
}

}  // namespace

TEST_CASE("graph6 decodes the two-triangle graph") {
  Graph g = parse_graph6("Cz");
  CHECK(g.order() == 4);
  std::vector<Edge> want = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(g.edges() == want);
  CHECK(write_graph6(g) == "Cz");
}

TEST_CASE("graph6 matches the bitwise decoder on fixtures and random graphs") {
  std::vector<std::string> corpus;
  for (auto f : {"srg16.g6", "gq33_pair.g6", "pair14.g6", "shrikhande.g6"})
    for (auto& l : fixture_lines(f)) corpus.push_back(l);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) corpus.push_back(write_graph6(random_graph(1 + static_cast<int>(rng() % 70), 0.3, rng())));
  for (const auto& s : corpus) {
    Graph g = parse_graph6(s);
    auto [n, edges] = oracle::decode_graph6(s);
    CHECK(static_cast<int>(g.order()) == n);
    CHECK(testutil::adj_set(g) == edges);
    CHECK(write_graph6(g) == s);
  }
}

TEST_CASE("graph6 long header round-trips") {
  Graph g = cycle_graph(100);
  std::string s = write_graph6(g);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == g);
  CHECK(parse_graph6("@").order() == 1);
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
  CHECK(parse_offset("") == 0);
  CHECK(parse_offset("C") == 1);        // truncated body
  CHECK(parse_offset("Czz") == 2);      // trailing bytes
  CHECK(parse_offset("C\x7f") == 1);    // byte out of range
  CHECK(parse_offset("A`") == 1);       // nonzero padding: n=2 uses one bit
  CHECK_THROWS_AS(parse_graph6("~~"), ParseError);
}

TEST_CASE("generated families have their textbook parameters") {
  CHECK(srg_parameters(triangular_graph(7)) == SrgParams::make(21, 10, 5, 4));
  CHECK(srg_parameters(hamming_graph(2, 4)) == SrgParams::make(16, 6, 2, 2));
  CHECK(srg_parameters(kneser_graph(8, 2)) == SrgParams::make(28, 15, 6, 10));
  CHECK(srg_parameters(petersen_graph()) == SrgParams::make(10, 3, 0, 1));
  CHECK(srg_parameters(paley_graph(13)) == SrgParams::make(13, 6, 2, 3));
  CHECK(srg_parameters(paley_graph(9)) == SrgParams::make(9, 4, 1, 2));
  CHECK(srg_parameters(paley_graph(25)) == SrgParams::make(25, 12, 5, 6));
  CHECK(srg_parameters(symplectic_graph(2, 3)) == SrgParams::make(40, 27, 18, 18));
  auto gq = gq_w3_geometry(3);
  CHECK(srg_parameters(gq.graph) == SrgParams::make(40, 12, 2, 4));
  CHECK(gq.lines.size() == 40);
  CHECK(!srg_parameters(complete_graph(5)));
  CHECK(!srg_parameters(path_graph(4)));
  CHECK(hamming_graph(3, 3).order() == 27);
}

TEST_CASE("fixtures contain the expected strongly regular graphs") {
  auto srg16 = fixture_lines("srg16.g6");
  REQUIRE(srg16.size() == 2);
  for (auto& s : srg16) CHECK(srg_parameters(parse_graph6(s)) == SrgParams::make(16, 6, 2, 2));
  CHECK(parse_graph6(srg16[0]).order() == hamming_graph(2, 4).order());
}

TEST_CASE("labels follow vertices under relabeling") {
  Graph t = triangular_graph(4);
  CHECK(t.label(0) == "{1,2}");
  std::vector<Vertex> perm = {5, 4, 3, 2, 1, 0};
  Graph r = t.relabeled(perm);
  CHECK(r.label(5) == "{1,2}");
  for (auto [u, v] : t.edges()) CHECK(r.adjacent(perm[u], perm[v]));
  CHECK(r.size() == t.size());
}

TEST_CASE("generator spec strings and error classes") {
  CHECK(generate("triangular:5").order() == 10);
  CHECK(generate("hamming:2,3").order() == 9);
  CHECK(generate("random:12,0.4,7") == generate("random:12,0.4,7"));
  CHECK_THROWS_AS(generate("nosuch:3"), InputError);
  CHECK_THROWS_AS(generate("paley:7"), InputError);
  CHECK_THROWS_AS(generate("complete:100000"), CapExceeded);
  CHECK_THROWS_AS(SrgParams::make(10, 3, 0, 2), InputError);
}

TEST_CASE("complement and connectivity") {
  Graph c5 = cycle_graph(5);
  CHECK(complement(c5).size() == 5);
  CHECK(complement(complement(c5)) == c5);
  CHECK(empty_graph(4).component_count() == 4);
  CHECK(c5.is_connected());
}
