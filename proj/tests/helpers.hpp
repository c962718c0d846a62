// Graph builders shared by the unit tests and the acceptance runner.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sspec/closed_forms.hpp"
#include "sspec/generators.hpp"
#include "sspec/graph.hpp"
#include "sspec/matrix.hpp"

namespace testutil {

using sspec::Edge;
using sspec::Graph;
using sspec::Vertex;

inline oracle::AdjSet adj_set(const Graph& g) {
  oracle::AdjSet s;
  for (auto [u, v] : g.edges()) s.insert({static_cast<int>(u), static_cast<int>(v)});
  return s;
}

inline Graph with_edges(const Graph& g, const std::vector<Edge>& extra) {
  auto e = g.edges();
  e.insert(e.end(), extra.begin(), extra.end());
  return Graph::from_edges(g.order(), e);
}

inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = sspec::random_graph(n, p, rng());
    if (g.is_connected()) return g;
  }
}

// Each new vertex is joined to a clique through a random earlier vertex, so
// the reverse insertion order is a perfect elimination ordering.
inline Graph random_chordal(int n, std::mt19937_64& rng) {
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng() % v);
    std::vector<int> clique{u};
    std::vector<int> cand;
    for (int w = 0; w < v; ++w)
      if (a[u][w]) cand.push_back(w);
    std::shuffle(cand.begin(), cand.end(), rng);
    for (int w : cand) {
      if (rng() % 2 && std::all_of(clique.begin(), clique.end(), [&](int c) { return a[c][w]; }))
        clique.push_back(w);
    }
    for (int c : clique) {
      a[c][v] = a[v][c] = true;
      edges.push_back({static_cast<Vertex>(c), static_cast<Vertex>(v)});
    }
  }
  return Graph::from_edges(n, edges);
}

inline std::vector<Vertex> random_distinct(int n, int k, std::mt19937_64& rng) {
  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

inline std::vector<std::int64_t> apply(const sspec::IntMatrix& m, const sspec::SparseVector& v) {
  auto x = v.to_dense(m.cols());
  return m.apply(x);
}

inline std::vector<std::int64_t> scaled(const sspec::SparseVector& v, std::size_t size, std::int64_t s) {
  auto x = v.to_dense(size);
  for (auto& e : x) e *= s;
  return x;
}

// Rows of a matrix from sparse vectors of one dimension.
inline sspec::IntMatrix stack(const std::vector<sspec::SparseVector>& vs, std::size_t cols) {
  std::vector<sspec::IntMatrix::Triplet> t;
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (auto [c, v] : vs[r].entries) t.push_back({r, c, v});
  return sspec::IntMatrix::from_triplets(vs.size(), cols, t);
}

}  // namespace testutil
