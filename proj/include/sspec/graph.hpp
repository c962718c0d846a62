#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sspec {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Fixed-width bitset over vertices, used for fast adjacency and
/// common-neighbourhood queries.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return n_; }
  bool contains(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator|=(const VertexSet& other) noexcept;
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Members in increasing order.
  std::vector<Vertex> members() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1. The numbering is the global
/// vertex order used for every sign in the clique complex. Immutable.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list; duplicate edges are merged.
  /// Throws InputError on loops, out-of-range endpoints or bad labels.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return neighbors_.size(); }
  std::size_t size() const noexcept { return num_edges_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].contains(v); }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return neighbors_[v]; }
  const VertexSet& neighbor_set(Vertex v) const noexcept { return rows_[v]; }
  std::size_t degree(Vertex v) const noexcept { return neighbors_[v].size(); }

  /// Edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label of v, or its decimal index when the graph is unlabeled.
  std::string label(Vertex v) const;

  /// Same graph with vertex v renamed to perm[v]; labels follow their vertices.
  Graph relabeled(std::span<const Vertex> perm) const;

  bool is_connected() const;
  std::size_t component_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<VertexSet> rows_;
  std::vector<std::string> labels_;
  std::size_t num_edges_ = 0;
};

Graph complement(const Graph& g);

/// Parameters (v, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  /// Throws InputError unless k(k - lambda - 1) = (v - k - 1) mu.
  static SrgParams make(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu);
  bool is_conference() const noexcept {
    return v % 4 == 1 && 2 * k == v - 1 && 4 * lambda == v - 5 && 4 * mu == v - 1;
  }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// SRG parameters of g, or nullopt if g is not strongly regular. Complete and
/// edgeless graphs are rejected (mu or lambda is undefined for them).
std::optional<SrgParams> srg_parameters(const Graph& g);

/// A point-line incidence structure together with its collinearity graph.
struct PointLineGeometry {
  Graph graph;
  std::vector<std::vector<Vertex>> lines;  // each sorted, lines sorted
};

}  // namespace sspec
