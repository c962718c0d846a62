#include "sspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "sspec/errors.hpp"

namespace sspec {

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty()) {
    if (labels.size() != n) throw InputError("label count does not match vertex count");
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw InputError("vertex labels are not unique");
  }
  Graph g;
  g.neighbors_.resize(n);
  g.rows_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (g.rows_[u].contains(v)) continue;
    g.rows_[u].insert(v);
    g.rows_[v].insert(u);
    ++g.num_edges_;
  }
  for (std::size_t v = 0; v < n; ++v) g.neighbors_[v] = g.rows_[v].members();
  g.labels_ = std::move(labels);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  const std::size_t n = order();
  if (perm.size() != n) throw InputError("permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (Vertex p : perm) {
    if (p >= n || hit[p]) throw InputError("not a permutation");
    hit[p] = true;
  }
  std::vector<Edge> es;
  for (auto [u, v] : edges()) es.emplace_back(perm[u], perm[v]);
  std::vector<std::string> lab;
  if (!labels_.empty()) {
    lab.resize(n);
    for (std::size_t v = 0; v < n; ++v) lab[perm[v]] = labels_[v];
  }
  return from_edges(n, es, std::move(lab));
}

std::size_t Graph::component_count() const {
  const std::size_t n = order();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  std::size_t comps = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors_[u])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

bool Graph::is_connected() const { return component_count() <= 1; }

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
  return Graph::from_edges(n, es, g.labels());
}

SrgParams SrgParams::make(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
  if (v < 0 || k < 0 || lambda < 0 || mu < 0) throw InputError("negative SRG parameter");
  if (k * (k - lambda - 1) != (v - k - 1) * mu)
    throw InputError("infeasible SRG parameters: k(k-lambda-1) != (v-k-1)mu");
  return SrgParams{v, k, lambda, mu};
}

std::optional<SrgParams> srg_parameters(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  if (k == 0 || k == n - 1) return std::nullopt;

  std::optional<std::size_t> lam, mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      std::size_t c = (g.neighbor_set(u) & g.neighbor_set(v)).count();
      auto& slot = g.adjacent(u, v) ? lam : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  }
  auto p = SrgParams{static_cast<std::int64_t>(n), static_cast<std::int64_t>(k),
                     static_cast<std::int64_t>(*lam), static_cast<std::int64_t>(*mu)};
  return p;
}

}  // namespace sspec
