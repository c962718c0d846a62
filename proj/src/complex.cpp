#include "sspec/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sspec/errors.hpp"

namespace sspec {

namespace {

// Ordered backtracking: extend a clique by common neighbours larger than its
// last vertex. Preorder over sorted extensions gives lexicographic order within
// each dimension.
template <class Visit>
void extend(const Graph& g, Face& cur, const VertexSet& cand, int max_dim, Visit&& visit) {
  visit(cur);
  if (dim(cur) >= max_dim) return;
  for (Vertex w : cand.members()) {
    if (w <= cur.back()) continue;
    cur.push_back(w);
    VertexSet next = cand & g.neighbor_set(w);
    extend(g, cur, next, max_dim, visit);
    cur.pop_back();
  }
}

}  // namespace

CliqueComplex::CliqueComplex(Graph g, int max_dim, const ComplexOptions& opt)
    : graph_(std::move(g)), max_dim_(max_dim) {
  if (max_dim < 0) throw InputError("clique_complex: max_dim must be >= 0");
  faces_.resize(static_cast<std::size_t>(max_dim) + 2);
  faces_[0].push_back({});
  std::size_t total = 1;
  const std::size_t n = graph_.order();
  for (Vertex v = 0; v < n; ++v) {
    Face cur{v};
    extend(graph_, cur, graph_.neighbor_set(v), max_dim, [&](const Face& f) {
      if (++total > opt.max_faces)
        throw CapExceeded("clique_complex: more than " + std::to_string(opt.max_faces) + " faces");
      faces_[f.size()].push_back(f);
    });
  }
  for (auto& level : faces_) std::sort(level.begin(), level.end());
  index_.resize(faces_.size());
  for (std::size_t d = 0; d < faces_.size(); ++d) {
    index_[d].reserve(faces_[d].size());
    for (std::size_t i = 0; i < faces_[d].size(); ++i) index_[d].emplace(faces_[d][i], i);
  }
}

CliqueComplex CliqueComplex::full(Graph g, const ComplexOptions& opt) {
  std::size_t w = clique_number(g);
  int top = w == 0 ? 0 : static_cast<int>(w) - 1;
  return CliqueComplex(std::move(g), top, opt);
}

std::span<const Face> CliqueComplex::faces(int d) const {
  if (d < -1 || d > max_dim_)
    throw std::out_of_range("CliqueComplex: dimension " + std::to_string(d) + " not in complex");
  return faces_[static_cast<std::size_t>(d + 1)];
}

std::optional<std::size_t> CliqueComplex::index_of(const Face& f) const {
  const std::size_t slot = f.size();
  if (slot >= index_.size()) return std::nullopt;
  auto it = index_[slot].find(f);
  if (it == index_[slot].end()) return std::nullopt;
  return it->second;
}

int CliqueComplex::top_dim() const noexcept {
  int d = max_dim_;
  while (d > -1 && faces_[static_cast<std::size_t>(d + 1)].empty()) --d;
  return d;
}

std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  const std::size_t n = g.order();
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, const VertexSet& cand, Vertex last) -> void {
    best = std::max(best, cur.size());
    auto members = cand.members();
    // bound: even taking every remaining candidate cannot beat best
    std::size_t remaining = 0;
    for (Vertex w : members) remaining += w > last;
    if (cur.size() + remaining <= best) return;
    for (Vertex w : members) {
      if (w <= last) continue;
      cur.push_back(w);
      self(self, cand & g.neighbor_set(w), w);
      cur.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    cur = {v};
    rec(rec, g.neighbor_set(v), v);
  }
  return best;
}

int face_sign(const Face& f, const Face& k) {
  if (k.size() + 1 != f.size()) return 0;
  std::size_t j = 0;
  while (j < k.size() && f[j] == k[j]) ++j;
  // f minus f[j] must equal k
  for (std::size_t t = j; t < k.size(); ++t)
    if (f[t + 1] != k[t]) return 0;
  return j % 2 == 0 ? 1 : -1;
}

IntMatrix coboundary(const CliqueComplex& x, int i) {
  if (i < -1 || i > x.max_dim())
    throw std::out_of_range("coboundary: dimension " + std::to_string(i) + " out of range");
  const std::size_t ncols = x.count(i);
  if (i + 1 > x.max_dim()) return IntMatrix(0, ncols).tag(i + 1, i);
  auto rows = x.faces(i + 1);
  std::vector<IntMatrix::Triplet> ts;
  ts.reserve(rows.size() * static_cast<std::size_t>(i + 2));
  Face k;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Face& h = rows[r];
    for (std::size_t j = 0; j < h.size(); ++j) {
      k.assign(h.begin(), h.end());
      k.erase(k.begin() + static_cast<std::ptrdiff_t>(j));
      auto c = x.index_of(k);
      if (!c) throw VerificationError("coboundary: complex is not downward closed");
      ts.push_back({r, *c, j % 2 == 0 ? 1 : -1});
    }
  }
  auto m = IntMatrix::from_triplets(rows.size(), ncols, std::move(ts));
  return m.tag(i + 1, i);
}

std::size_t face_degree(const CliqueComplex& x, const Face& f) {
  if (dim(f) + 1 > x.max_dim())
    throw std::out_of_range("face_degree: no faces above dimension " + std::to_string(x.max_dim()));
  if (!x.index_of(f)) throw InputError("face_degree: not a face of the complex");
  const auto& g = x.graph();
  if (f.empty()) return g.order();
  VertexSet common = g.neighbor_set(f[0]);
  for (std::size_t t = 1; t < f.size(); ++t) common &= g.neighbor_set(f[t]);
  return common.count();
}

int epsilon(const Face& f, const Face& g) {
  if (f.size() != g.size()) throw InputError("epsilon: faces of different dimension");
  Face meet;
  std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(meet));
  if (meet.size() + 1 != f.size()) return 0;
  return face_sign(f, meet) * face_sign(g, meet);
}

Face face_union(const Face& a, const Face& b) {
  Face u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

}  // namespace sspec
