#include "sspec/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "sspec/errors.hpp"

namespace sspec {

namespace {

PredictedSpectrum make(std::vector<std::pair<std::int64_t, std::size_t>> entries, std::string source) {
  std::sort(entries.begin(), entries.end());
  // merge equal eigenvalues (e.g. n - 1 = 2 never happens for n >= 4, but
  // degenerate parameters can collide)
  std::vector<std::pair<std::int64_t, std::size_t>> merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
    else merged.push_back(e);
  }
  return {std::move(merged), std::move(source)};
}

std::size_t as_size(std::uint64_t v) { return static_cast<std::size_t>(v); }

}  // namespace

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::size_t PredictedSpectrum::size() const {
  std::size_t s = 0;
  for (auto& e : entries) s += e.second;
  return s;
}

std::map<std::int64_t, std::size_t> PredictedSpectrum::multiset() const {
  std::map<std::int64_t, std::size_t> out;
  for (auto& e : entries)
    if (e.second) out[e.first] += e.second;
  return out;
}

bool PredictedSpectrum::matches(const SpectrumSummary& s) const {
  return s.residual_degree == 0 && s.size == size() && s.multiset() == multiset();
}

PredictedSpectrum predict_kn_complex(int n, int k, int i) {
  if (n < 1 || i < 0 || i > k || k > n - 1)
    throw InputError("predict_kn_complex: need 0 <= i <= k <= n-1");
  if (i == k && k < n - 1)
    return make({{0, as_size(binomial(n, i + 1))}}, "kn-complex top dimension");
  return make({{0, as_size(binomial(n - 1, i))}, {n, as_size(binomial(n - 1, i + 1))}}, "kn-complex");
}

PredictedSpectrum predict_unique_faces(const CliqueComplex& x, int i) {
  if (i < 1) throw InputError("predict_unique_faces: need i >= 1");
  if (i + 1 > x.max_dim()) throw InputError("predict_unique_faces: complex truncated below i+1");
  for (const Face& f : x.faces(i))
    if (face_degree(x, f) != 1)
      throw InputError("predict_unique_faces: an " + std::to_string(i) +
                       "-face does not lie in a unique coface");
  const std::size_t up = x.count(i + 1);
  return make({{0, static_cast<std::size_t>(i + 1) * up}, {i + 2, up}}, "unique cofaces");
}

PredictedSpectrum predict_gq(int s, int t, int i) {
  if (s < 2 || t < 1 || i < 1) throw InputError("predict_gq: need s >= 2, t >= 1, i >= 1");
  const std::size_t lines = static_cast<std::size_t>(t + 1) * static_cast<std::size_t>(s * t + 1);
  if (i >= s) return make({{0, lines * as_size(binomial(s + 1, i + 1))}}, "gq, i >= s");
  return make({{0, lines * as_size(binomial(s, i))}, {s + 1, lines * as_size(binomial(s, i + 1))}}, "gq");
}

PredictedSpectrum predict_hamming(int d, int a) {
  if (d < 1 || a < 1) throw InputError("predict_hamming: need d >= 1, a >= 1");
  std::size_t lines = static_cast<std::size_t>(d);
  for (int k = 0; k < d - 1; ++k) lines *= static_cast<std::size_t>(a);
  return make({{0, lines * static_cast<std::size_t>(a - 1)}, {a, lines * as_size(binomial(a - 1, 2))}},
              "hamming L1 up");
}

PredictedSpectrum predict_triangular_L1(int n) {
  if (n < 4) throw InputError("predict_triangular_L1: need n >= 4");
  const auto N = static_cast<std::size_t>(n);
  return make({{0, as_size(binomial(n, 2)) - 1},
               {2, as_size(binomial(n - 1, 2))},
               {n - 1, N * (N - 2) * (N - 4) / 3},
               {n, as_size(binomial(n - 1, 2))},
               {n + 2, as_size(binomial(n - 1, 3))}},
              "triangular L1 up");
}

PredictedSpectrum predict_triangular_L2(int n) {
  if (n < 4) throw InputError("predict_triangular_L2: need n >= 4");
  const auto N = static_cast<std::size_t>(n);
  return make({{0, as_size(binomial(n, 3)) + N * as_size(binomial(n - 2, 2))},
               {n - 1, N * as_size(binomial(n - 2, 3))}},
              "triangular L2 up");
}

PredictedSpectrum predict_triangular_Lk_up(int n, int k) {
  if (k < 3 || k > n - 3) throw InputError("predict_triangular_Lk_up: need 3 <= k <= n-3");
  const auto N = static_cast<std::size_t>(n);
  return make({{0, N * as_size(binomial(n - 2, k))}, {n - 1, N * as_size(binomial(n - 2, k + 1))}},
              "triangular Lk up");
}

PredictedSpectrum predict_triangular_Lk_down(int n, int k) {
  if (k < 4 || k > n - 2) throw InputError("predict_triangular_Lk_down: need 4 <= k <= n-2");
  const auto N = static_cast<std::size_t>(n);
  // zero multiplicity by rank-nullity on |X_k| = n C(n-1, k+1)
  return make({{0, N * (as_size(binomial(n - 1, k + 1)) - as_size(binomial(n - 2, k)))},
               {n - 1, N * as_size(binomial(n - 2, k))}},
              "triangular Lk down");
}

void SparseVector::add(std::size_t index, std::int64_t value) {
  auto& slot = entries[index];
  slot += value;
  if (slot == 0) entries.erase(index);
}

std::int64_t SparseVector::at(std::size_t index) const {
  auto it = entries.find(index);
  return it == entries.end() ? 0 : it->second;
}

std::vector<std::int64_t> SparseVector::to_dense(std::size_t size) const {
  std::vector<std::int64_t> v(size, 0);
  for (auto [i, x] : entries) {
    if (i >= size) throw std::out_of_range("SparseVector: index beyond dense size");
    v[i] = x;
  }
  return v;
}

SparseVector SparseVector::from_dense(int dim, const std::vector<std::int64_t>& v) {
  SparseVector s;
  s.dim = dim;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) s.entries[i] = v[i];
  return s;
}

Vertex triangular_vertex(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > n || a == b) throw InputError("triangular_vertex: bad 2-subset");
  int id = 0;
  for (int x = 1; x < a; ++x) id += n - x;
  return static_cast<Vertex>(id + (b - a - 1));
}

namespace {

void require_tn(const CliqueComplex& tn, int n, int need_dim) {
  if (n < 4 || tn.graph().order() != binomial(n, 2))
    throw InputError("complex is not built on triangular_graph(" + std::to_string(n) + ")");
  if (tn.max_dim() < need_dim) throw InputError("complex truncated below dimension " + std::to_string(need_dim));
}

Face sorted_face(std::vector<Vertex> f) {
  std::sort(f.begin(), f.end());
  return f;
}

std::size_t face_index(const CliqueComplex& x, const Face& f) {
  auto i = x.index_of(f);
  if (!i) throw VerificationError("expected face is missing from the complex");
  return *i;
}

}  // namespace

EdgeVector build_cut_vector(const CliqueComplex& tn, int n, int i, int j) {
  require_tn(tn, n, 1);
  if (!(1 <= i && i < j && j <= n)) throw InputError("build_cut_vector: need 1 <= i < j <= n");
  const Vertex x = triangular_vertex(n, i, j);
  EdgeVector out;
  out.dim = 1;
  for (Vertex y : tn.graph().neighbors(x)) {
    Face e = sorted_face({x, y});
    out.add(face_index(tn, e), x < y ? 1 : -1);
  }
  return out;
}

SparseVector build_eig2_vector(const CliqueComplex& tn, int n, int u, int v) {
  require_tn(tn, n, 2);
  if (!(1 <= u && u < v && v <= n - 1)) throw InputError("build_eig2_vector: need 1 <= u < v <= n-1");
  auto T = [&](int a, int b) { return triangular_vertex(n, a, b); };
  SparseVector out;
  out.dim = 2;
  for (int w = 1; w <= n; ++w) {
    if (w == u || w == v) continue;
    const Face pair = sorted_face({T(u, w), T(v, w)});
    Face tw = sorted_face({T(u, w), T(u, v), T(v, w)});
    out.add(face_index(tn, tw), -face_sign(tw, pair) * (n - 3));
    for (int x = 1; x <= n; ++x) {
      if (x == u || x == v || x == w) continue;
      Face claw = sorted_face({T(w, u), T(w, v), T(w, x)});
      out.add(face_index(tn, claw), face_sign(claw, pair));
    }
  }
  return out;
}

EdgeVector build_eig_n2_vector(const CliqueComplex& tn, int n, int a, int b, int c) {
  require_tn(tn, n, 1);
  if (!(1 <= a && a < b && b < c && c <= n - 1))
    throw InputError("build_eig_n2_vector: need 1 <= a < b < c <= n-1");
  auto T = [&](int p, int q) { return triangular_vertex(n, p, q); };
  const Vertex ab = T(a, b), ac = T(a, c), an = T(a, n), bc = T(b, c), bn = T(b, n), cn = T(c, n);
  const std::vector<std::tuple<Vertex, Vertex, int>> table = {
      {ab, ac, +1}, {ab, an, -1}, {ab, bc, -1}, {ab, bn, +1},
      {ac, an, +1}, {ac, bc, +1}, {ac, cn, -1},
      {an, bn, -1}, {an, cn, +1},
      {bc, bn, -1}, {bc, cn, +1},
      {bn, cn, -1},
  };
  EdgeVector out;
  out.dim = 1;
  for (auto [p, q, s] : table) out.add(face_index(tn, sorted_face({p, q})), s);
  return out;
}

EdgeVector build_eig_n_vector(const CliqueComplex& tn, int n, int a, int b) {
  require_tn(tn, n, 2);
  if (!(1 <= a && a < b && b <= n - 1)) throw InputError("build_eig_n_vector: need 1 <= a < b <= n-1");
  auto T = [&](int p, int q) { return triangular_vertex(n, p, q); };
  std::vector<Face> triangles = {sorted_face({T(a, b), T(a, n), T(b, n)})};
  for (int i = 1; i <= n - 1; ++i)
    if (i != a && i != b) triangles.push_back(sorted_face({T(i, a), T(i, b), T(i, n)}));
  EdgeVector out;
  out.dim = 1;
  for (const Face& s : triangles) {
    face_index(tn, s);
    for (std::size_t j = 0; j < 3; ++j) {
      Face f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
      out.add(face_index(tn, f), face_sign(s, f));
    }
  }
  return out;
}

}  // namespace sspec
