// Independent slow reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using AdjSet = std::set<std::pair<int, int>>;  // u < v

// Straight bit-by-bit reading of the upper triangle, column by column.
inline std::pair<int, AdjSet> decode_graph6(const std::string& s) {
  std::size_t pos = 0;
  long n = 0;
  if (s[0] == '~') {
    n = 0;
    for (int k = 1; k <= 3; ++k) n = n * 64 + (s[k] - 63);
    pos = 4;
  } else {
    n = s[0] - 63;
    pos = 1;
  }
  std::vector<int> bits;
  for (std::size_t i = pos; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  AdjSet edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (bits.at(k++)) edges.insert({u, v});
  return {static_cast<int>(n), edges};
}

inline bool adj(const AdjSet& e, int u, int v) { return e.count({std::min(u, v), std::max(u, v)}) > 0; }

// All cliques of a given size by filtering every vertex subset.
inline std::vector<std::vector<int>> cliques_of_size(int n, const AdjSet& e, int size) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) vs.push_back(v);
    bool ok = true;
    for (std::size_t i = 0; i < vs.size() && ok; ++i)
      for (std::size_t j = i + 1; j < vs.size() && ok; ++j) ok = adj(e, vs[i], vs[j]);
    if (ok) out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Determinant mod p by cofactor expansion along the first row.
inline std::int64_t det_minors(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
  const std::size_t n = m.size();
  if (n == 0) return 1 % p;
  if (n == 1) return ((m[0][0] % p) + p) % p;
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(row);
    }
    const std::int64_t a = ((m[0][c] % p) + p) % p;
    const std::int64_t term = static_cast<std::int64_t>((__int128)a * det_minors(sub, p) % p);
    total = (c % 2 == 0) ? (total + term) % p : (total - term + p) % p;
  }
  return total;
}

// Rank over Q with exact rational Gaussian elimination.
inline std::size_t rank_rational(const std::vector<std::vector<std::int64_t>>& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Q f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

// Induced cycles: vertex subsets whose induced subgraph is connected and 2-regular.
inline std::vector<std::vector<int>> induced_cycle_sets(int n, const AdjSet& e, int max_len) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < 3 || size > max_len) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) vs.push_back(v);
    bool two_regular = true;
    for (int v : vs) {
      int d = 0;
      for (int w : vs) d += (v != w && adj(e, v, w));
      if (d != 2) {
        two_regular = false;
        break;
      }
    }
    if (!two_regular) continue;
    std::vector<int> seen{vs[0]};
    for (std::size_t k = 0; k < seen.size(); ++k)
      for (int w : vs)
        if (adj(e, seen[k], w) && std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
    if (seen.size() == vs.size()) out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// |E| - |V| + components, via union-find.
inline std::size_t circuit_rank(int n, const AdjSet& e) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (auto [u, v] : e) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return e.size() - n + comps;
}

}  // namespace oracle
