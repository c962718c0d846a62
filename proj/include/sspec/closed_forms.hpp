#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sspec/complex.hpp"
#include "sspec/spectra.hpp"

namespace sspec {

struct PredictedSpectrum {
  /// (eigenvalue, multiplicity), ascending by eigenvalue; zero multiplicities
  /// are kept so that families like T_4 keep their full shape.
  std::vector<std::pair<std::int64_t, std::size_t>> entries;
  std::string source;

  std::size_t size() const;
  /// Entries with positive multiplicity.
  std::map<std::int64_t, std::size_t> multiset() const;
  /// True when s has no residual part and the same integer multiset.
  bool matches(const SpectrumSummary& s) const;
};

std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// L_i^up of the complete graph K_n truncated at dimension k. For i < k (or
/// i = k = n-1) this is {0: C(n-1,i), n: C(n-1,i+1)}; for i = k < n-1 the
/// top dimension has no cofaces and the spectrum is all zero.
PredictedSpectrum predict_kn_complex(int n, int k, int i);

/// Every i-face lies in exactly one (i+1)-face: {0: (i+1)|X_{i+1}|, i+2: |X_{i+1}|}.
/// Checks the hypothesis (i >= 1) and throws InputError if it fails.
PredictedSpectrum predict_unique_faces(const CliqueComplex& x, int i);

/// L_i^up of the point graph of a GQ(s,t).
PredictedSpectrum predict_gq(int s, int t, int i);

/// L_1^up of hamming_graph(d, a).
PredictedSpectrum predict_hamming(int d, int a);

/// L_1^up of T_n, n >= 4.
PredictedSpectrum predict_triangular_L1(int n);
/// L_2^up of T_n, n >= 4.
PredictedSpectrum predict_triangular_L2(int n);
/// L_k^up of T_n for 3 <= k <= n-3.
PredictedSpectrum predict_triangular_Lk_up(int n, int k);
/// L_k^down of T_n for 4 <= k <= n-2.
PredictedSpectrum predict_triangular_Lk_down(int n, int k);

/// Sparse integer vector over the faces of one dimension of a complex.
struct SparseVector {
  int dim = 1;
  std::map<std::size_t, std::int64_t> entries;  // no explicit zeros

  void add(std::size_t index, std::int64_t value);
  std::int64_t at(std::size_t index) const;
  std::vector<std::int64_t> to_dense(std::size_t size) const;
  static SparseVector from_dense(int dim, const std::vector<std::int64_t>& v);
  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};
using EdgeVector = SparseVector;

/// Vertex id of the 2-subset {a, b} (1-based, a != b) in triangular_graph(n).
Vertex triangular_vertex(int n, int a, int b);

// Eigenvector families of T_n. `tn` must be a clique complex (max_dim >= 2) of
// triangular_graph(n); indices are 1-based subset elements.

/// v_{i,j}: +1 on edges from {i,j} to larger vertices, -1 to smaller ones.
EdgeVector build_cut_vector(const CliqueComplex& tn, int n, int i, int j);
/// Zv^{uv} on triangles, 1 <= u < v <= n-1; eigenvector of L_2^down - 3I for -1.
SparseVector build_eig2_vector(const CliqueComplex& tn, int n, int u, int v);
/// u_{a,b,c}, 1 <= a < b < c <= n-1; eigenvector of L_1^up for n + 2.
EdgeVector build_eig_n2_vector(const CliqueComplex& tn, int n, int a, int b, int c);
/// w_{a,b}, 1 <= a < b <= n-1; eigenvector of L_1^up for n.
EdgeVector build_eig_n_vector(const CliqueComplex& tn, int n, int a, int b);

}  // namespace sspec
