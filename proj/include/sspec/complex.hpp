#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sspec/graph.hpp"
#include "sspec/matrix.hpp"

namespace sspec {

/// Strictly increasing vertex tuple; dimension is size() - 1.
using Face = std::vector<Vertex>;

inline int dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : f) h = (h ^ v) * 0x100000001b3ULL;
    return h;
  }
};

struct ComplexOptions {
  std::size_t max_faces = 2'000'000;
};

/// Clique complex truncated at max_dim. Dimension -1 holds the empty face.
/// Faces of each dimension are sorted lexicographically.
class CliqueComplex {
 public:
  /// Throws CapExceeded when the total face count would pass opt.max_faces.
  CliqueComplex(Graph g, int max_dim, const ComplexOptions& opt = {});
  /// Untruncated: max_dim is the clique number minus one (0 for an empty graph).
  static CliqueComplex full(Graph g, const ComplexOptions& opt = {});

  const Graph& graph() const noexcept { return graph_; }
  int max_dim() const noexcept { return max_dim_; }

  /// Faces of dimension d in [-1, max_dim]; throws std::out_of_range otherwise.
  std::span<const Face> faces(int d) const;
  std::size_t count(int d) const { return faces(d).size(); }
  std::optional<std::size_t> index_of(const Face& f) const;
  /// Largest d with nonempty X_d (at most max_dim).
  int top_dim() const noexcept;

 private:
  Graph graph_;
  int max_dim_;
  std::vector<std::vector<Face>> faces_;  // faces_[d + 1]
  std::vector<std::unordered_map<Face, std::size_t, FaceHash>> index_;
};

/// Size of the largest clique, found by the same ordered backtracking.
std::size_t clique_number(const Graph& g);

/// [F:K]: (-1)^j when K is F without its j-th smallest vertex, else 0.
int face_sign(const Face& f, const Face& k);

/// Signed incidence between X_{i+1} (rows) and X_i (columns), for
/// -1 <= i <= max_dim. When i + 1 > max_dim the result is 0 x |X_i|.
IntMatrix coboundary(const CliqueComplex& x, int i);

/// Number of (dim F + 1)-faces containing F.
std::size_t face_degree(const CliqueComplex& x, const Face& f);

/// [F:F cap F'][F':F cap F'] when the faces share all but one vertex, else 0.
/// Throws InputError when the dimensions differ.
int epsilon(const Face& f, const Face& g);

Face face_union(const Face& a, const Face& b);

}  // namespace sspec
