#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "sspec/graph.hpp"

namespace sspec {

struct GeneratorOptions {
  std::size_t max_vertices = 5000;
};

// Families from the literature. Vertices are numbered in lexicographic order
// of their labels; all subset labels are 1-based.

/// 2-subsets of [n], adjacent when they meet in one element.
Graph triangular_graph(int n, const GeneratorOptions& opt = {});
/// Words of length d over an alphabet of size a, adjacent at Hamming distance 1.
Graph hamming_graph(int d, int a, const GeneratorOptions& opt = {});
/// t-subsets of [n], adjacent when disjoint.
Graph kneser_graph(int n, int t, const GeneratorOptions& opt = {});
/// q prime with q = 1 mod 4, or q in {9, 25, 49, 81}.
Graph paley_graph(int q, const GeneratorOptions& opt = {});
/// Projective points of GF(q)^{2r}, adjacent when the alternating form is nonzero.
Graph symplectic_graph(int r, int q, const GeneratorOptions& opt = {});
/// The generalized quadrangle W(3,q): points of PG(3,q), totally isotropic lines.
PointLineGeometry gq_w3_geometry(int q, const GeneratorOptions& opt = {});

Graph complete_graph(int n, const GeneratorOptions& opt = {});
Graph empty_graph(int n, const GeneratorOptions& opt = {});
Graph cycle_graph(int n, const GeneratorOptions& opt = {});
Graph path_graph(int n, const GeneratorOptions& opt = {});
Graph petersen_graph();
/// G(n, p) with a seeded generator; reproducible across platforms.
Graph random_graph(int n, double p, std::uint64_t seed, const GeneratorOptions& opt = {});

/// Builds a graph from "family:args", e.g. "triangular:7", "hamming:2,4",
/// "gq-w3:3", "random:12,0.4,7". Throws InputError on unknown families or bad
/// arguments, CapExceeded past opt.max_vertices.
Graph generate(std::string_view spec, const GeneratorOptions& opt = {});

}  // namespace sspec
