#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sspec/closed_forms.hpp"
#include "sspec/complex.hpp"
#include "sspec/graph.hpp"
#include "sspec/modular.hpp"

namespace sspec {

/// Vertices (v_1, ..., v_l) of a cycle: consecutive entries and (v_l, v_1)
/// adjacent. `induced` records whether the cycle is chordless.
struct OrderedCycle {
  std::vector<Vertex> verts;
  bool induced = false;

  /// Validates the cycle (l >= 3, distinct, adjacent) and computes `induced`.
  static OrderedCycle make(const Graph& g, std::vector<Vertex> verts);
  std::size_t length() const noexcept { return verts.size(); }
  /// Edge e_i = {v_i, v_{i+1}} (0-based i, wrapping), as a sorted face.
  Face edge(std::size_t i) const;
  friend bool operator==(const OrderedCycle&, const OrderedCycle&) = default;
};

enum class Verdict { holds, fails, unknown, not_applicable };
std::string to_string(Verdict v);

struct H1Report {
  std::size_t dim_h1 = 0;
  std::size_t rank_d0 = 0;
  std::size_t rank_d1 = 0;
  std::size_t n_edges = 0;
  /// nullity(delta_0^T) - rank(delta_1^T), computed on the transposes.
  std::size_t dual_dim = 0;
  std::vector<std::uint64_t> primes_used;
  std::map<std::string, Verdict> checker_verdicts;
};

/// dim H^1 = |E| - rank delta_1 - rank delta_0 with ranks agreed at two primes,
/// cross-checked against the dual quotient. Requires max_dim >= 2.
H1Report h1_dimension(const CliqueComplex& x, const std::vector<std::uint64_t>& primes = default_primes());

/// T(C): c_1 = 1, c_i = -c_{i-1} [e_{i-1}:v_i][e_i:v_i]. Verifies delta_0^T T(C) = 0.
EdgeVector cycle_vector(const CliqueComplex& x, const OrderedCycle& c);

/// delta_1^T applied to a triangle-indexed vector.
EdgeVector coboundary_transpose(const CliqueComplex& x, const SparseVector& chain);

/// s with T(v_i, ..., v_l, v_1, ..., v_{i-1}) = s T(C), for 1-based i.
int rotation_relation(const CliqueComplex& x, const OrderedCycle& c, std::size_t i);

struct WheelDecomposition {
  std::array<int, 4> signs{};  // on {a,b,e}, {b,c,e}, {c,d,e}, {a,d,e}
  SparseVector chain;
  /// One of 15 labels: order type of the normalized 4-cycle and slot of e.
  std::string case_tag;
};

/// Finds the unique sign pattern with T((a,b,c,d)) = delta_1^T(chain) by
/// exhaustive search. Throws InputError if the configuration is not a wheel,
/// VerificationError if no pattern works.
WheelDecomposition wheel4_decompose(const CliqueComplex& x, Vertex a, Vertex b, Vertex c, Vertex d, Vertex e);

/// Classification used for wheel case tags; independent of the search.
std::string wheel4_case_tag(Vertex a, Vertex b, Vertex c, Vertex d, Vertex e);

struct SupportReduction {
  SparseVector chain;       // c'_4{a,b,e} + c'_5{b,c,e} + c'_6{c,d,e}
  EdgeVector reduced;       // T(C) + delta_1^T(chain)
  OrderedCycle shortened;   // (a, e, d, v_5, ..., v_l)
  int sign = 1;             // reduced = sign * T(shortened)
};

/// Replaces the edges ab, bc, cd of C = (a,b,c,d,...) by ae, ed using the
/// common neighbour e (not on C). Throws InputError when the hypothesis fails.
SupportReduction support_reduce(const CliqueComplex& x, const OrderedCycle& c, Vertex e);

struct CycleCut {
  OrderedCycle first;   // (v_1, ..., v_i)
  OrderedCycle second;  // (v_i, ..., v_l, v_1)
  int sign = 1;         // T(C) = T(first) + sign T(second)
};

/// Splits C along the chord v_1 ~ v_i (1-based, 3 <= i <= l-1).
CycleCut cycle_cut(const CliqueComplex& x, const OrderedCycle& c, std::size_t i);

struct CycleSearchLimits {
  std::size_t max_len = 0;  // 0 means the graph order
  std::size_t max_cycles = 1'000'000;
  std::size_t max_steps = 200'000'000;
};

struct CycleSearchResult {
  std::size_t emitted = 0;
  bool complete = true;          // every induced cycle up to max_len was visited
  bool cap_hit = false;          // max_cycles or max_steps reached
  bool length_truncated = false; // longer induced paths existed past max_len
  bool stopped = false;          // the visitor asked to stop
};

/// Visits each induced cycle of length 3..max_len once, as (s, v_2, ..., v_l)
/// with s the least vertex and v_2 < v_l. The visitor returns false to stop.
CycleSearchResult for_each_induced_cycle(const Graph& g, const CycleSearchLimits& lim,
                                         const std::function<bool(const OrderedCycle&)>& visit);

/// Collects cycles; `result` (optional) reports completeness.
std::vector<OrderedCycle> induced_cycles(const Graph& g, std::size_t max_len,
                                         CycleSearchResult* result = nullptr);

struct CheckResult {
  Verdict verdict = Verdict::unknown;
  std::optional<OrderedCycle> witness;
  std::string note;
};

/// Every induced cycle of length >= 4 has four consecutive vertices with a
/// common neighbour.
CheckResult check_four_consecutive(const Graph& g, const CycleSearchLimits& lim = {});
/// Any four distinct vertices have a common neighbour.
bool check_meshulam(const Graph& g);
/// 2 lambda + mu + 2 > 2k.
bool check_srg_inequality(const SrgParams& p);

struct ConferenceReport {
  bool is_srg = false;
  bool conference_params = false;
  bool v_above_9 = false;
  Verdict condition_a = Verdict::not_applicable;  // common neighbourhoods connected
  Verdict condition_b = Verdict::not_applicable;  // induced 5-cycles have a 4-set with a common neighbour
  std::optional<std::pair<Vertex, Vertex>> a_witness;
  std::optional<OrderedCycle> b_witness;
  std::string note;
};

ConferenceReport check_conference_hypothesis(const Graph& g, const CycleSearchLimits& lim = {});

/// Whether the subgraph induced by the neighbourhood of x is connected.
bool neighborhood_connected(const Graph& g, Vertex x);
/// Whether the subgraph induced by `s` is connected (empty counts as connected).
bool induced_connected(const Graph& g, const VertexSet& s);

/// Runs every checker and fills H1Report::checker_verdicts-style entries.
std::map<std::string, Verdict> run_checkers(const Graph& g, const CycleSearchLimits& lim = {});

}  // namespace sspec
