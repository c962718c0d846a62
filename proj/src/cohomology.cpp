#include "sspec/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "sspec/errors.hpp"
#include "sspec/spectra.hpp"

namespace sspec {

OrderedCycle OrderedCycle::make(const Graph& g, std::vector<Vertex> verts) {
  const std::size_t l = verts.size();
  if (l < 3) throw InputError("cycle: need at least three vertices");
  for (Vertex v : verts)
    if (v >= g.order()) throw InputError("cycle: vertex out of range");
  std::vector<Vertex> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("cycle: repeated vertex");
  for (std::size_t i = 0; i < l; ++i)
    if (!g.adjacent(verts[i], verts[(i + 1) % l]))
      throw InputError("cycle: consecutive vertices " + std::to_string(verts[i]) + ", " +
                       std::to_string(verts[(i + 1) % l]) + " are not adjacent");
  bool chordless = true;
  for (std::size_t i = 0; i < l && chordless; ++i)
    for (std::size_t j = i + 2; j < l; ++j) {
      if (i == 0 && j == l - 1) continue;
      if (g.adjacent(verts[i], verts[j])) {
        chordless = false;
        break;
      }
    }
  return OrderedCycle{std::move(verts), chordless};
}

Face OrderedCycle::edge(std::size_t i) const {
  Vertex u = verts[i % verts.size()], v = verts[(i + 1) % verts.size()];
  return u < v ? Face{u, v} : Face{v, u};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::unknown: return "unknown";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

namespace {

std::size_t edge_index(const CliqueComplex& x, const Face& e) {
  auto i = x.index_of(e);
  if (!i) throw InputError("edge {" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "} not in complex");
  return *i;
}

std::size_t triangle_index(const CliqueComplex& x, Face t) {
  std::sort(t.begin(), t.end());
  if (x.max_dim() < 2) throw InputError("complex has no triangles (max_dim < 2)");
  auto i = x.index_of(t);
  if (!i) throw InputError("triangle not in complex");
  return *i;
}

EdgeVector negated(EdgeVector v) {
  for (auto& [i, x] : v.entries) x = -x;
  return v;
}

EdgeVector plus(EdgeVector a, const EdgeVector& b, std::int64_t scale = 1) {
  for (auto [i, x] : b.entries) a.add(i, scale * x);
  return a;
}

// First value seen twice among ranks at up to four primes.
std::size_t agreed_rank(const IntMatrix& m, const std::vector<std::uint64_t>& primes, bool as_given,
                        std::vector<std::uint64_t>& used) {
  std::vector<std::uint64_t> pool = primes;
  if (pool.size() < 4) {
    auto more = primes_below(*std::min_element(pool.begin(), pool.end()), 4 - pool.size());
    pool.insert(pool.end(), more.begin(), more.end());
  }
  std::vector<std::size_t> seen;
  for (std::size_t k = 0; k < 4; ++k) {
    std::size_t r = rank_mod_p(m, pool[k], as_given);
    if (std::find(used.begin(), used.end(), pool[k]) == used.end()) used.push_back(pool[k]);
    if (std::find(seen.begin(), seen.end(), r) != seen.end()) return r;
    seen.push_back(r);
  }
  throw VerificationError("h1_dimension: rank disagrees across four primes");
}

}  // namespace

H1Report h1_dimension(const CliqueComplex& x, const std::vector<std::uint64_t>& primes) {
  if (x.max_dim() < 2) throw InputError("h1_dimension: complex must include triangles (max_dim >= 2)");
  if (primes.size() < 2) throw InputError("h1_dimension: need at least two primes");
  const IntMatrix d0 = coboundary(x, 0), d1 = coboundary(x, 1);
  H1Report r;
  r.n_edges = x.count(1);
  r.rank_d0 = agreed_rank(d0, primes, true, r.primes_used);
  r.rank_d1 = agreed_rank(d1, primes, true, r.primes_used);
  if (r.rank_d0 + r.rank_d1 > r.n_edges) throw VerificationError("h1_dimension: rank sum exceeds |E|");
  r.dim_h1 = r.n_edges - r.rank_d1 - r.rank_d0;

  // ker delta_0^T / im delta_1^T, eliminated on the transposed matrices
  const std::size_t rank_d0t = agreed_rank(d0.transpose(), primes, true, r.primes_used);
  const std::size_t rank_d1t = agreed_rank(d1.transpose(), primes, true, r.primes_used);
  r.dual_dim = (r.n_edges - rank_d0t) - rank_d1t;
  if (r.dual_dim != r.dim_h1) throw VerificationError("h1_dimension: dual quotient dimension differs");
  return r;
}

EdgeVector cycle_vector(const CliqueComplex& x, const OrderedCycle& c) {
  const std::size_t l = c.length();
  if (l < 3) throw InputError("cycle_vector: cycle too short");
  const Graph& g = x.graph();
  for (std::size_t i = 0; i < l; ++i)
    if (c.verts[i] >= g.order() || !g.adjacent(c.verts[i], c.verts[(i + 1) % l]))
      throw InputError("cycle_vector: input is not a cycle of the graph");
  EdgeVector t;
  t.dim = 1;
  std::int64_t coeff = 1;
  t.add(edge_index(x, c.edge(0)), coeff);
  for (std::size_t i = 1; i < l; ++i) {
    const Face vi{c.verts[i]};
    coeff = -coeff * face_sign(c.edge(i - 1), vi) * face_sign(c.edge(i), vi);
    t.add(edge_index(x, c.edge(i)), coeff);
  }
  // delta_0^T T(C) = 0: each edge {x0 < x1} contributes -c at x0 and +c at x1.
  std::map<Vertex, std::int64_t> boundary;
  auto edges = x.faces(1);
  for (auto [idx, val] : t.entries) {
    boundary[edges[idx][0]] -= val;
    boundary[edges[idx][1]] += val;
  }
  for (auto [v, s] : boundary)
    if (s != 0) throw VerificationError("cycle_vector: T(C) is not in ker delta_0^T");
  return t;
}

EdgeVector coboundary_transpose(const CliqueComplex& x, const SparseVector& chain) {
  if (chain.dim != 2) throw InputError("coboundary_transpose: expected a triangle-indexed vector");
  auto tris = x.faces(2);
  EdgeVector out;
  out.dim = 1;
  for (auto [idx, val] : chain.entries) {
    const Face& t = tris[idx];
    for (std::size_t j = 0; j < 3; ++j) {
      Face f = t;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
      out.add(edge_index(x, f), j % 2 == 0 ? val : -val);
    }
  }
  return out;
}

int rotation_relation(const CliqueComplex& x, const OrderedCycle& c, std::size_t i) {
  const std::size_t l = c.length();
  if (i < 1 || i > l) throw InputError("rotation_relation: index out of range");
  std::vector<Vertex> rot;
  for (std::size_t k = 0; k < l; ++k) rot.push_back(c.verts[(i - 1 + k) % l]);
  const EdgeVector t0 = cycle_vector(x, c);
  const EdgeVector t1 = cycle_vector(x, OrderedCycle::make(x.graph(), rot));
  if (t1 == t0) return 1;
  if (t1 == negated(t0)) return -1;
  throw VerificationError("rotation_relation: rotated cycle vector is not +-T(C)");
}

std::string wheel4_case_tag(Vertex a, Vertex b, Vertex c, Vertex d, Vertex e) {
  std::array<Vertex, 4> cyc{a, b, c, d};
  // rotate/reflect so the minimum comes first and its neighbours are ordered
  std::array<Vertex, 4> best{};
  bool found = false;
  for (int r = 0; r < 4; ++r)
    for (int dir : {1, -1}) {
      std::array<Vertex, 4> img{};
      for (int k = 0; k < 4; ++k) img[static_cast<std::size_t>(k)] = cyc[static_cast<std::size_t>(((r + dir * k) % 4 + 4) % 4)];
      if (img[0] == *std::min_element(cyc.begin(), cyc.end()) && img[1] < img[3]) {
        best = img;
        found = true;
      }
    }
  if (!found) throw InputError("wheel4_case_tag: repeated vertices");
  std::array<Vertex, 4> sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  std::string tag = "(";
  for (int k = 0; k < 4; ++k) {
    auto rank = std::find(sorted.begin(), sorted.end(), best[static_cast<std::size_t>(k)]) - sorted.begin();
    tag += (k ? "," : "") + std::to_string(2 * (rank + 1));
  }
  auto slot = std::count_if(sorted.begin(), sorted.end(), [&](Vertex v) { return v < e; });
  return tag + ";" + std::to_string(2 * slot + 1) + ")";
}

WheelDecomposition wheel4_decompose(const CliqueComplex& x, Vertex a, Vertex b, Vertex c, Vertex d, Vertex e) {
  const Graph& g = x.graph();
  const OrderedCycle cyc = OrderedCycle::make(g, {a, b, c, d});
  for (Vertex v : {a, b, c, d}) {
    if (v == e) throw InputError("wheel4_decompose: apex lies on the cycle");
    if (!g.adjacent(v, e)) throw InputError("wheel4_decompose: apex is not adjacent to every cycle vertex");
  }
  const std::array<std::size_t, 4> tris = {triangle_index(x, {a, b, e}), triangle_index(x, {b, c, e}),
                                           triangle_index(x, {c, d, e}), triangle_index(x, {a, d, e})};
  const EdgeVector target = cycle_vector(x, cyc);
  std::vector<WheelDecomposition> hits;
  for (int mask = 0; mask < 16; ++mask) {
    WheelDecomposition w;
    w.chain.dim = 2;
    for (std::size_t k = 0; k < 4; ++k) {
      w.signs[k] = (mask >> k) & 1 ? -1 : 1;
      w.chain.add(tris[k], w.signs[k]);
    }
    if (coboundary_transpose(x, w.chain) == target) hits.push_back(std::move(w));
  }
  if (hits.size() != 1)
    throw VerificationError("wheel4_decompose: " + std::to_string(hits.size()) +
                            " sign patterns reproduce T(a,b,c,d), expected exactly one");
  hits[0].case_tag = wheel4_case_tag(a, b, c, d, e);
  return hits[0];
}

SupportReduction support_reduce(const CliqueComplex& x, const OrderedCycle& c, Vertex e) {
  const Graph& g = x.graph();
  const std::size_t l = c.length();
  if (l < 4) throw InputError("support_reduce: cycle must have at least four vertices");
  const Vertex a = c.verts[0], b = c.verts[1], cc = c.verts[2], d = c.verts[3];
  if (std::find(c.verts.begin(), c.verts.end(), e) != c.verts.end())
    throw InputError("support_reduce: common neighbour lies on the cycle");
  for (Vertex v : {a, b, cc, d})
    if (!g.adjacent(v, e)) throw InputError("support_reduce: e is not a common neighbour of a, b, c, d");

  const EdgeVector t = cycle_vector(x, c);
  const std::array<Face, 3> edges = {c.edge(0), c.edge(1), c.edge(2)};
  std::array<Face, 3> tris = {Face{a, b, e}, Face{b, cc, e}, Face{cc, d, e}};
  SupportReduction out;
  out.chain.dim = 2;
  for (std::size_t k = 0; k < 3; ++k) {
    std::sort(tris[k].begin(), tris[k].end());
    const std::int64_t ck = t.at(edge_index(x, edges[k]));
    out.chain.add(triangle_index(x, tris[k]), -ck * face_sign(tris[k], edges[k]));
  }
  out.reduced = plus(t, coboundary_transpose(x, out.chain));

  std::vector<Vertex> shorter = {a, e, d};
  shorter.insert(shorter.end(), c.verts.begin() + 4, c.verts.end());
  out.shortened = OrderedCycle::make(g, shorter);
  const EdgeVector ts = cycle_vector(x, out.shortened);
  if (out.reduced == ts) out.sign = 1;
  else if (out.reduced == negated(ts)) out.sign = -1;
  else throw VerificationError("support_reduce: reduced vector is not +-T of the shortened cycle");
  return out;
}

CycleCut cycle_cut(const CliqueComplex& x, const OrderedCycle& c, std::size_t i) {
  const Graph& g = x.graph();
  const std::size_t l = c.length();
  if (l < 4 || i < 3 || i > l - 1) throw InputError("cycle_cut: need 3 <= i <= l-1 on a cycle of length >= 4");
  if (!g.adjacent(c.verts[0], c.verts[i - 1])) throw InputError("cycle_cut: v_1 and v_i are not adjacent");
  CycleCut out;
  out.first = OrderedCycle::make(g, {c.verts.begin(), c.verts.begin() + static_cast<std::ptrdiff_t>(i)});
  std::vector<Vertex> rest(c.verts.begin() + static_cast<std::ptrdiff_t>(i - 1), c.verts.end());
  rest.push_back(c.verts[0]);
  out.second = OrderedCycle::make(g, rest);
  const EdgeVector t = cycle_vector(x, c);
  out.sign = static_cast<int>(t.at(edge_index(x, c.edge(i - 1))));
  if (out.sign != 1 && out.sign != -1) throw VerificationError("cycle_cut: coefficient is not +-1");
  if (plus(cycle_vector(x, out.first), cycle_vector(x, out.second), out.sign) != t)
    throw VerificationError("cycle_cut: T(C) != T(C1) + s T(C2)");
  return out;
}

namespace {

struct CycleSearch {
  const Graph& g;
  CycleSearchLimits lim;
  const std::function<bool(const OrderedCycle&)>& visit;
  CycleSearchResult res;
  std::vector<Vertex> path;
  std::size_t steps = 0;

  bool halted() const { return res.cap_hit || res.stopped; }

  void emit(Vertex w) {
    if (res.emitted >= lim.max_cycles) {
      res.cap_hit = true;
      return;
    }
    OrderedCycle c;
    c.verts = path;
    c.verts.push_back(w);
    c.induced = true;
    ++res.emitted;
    if (!visit(c)) res.stopped = true;
  }

  // forbidden: vertices <= s, path vertices, neighbours of interior vertices
  void extend(const VertexSet& forbidden) {
    const Vertex s = path.front(), last = path.back();
    const VertexSet& ns = g.neighbor_set(s);
    for (Vertex w : g.neighbors(last)) {
      if (halted()) return;
      if (forbidden.contains(w)) continue;
      if (++steps > lim.max_steps) {
        res.cap_hit = true;
        return;
      }
      if (ns.contains(w)) {
        if (w > path[1] && path.size() + 1 <= lim.max_len) emit(w);
        continue;
      }
      if (path.size() + 2 > lim.max_len) {
        res.length_truncated = true;
        continue;
      }
      VertexSet next = forbidden;
      next.insert(w);
      if (path.size() >= 2) next |= g.neighbor_set(last);
      path.push_back(w);
      extend(next);
      path.pop_back();
    }
  }
};

}  // namespace

CycleSearchResult for_each_induced_cycle(const Graph& g, const CycleSearchLimits& lim_in,
                                         const std::function<bool(const OrderedCycle&)>& visit) {
  CycleSearchLimits lim = lim_in;
  if (lim.max_len == 0) lim.max_len = g.order();
  CycleSearch search{g, lim, visit, {}, {}, 0};
  const std::size_t n = g.order();
  if (lim.max_len >= 3) {
    VertexSet low(n);
    for (Vertex s = 0; s < n && !search.halted(); ++s) {
      low.insert(s);
      for (Vertex p2 : g.neighbors(s)) {
        if (p2 <= s || search.halted()) continue;
        VertexSet forbidden = low;
        forbidden.insert(p2);
        search.path = {s, p2};
        search.extend(forbidden);
      }
    }
  }
  auto res = search.res;
  res.complete = !res.cap_hit && !res.length_truncated && !res.stopped;
  return res;
}

std::vector<OrderedCycle> induced_cycles(const Graph& g, std::size_t max_len, CycleSearchResult* result) {
  std::vector<OrderedCycle> out;
  CycleSearchLimits lim;
  lim.max_len = max_len;
  auto res = for_each_induced_cycle(g, lim, [&](const OrderedCycle& c) {
    out.push_back(c);
    return true;
  });
  if (result) *result = res;
  return out;
}

CheckResult check_four_consecutive(const Graph& g, const CycleSearchLimits& lim) {
  CheckResult out;
  auto res = for_each_induced_cycle(g, lim, [&](const OrderedCycle& c) {
    const std::size_t l = c.length();
    if (l < 4) return true;
    for (std::size_t i = 0; i < l; ++i) {
      VertexSet common = g.neighbor_set(c.verts[i]);
      for (std::size_t k = 1; k < 4; ++k) common &= g.neighbor_set(c.verts[(i + k) % l]);
      if (!common.empty()) return true;
    }
    out.witness = c;
    return false;
  });
  if (out.witness) {
    out.verdict = Verdict::fails;
    out.note = "induced cycle without four consecutive vertices sharing a neighbour";
  } else if (!res.complete) {
    out.verdict = Verdict::unknown;
    out.note = res.cap_hit ? "induced-cycle enumeration cap reached" : "cycles longer than max_len not examined";
  } else {
    out.verdict = Verdict::holds;
  }
  return out;
}

bool check_meshulam(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4) return true;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      VertexSet ab = g.neighbor_set(a) & g.neighbor_set(b);
      if (ab.empty()) return false;
      for (Vertex c = b + 1; c < n; ++c) {
        VertexSet abc = ab & g.neighbor_set(c);
        if (abc.empty()) return false;
        for (Vertex d = c + 1; d < n; ++d)
          if ((abc & g.neighbor_set(d)).empty()) return false;
      }
    }
  return true;
}

bool check_srg_inequality(const SrgParams& p) { return 2 * p.lambda + p.mu + 2 > 2 * p.k; }

bool induced_connected(const Graph& g, const VertexSet& s) {
  auto members = s.members();
  if (members.empty()) return true;
  VertexSet seen(g.order());
  std::vector<Vertex> stack{members[0]};
  seen.insert(members[0]);
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (s.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == members.size();
}

bool neighborhood_connected(const Graph& g, Vertex x) {
  if (x >= g.order()) throw InputError("neighborhood_connected: vertex out of range");
  return induced_connected(g, g.neighbor_set(x));
}

ConferenceReport check_conference_hypothesis(const Graph& g, const CycleSearchLimits& lim_in) {
  ConferenceReport out;
  auto p = srg_parameters(g);
  if (!p) {
    out.note = "not strongly regular";
    return out;
  }
  out.is_srg = true;
  out.conference_params = p->is_conference();
  out.v_above_9 = p->v > 9;

  out.condition_a = Verdict::holds;
  const std::size_t n = g.order();
  for (Vertex x = 0; x < n && !out.a_witness; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      if (!induced_connected(g, g.neighbor_set(x) & g.neighbor_set(y))) {
        out.condition_a = Verdict::fails;
        out.a_witness = std::make_pair(x, y);
        break;
      }
    }

  CycleSearchLimits lim = lim_in;
  lim.max_len = 5;
  auto res = for_each_induced_cycle(g, lim, [&](const OrderedCycle& c) {
    if (c.length() != 5) return true;
    for (std::size_t skip = 0; skip < 5; ++skip) {
      VertexSet common(n);
      bool first = true;
      for (std::size_t k = 0; k < 5; ++k) {
        if (k == skip) continue;
        if (first) {
          common = g.neighbor_set(c.verts[k]);
          first = false;
        } else {
          common &= g.neighbor_set(c.verts[k]);
        }
      }
      if (!common.empty()) return true;
    }
    out.b_witness = c;
    return false;
  });
  if (out.b_witness) out.condition_b = Verdict::fails;
  else if (res.cap_hit) out.condition_b = Verdict::unknown;
  else out.condition_b = Verdict::holds;

  if (out.conference_params && !out.v_above_9) out.note = "conference parameters with v <= 9";
  return out;
}

std::map<std::string, Verdict> run_checkers(const Graph& g, const CycleSearchLimits& lim) {
  std::map<std::string, Verdict> v;
  auto yes = [](bool b) { return b ? Verdict::holds : Verdict::fails; };
  v["meshulam"] = yes(check_meshulam(g));
  v["four_consecutive"] = check_four_consecutive(g, lim).verdict;
  auto p = srg_parameters(g);
  v["srg_inequality"] = p ? yes(check_srg_inequality(*p)) : Verdict::not_applicable;
  auto conf = check_conference_hypothesis(g, lim);
  v["conference_a"] = conf.condition_a;
  v["conference_b"] = conf.condition_b;
  // Derived sufficient conditions: SRG with (a) and (b); conference, v > 9, (a).
  if (!conf.is_srg) {
    v["srg_5cycle"] = Verdict::not_applicable;
  } else if (conf.condition_a == Verdict::holds && conf.condition_b == Verdict::holds) {
    v["srg_5cycle"] = Verdict::holds;
  } else if (conf.condition_a == Verdict::fails || conf.condition_b == Verdict::fails) {
    v["srg_5cycle"] = Verdict::fails;
  } else {
    v["srg_5cycle"] = Verdict::unknown;
  }
  if (!conf.conference_params || !conf.v_above_9) v["conference_h1"] = Verdict::not_applicable;
  else v["conference_h1"] = conf.condition_a;
  return v;
}

}  // namespace sspec
