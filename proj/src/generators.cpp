#include "sspec/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sspec/errors.hpp"
#include "sspec/modular.hpp"

namespace sspec {

namespace {

void check_cap(std::uint64_t n, const GeneratorOptions& opt, const char* family) {
  if (n > opt.max_vertices)
    throw CapExceeded(std::string(family) + ": " + std::to_string(n) +
                      " vertices exceeds cap of " + std::to_string(opt.max_vertices));
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::uint64_t{1} << 62) / base) return std::uint64_t{1} << 62;
    r *= base;
  }
  return r;
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (r > (std::uint64_t{1} << 40)) return r;  // large enough to trip any cap
  }
  return r;
}

std::string subset_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string tuple_label(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

// All t-subsets of 1..n in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  if (t == 0) return {{}};
  while (true) {
    out.push_back(cur);
    int i = t - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - t + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t c = 0;
  for (int x : a) c += std::count(b.begin(), b.end(), x);
  return c;
}

Graph subset_graph(int n, int t, const std::function<bool(std::size_t)>& adj_by_meet) {
  auto sets = subsets(n, t);
  std::vector<Edge> es;
  std::vector<std::string> labels;
  for (auto& s : sets) labels.push_back(subset_label(s));
  for (std::size_t u = 0; u < sets.size(); ++u)
    for (std::size_t v = u + 1; v < sets.size(); ++v)
      if (adj_by_meet(intersection_size(sets[u], sets[v])))
        es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(sets.size(), es, std::move(labels));
}

// Normalized projective representatives of GF(q)^dim (first nonzero coordinate
// equal to 1), in lexicographic order.
std::vector<std::vector<int>> projective_points(int dim, int q) {
  std::vector<std::vector<int>> pts;
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q), dim);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = dim - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(q));
      c /= static_cast<std::uint64_t>(q);
    }
    auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (lead != v.end() && *lead == 1) pts.push_back(v);
  }
  return pts;
}

// Standard alternating form on GF(q)^{2r}: sum_i x_i y_{r+i} - x_{r+i} y_i.
int alternating_form(const std::vector<int>& x, const std::vector<int>& y, int q) {
  const std::size_t r = x.size() / 2;
  long long s = 0;
  for (std::size_t i = 0; i < r; ++i) s += x[i] * y[r + i] - x[r + i] * y[i];
  return static_cast<int>(((s % q) + q) % q);
}

std::vector<int> normalize(std::vector<int> v, int q) {
  auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
  if (lead == v.end()) return v;
  int inv = static_cast<int>(inverse_mod(static_cast<std::uint64_t>(*lead),
                                         static_cast<std::uint64_t>(q)));
  for (int& x : v) x = x * inv % q;
  return v;
}

// Arithmetic in GF(p^m) = GF(p)[x]/(f), elements encoded as base-p integers.
struct SmallField {
  int p;
  std::vector<int> f;  // monic, low-to-high, degree m

  int m() const { return static_cast<int>(f.size()) - 1; }
  int order() const { return static_cast<int>(checked_pow(static_cast<std::uint64_t>(p), m())); }

  std::vector<int> decode(int e) const {
    std::vector<int> c(static_cast<std::size_t>(m()));
    for (auto& x : c) {
      x = e % p;
      e /= p;
    }
    return c;
  }
  int encode(const std::vector<int>& c) const {
    int e = 0;
    for (int i = m() - 1; i >= 0; --i) e = e * p + c[static_cast<std::size_t>(i)];
    return e;
  }
  int sub(int a, int b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ((x[i] - y[i]) % p + p) % p;
    return encode(x);
  }
  int mul(int a, int b) const {
    auto x = decode(a), y = decode(b);
    const int d = m();
    std::vector<int> prod(static_cast<std::size_t>(2 * d), 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        prod[static_cast<std::size_t>(i + j)] =
            (prod[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p;
    for (int k = 2 * d - 1; k >= d; --k) {
      int c = prod[static_cast<std::size_t>(k)];
      if (!c) continue;
      for (int i = 0; i <= d; ++i) {
        auto& t = prod[static_cast<std::size_t>(k - d + i)];
        t = ((t - c * f[static_cast<std::size_t>(i)]) % p + p) % p;
      }
    }
    prod.resize(static_cast<std::size_t>(d));
    return encode(prod);
  }
};

SmallField field_for(int q) {
  if (is_prime(static_cast<std::uint64_t>(q))) return {q, {0, 1}};
  static const std::map<int, SmallField> tables = {
      {9, {3, {1, 0, 1}}},         // x^2 + 1
      {25, {5, {2, 1, 1}}},        // x^2 + x + 2
      {49, {7, {3, 1, 1}}},        // x^2 + x + 3
      {81, {3, {2, 1, 0, 0, 1}}},  // x^4 + x + 2
  };
  auto it = tables.find(q);
  if (it == tables.end())
    throw InputError("paley: q=" + std::to_string(q) + " is neither prime nor in {9,25,49,81}");
  return it->second;
}

}  // namespace

Graph triangular_graph(int n, const GeneratorOptions& opt) {
  if (n < 2) throw InputError("triangular: need n >= 2");
  check_cap(binom(n, 2), opt, "triangular");
  return subset_graph(n, 2, [](std::size_t meet) { return meet == 1; });
}

Graph kneser_graph(int n, int t, const GeneratorOptions& opt) {
  if (t < 1 || n < 2 * t) throw InputError("kneser: need n >= 2t >= 2");
  check_cap(binom(n, t), opt, "kneser");
  return subset_graph(n, t, [](std::size_t meet) { return meet == 0; });
}

Graph hamming_graph(int d, int a, const GeneratorOptions& opt) {
  if (d < 1 || a < 1) throw InputError("hamming: need d >= 1 and a >= 1");
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(a), d);
  check_cap(total, opt, "hamming");
  const auto n = static_cast<std::size_t>(total);
  std::vector<std::vector<int>> words(n, std::vector<int>(static_cast<std::size_t>(d)));
  std::vector<std::string> labels(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::size_t c = w;
    for (int i = d - 1; i >= 0; --i) {
      words[w][static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(a));
      c /= static_cast<std::size_t>(a);
    }
    labels[w] = tuple_label(words[w]);
  }
  std::vector<Edge> es;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      int diff = 0;
      for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) diff += words[u][i] != words[v][i];
      if (diff == 1) es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  return Graph::from_edges(n, es, std::move(labels));
}

Graph paley_graph(int q, const GeneratorOptions& opt) {
  if (q < 5 || q % 4 != 1) throw InputError("paley: need q = 1 mod 4, q >= 5");
  auto F = field_for(q);
  check_cap(static_cast<std::uint64_t>(q), opt, "paley");
  std::vector<bool> square(static_cast<std::size_t>(q), false);
  for (int x = 1; x < q; ++x) square[static_cast<std::size_t>(F.mul(x, x))] = true;
  std::vector<Edge> es;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (square[static_cast<std::size_t>(F.sub(u, v))])
        es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(static_cast<std::size_t>(q), es);
}

Graph symplectic_graph(int r, int q, const GeneratorOptions& opt) {
  if (r < 2) throw InputError("symplectic: need r >= 2");
  if (!is_prime(static_cast<std::uint64_t>(q))) throw InputError("symplectic: q must be prime");
  const std::uint64_t total = (checked_pow(static_cast<std::uint64_t>(q), 2 * r) - 1) /
                              static_cast<std::uint64_t>(q - 1);
  check_cap(total, opt, "symplectic");
  auto pts = projective_points(2 * r, q);
  std::vector<std::string> labels;
  for (auto& p : pts) labels.push_back(tuple_label(p));
  std::vector<Edge> es;
  for (std::size_t u = 0; u < pts.size(); ++u)
    for (std::size_t v = u + 1; v < pts.size(); ++v)
      if (alternating_form(pts[u], pts[v], q) != 0)
        es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(pts.size(), es, std::move(labels));
}

PointLineGeometry gq_w3_geometry(int q, const GeneratorOptions& opt) {
  if (!is_prime(static_cast<std::uint64_t>(q)) || q > 5)
    throw InputError("gq-w3: q must be a prime <= 5");
  const std::uint64_t npts = static_cast<std::uint64_t>((q + 1) * (q * q + 1));
  check_cap(npts, opt, "gq-w3");
  auto pts = projective_points(4, q);
  std::map<std::vector<int>, Vertex> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<Vertex>(i);

  std::vector<Edge> es;
  std::set<std::vector<Vertex>> lines;
  for (std::size_t u = 0; u < pts.size(); ++u)
    for (std::size_t v = u + 1; v < pts.size(); ++v) {
      if (alternating_form(pts[u], pts[v], q) != 0) continue;
      es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      std::vector<Vertex> line;
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          if (a == 0 && b == 0) continue;
          std::vector<int> w(4);
          for (std::size_t i = 0; i < 4; ++i) w[i] = (a * pts[u][i] + b * pts[v][i]) % q;
          line.push_back(index.at(normalize(w, q)));
        }
      std::sort(line.begin(), line.end());
      line.erase(std::unique(line.begin(), line.end()), line.end());
      lines.insert(std::move(line));
    }

  std::vector<std::string> labels;
  for (auto& p : pts) labels.push_back(tuple_label(p));
  PointLineGeometry geo{Graph::from_edges(pts.size(), es, std::move(labels)),
                        {lines.begin(), lines.end()}};

  // Every triangle of the point graph must sit inside a line: the common
  // neighbours of collinear u, v are exactly the rest of their line.
  const auto& g = geo.graph;
  std::vector<std::vector<std::size_t>> on(pts.size());
  for (std::size_t l = 0; l < geo.lines.size(); ++l) {
    if (geo.lines[l].size() != static_cast<std::size_t>(q + 1))
      throw VerificationError("gq-w3: line with wrong point count");
    for (Vertex p : geo.lines[l]) on[p].push_back(l);
  }
  for (auto [u, v] : g.edges()) {
    std::vector<std::size_t> shared;
    std::set_intersection(on[u].begin(), on[u].end(), on[v].begin(), on[v].end(),
                          std::back_inserter(shared));
    if (shared.size() != 1) throw VerificationError("gq-w3: collinear pair not on a unique line");
    auto common = (g.neighbor_set(u) & g.neighbor_set(v)).members();
    std::vector<Vertex> rest;
    for (Vertex w : geo.lines[shared[0]])
      if (w != u && w != v) rest.push_back(w);
    if (common != rest) throw VerificationError("gq-w3: triangle not contained in a line");
  }
  return geo;
}

Graph complete_graph(int n, const GeneratorOptions& opt) {
  if (n < 0) throw InputError("complete: need n >= 0");
  check_cap(static_cast<std::uint64_t>(n), opt, "complete");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(static_cast<std::size_t>(n), es);
}

Graph empty_graph(int n, const GeneratorOptions& opt) {
  if (n < 0) throw InputError("empty: need n >= 0");
  check_cap(static_cast<std::uint64_t>(n), opt, "empty");
  return Graph::from_edges(static_cast<std::size_t>(n), {});
}

Graph cycle_graph(int n, const GeneratorOptions& opt) {
  if (n < 3) throw InputError("cycle: need n >= 3");
  check_cap(static_cast<std::uint64_t>(n), opt, "cycle");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(static_cast<std::size_t>(n), es);
}

Graph path_graph(int n, const GeneratorOptions& opt) {
  if (n < 1) throw InputError("path: need n >= 1");
  check_cap(static_cast<std::uint64_t>(n), opt, "path");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(static_cast<std::size_t>(n), es);
}

Graph petersen_graph() { return kneser_graph(5, 2); }

Graph random_graph(int n, double p, std::uint64_t seed, const GeneratorOptions& opt) {
  if (n < 0 || p < 0.0 || p > 1.0) throw InputError("random: need n >= 0 and 0 <= p <= 1");
  check_cap(static_cast<std::uint64_t>(n), opt, "random");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      // explicit 53-bit conversion: the std distributions are not portable
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
        es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(static_cast<std::size_t>(n), es);
}

namespace {

std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.emplace_back(s.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

long long to_int(const std::string& s, std::string_view family) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InputError(std::string(family) + ": bad integer argument '" + s + "'");
  if (v < -1000000 || v > 1000000000)
    throw InputError(std::string(family) + ": argument out of range '" + s + "'");
  return v;
}

}  // namespace

Graph generate(std::string_view spec, const GeneratorOptions& opt) {
  auto colon = spec.find(':');
  std::string family(spec.substr(0, colon));
  auto args = split_args(colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1));
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw InputError(family + ": expected " + std::to_string(k) + " argument(s), got " +
                       std::to_string(args.size()));
  };
  auto I = [&](std::size_t i) { return static_cast<int>(to_int(args[i], family)); };

  if (family == "triangular") { want(1); return triangular_graph(I(0), opt); }
  if (family == "hamming") { want(2); return hamming_graph(I(0), I(1), opt); }
  if (family == "kneser") { want(2); return kneser_graph(I(0), I(1), opt); }
  if (family == "paley") { want(1); return paley_graph(I(0), opt); }
  if (family == "symplectic") { want(2); return symplectic_graph(I(0), I(1), opt); }
  if (family == "gq-w3") { want(1); return gq_w3_geometry(I(0), opt).graph; }
  if (family == "complete") { want(1); return complete_graph(I(0), opt); }
  if (family == "empty") { want(1); return empty_graph(I(0), opt); }
  if (family == "cycle") { want(1); return cycle_graph(I(0), opt); }
  if (family == "path") { want(1); return path_graph(I(0), opt); }
  if (family == "petersen") { want(0); return petersen_graph(); }
  if (family == "random") {
    want(3);
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(args[1], &used);
      if (used != args[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("random: bad probability '" + args[1] + "'");
    }
    return random_graph(I(0), p, static_cast<std::uint64_t>(to_int(args[2], family)), opt);
  }
  throw InputError("unknown graph family '" + family + "'");
}

}  // namespace sspec
