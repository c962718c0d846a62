// simplex-spectra: clique-complex spectra, closed-form verification and H^1.
#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

#include "sspec/closed_forms.hpp"
#include "sspec/cohomology.hpp"
#include "sspec/complex.hpp"
#include "sspec/errors.hpp"
#include "sspec/generators.hpp"
#include "sspec/graph6.hpp"
#include "sspec/report.hpp"
#include "sspec/spectra.hpp"

using namespace sspec;

namespace {

enum Exit { kOk = 0, kInternal = 1, kMismatch = 2, kInput = 3, kCap = 4 };

std::vector<std::uint64_t> active_primes() {
  if (const char* env = std::getenv("SIMPLEX_SPECTRA_PRIMES"); env && *env) return parse_prime_list(env);
  return default_primes();
}

std::vector<std::string> read_graph6_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '>') continue;
    out.push_back(line);
  }
  return out;
}

// gen:<family:args> | g6:<string> | file:<path>[@index]
Graph resolve_graph(const std::string& spec) {
  if (spec.starts_with("gen:")) return generate(spec.substr(4));
  if (spec.starts_with("g6:")) return parse_graph6(spec.substr(3));
  if (spec.starts_with("file:")) {
    std::string path = spec.substr(5);
    std::size_t index = 1;
    if (auto at = path.rfind('@'); at != std::string::npos) {
      const std::string idx = path.substr(at + 1);
      if (idx.empty() || !std::all_of(idx.begin(), idx.end(), ::isdigit))
        throw InputError("bad graph index '" + idx + "'");
      index = std::stoul(idx);
      path = path.substr(0, at);
    }
    auto lines = read_graph6_lines(path);
    if (index < 1 || index > lines.size())
      throw InputError("graph index " + std::to_string(index) + " out of range (file has " +
                       std::to_string(lines.size()) + " graphs)");
    return parse_graph6(lines[index - 1]);
  }
  throw InputError("graph spec must start with gen:, g6: or file:");
}

json describe(const std::string& spec, const Graph& g) {
  return {{"spec", spec}, {"order", g.order()}, {"size", g.size()}, {"graph6", write_graph6(g)}};
}

IntMatrix laplacian(const CliqueComplex& x, int i, const std::string& kind) {
  if (kind == "up") return up_laplacian(x, i);
  if (kind == "down") return down_laplacian(x, i);
  if (kind == "total") return total_laplacian(x, i);
  throw InputError("--laplacian must be up, down or total");
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad dimension '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("empty dimension list");
  return out;
}

std::vector<int> parse_ints(const std::string& text, std::size_t count, const std::string& what) {
  auto v = parse_dims(text);
  if (v.size() != count) throw InputError(what + " expects " + std::to_string(count) + " arguments");
  return v;
}

struct Run {
  json report = json::object();
  int code = kOk;
};

void emit(json report, double ms) {
  report["timing_ms"] = ms;
  std::cout << report.dump(2) << "\n";
}

// ---- spectrum --------------------------------------------------------------

Run cmd_spectrum(const std::string& spec, int dim, const std::string& kind, bool want_charpoly,
                 const std::string& format, std::ostream& human) {
  Graph g = resolve_graph(spec);
  const int top = kind == "down" ? dim : dim + 1;
  CliqueComplex x(g, std::max(top, 0));
  SpectrumOptions opt;
  opt.primes = active_primes();
  auto s = certified_spectrum(laplacian(x, dim, kind), opt);
  Run r;
  r.report = {{"command", "spectrum"},     {"graph", describe(spec, g)}, {"dim", dim},
              {"laplacian", kind},         {"tool_version", kToolVersion}, {"primes", opt.primes},
              {"result", to_json(s)}};
  if (want_charpoly) r.report["charpoly"] = format_charpoly(s);
  if (format == "array") {
    human << format_spectrum_array(s);
    if (want_charpoly) human << "charpoly: " << format_charpoly(s) << "\n";
  }
  return r;
}

// ---- verify ----------------------------------------------------------------

json verdict(const std::string& family, const std::string& instance, const PredictedSpectrum& p,
             const SpectrumSummary& s) {
  return {{"family", family}, {"instance", instance}, {"predicted", to_json(p)},
          {"computed", to_json(s)}, {"match", p.matches(s)}};
}

Run cmd_verify(const std::string& family_spec, const std::string& dims_text, const std::string& kind) {
  const auto colon = family_spec.find(':');
  if (colon == std::string::npos) throw InputError("verify expects family:args");
  const std::string family = family_spec.substr(0, colon), args = family_spec.substr(colon + 1);
  SpectrumOptions opt;
  opt.primes = active_primes();
  json results = json::array();
  bool all = true;
  auto check = [&](const CliqueComplex& x, int i, const std::string& lap, const PredictedSpectrum& p) {
    auto s = certified_spectrum(laplacian(x, i, lap), opt);
    json v = verdict(family, family_spec + " L" + std::to_string(i) + lap, p, s);
    all = all && p.matches(s);
    results.push_back(std::move(v));
  };

  if (family == "triangular") {
    const int n = parse_ints(args, 1, "triangular")[0];
    const std::vector<int> dims = parse_dims(dims_text.empty() ? "1" : dims_text);
    const int top = *std::max_element(dims.begin(), dims.end()) + 1;
    CliqueComplex x(triangular_graph(n), top);
    for (int k : dims) {
      if (kind == "down") check(x, k, "down", predict_triangular_Lk_down(n, k));
      else if (k == 1) {
        check(x, 1, "up", predict_triangular_L1(n));
        results.back()["note"] =
            "eigenvalue n-1 uses multiplicity n(n-2)(n-4)/3; the value n(n-2)(n-4)/2 sometimes quoted "
            "for it would not sum to the edge count";
      }
      else if (k == 2) check(x, 2, "up", predict_triangular_L2(n));
      else check(x, k, "up", predict_triangular_Lk_up(n, k));
    }
  } else if (family == "hamming") {
    auto v = parse_ints(args, 2, "hamming");
    CliqueComplex x(hamming_graph(v[0], v[1]), 2);
    check(x, 1, "up", predict_hamming(v[0], v[1]));
  } else if (family == "gq-w3") {
    const int q = parse_ints(args, 1, "gq-w3")[0];
    const std::vector<int> dims = parse_dims(dims_text.empty() ? "1" : dims_text);
    const int top = *std::max_element(dims.begin(), dims.end()) + 1;
    CliqueComplex x(gq_w3_geometry(q).graph, top);
    for (int i : dims) check(x, i, "up", predict_gq(q, q, i));
  } else if (family == "kncomplex") {
    auto v = parse_ints(args, 2, "kncomplex");
    const int n = v[0], k = v[1];
    if (n < 1 || k < 0 || k > n - 1) throw InputError("kncomplex needs 0 <= k <= n-1");
    CliqueComplex x(complete_graph(n), k);
    std::vector<int> dims;
    if (dims_text.empty())
      for (int i = 0; i <= k; ++i) dims.push_back(i);
    else
      dims = parse_dims(dims_text);
    for (int i : dims) {
      if (i > k) throw InputError("kncomplex: dimension above k");
      check(x, i, "up", predict_kn_complex(n, k, i));
    }
  } else if (family == "unique-faces") {
    // graph spec after the family, e.g. unique-faces:gen:petersen
    Graph g = resolve_graph(args);
    const std::vector<int> dims = parse_dims(dims_text.empty() ? "1" : dims_text);
    CliqueComplex x(g, *std::max_element(dims.begin(), dims.end()) + 1);
    for (int i : dims) check(x, i, "up", predict_unique_faces(x, i));
  } else {
    throw InputError("unknown verify family '" + family + "'");
  }
  Run r;
  r.report = {{"command", "verify"},      {"family", family},    {"instance", family_spec},
              {"tool_version", kToolVersion}, {"primes", opt.primes}, {"match", all},
              {"results", results}};
  r.code = all ? kOk : kMismatch;
  return r;
}

// ---- cospectral-scan -------------------------------------------------------

Run cmd_cospectral_scan(const std::string& path, int dim, bool with_complements, unsigned threads) {
  const auto lines = read_graph6_lines(path);
  std::vector<Graph> graphs;
  for (const auto& l : lines) graphs.push_back(parse_graph6(l));
  const auto primes = active_primes();
  const std::size_t n = graphs.size();
  std::vector<CharPolyFingerprint> fp(n), cfp(with_complements ? n : 0);
  std::vector<std::exception_ptr> errors(n);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        fp[i] = cospectral_fingerprint(up_laplacian(CliqueComplex(graphs[i], dim + 1), dim), primes);
        if (with_complements)
          cfp[i] = cospectral_fingerprint(up_laplacian(CliqueComplex(complement(graphs[i]), dim + 1), dim), primes);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // classes in order of first appearance; members 1-based
  auto group = [](const std::vector<std::size_t>& members, const std::vector<CharPolyFingerprint>& key) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i : members) {
      auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return key[c.front()] == key[i]; });
      if (it == classes.end()) classes.push_back({i});
      else it->push_back(i);
    }
    return classes;
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  json classes = json::array();
  for (const auto& c : group(all, fp)) {
    json members = json::array();
    for (std::size_t i : c) members.push_back(i + 1);
    json entry = {{"members", members}, {"fingerprint", to_json(fp[c.front()])}};
    if (with_complements) {
      json sub = json::array();
      for (const auto& cc : group(c, cfp)) {
        json m = json::array();
        for (std::size_t i : cc) m.push_back(i + 1);
        sub.push_back(m);
      }
      entry["complement_classes"] = sub;
    }
    classes.push_back(entry);
  }
  Run r;
  r.report = {{"command", "cospectral-scan"}, {"file", path},      {"dim", dim},
              {"with_complements", with_complements}, {"graphs", n}, {"tool_version", kToolVersion},
              {"primes", primes},               {"classes", classes}};
  return r;
}

// ---- cohomology ------------------------------------------------------------

Run cmd_cohomology(const std::string& spec, std::size_t max_len) {
  Graph g = resolve_graph(spec);
  CliqueComplex x(g, 2);
  H1Report h = h1_dimension(x, active_primes());
  CycleSearchLimits lim;
  lim.max_len = max_len;
  h.checker_verdicts = run_checkers(g, lim);
  Run r;
  json result = to_json(h);
  result["connected"] = g.is_connected();
  result["four_consecutive"] = to_json(check_four_consecutive(g, lim));
  result["conference"] = to_json(check_conference_hypothesis(g, lim));
  r.report = {{"command", "cohomology"}, {"graph", describe(spec, g)}, {"max_cycle_len", max_len},
              {"tool_version", kToolVersion}, {"primes", h.primes_used}, {"result", result}};
  return r;
}

// ---- export ----------------------------------------------------------------

IntMatrix named_matrix(const Graph& g, const std::string& name) {
  static const std::regex pat(R"(^(d|L)(-?\d+)(up|down)?$)");
  std::smatch m;
  if (!std::regex_match(name, m, pat)) throw InputError("unknown matrix '" + name + "' (use d<i>, L<i>up, L<i>down, L<i>)");
  const int i = std::stoi(m[2]);
  if (m[1] == "d") {
    if (i < -1 || !m[3].str().empty()) throw InputError("bad coboundary name '" + name + "'");
    return coboundary(CliqueComplex(g, std::max(i + 1, 0)), i);
  }
  if (i < 0) throw InputError("Laplacian index must be nonnegative");
  const std::string kind = m[3].str().empty() ? "total" : m[3].str();
  return laplacian(CliqueComplex(g, kind == "down" ? i : i + 1), i, kind);
}

Run cmd_export(const std::string& spec, const std::string& name, const std::string& out) {
  Graph g = resolve_graph(spec);
  IntMatrix m = named_matrix(g, name);
  if (out == "-") {
    write_matrix_market(std::cout, m);
  } else {
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    write_matrix_market(f, m);
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique-complex Laplacian spectra and first cohomology"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string graph_spec, family_spec, dims_text, kind = "up", format = "json", matrix, out = "-", file;
  int dim = 1;
  bool charpoly = false, with_complements = false;
  std::size_t max_len = 0;
  unsigned threads = 0;

  auto* spectrum = app.add_subcommand("spectrum", "Certified spectrum of a Laplacian");
  spectrum->add_option("graph", graph_spec, "gen:<family:args> | g6:<string> | file:<path>[@index]")->required();
  spectrum->add_option("--dim", dim, "Face dimension i")->check(CLI::NonNegativeNumber);
  spectrum->add_option("--laplacian", kind, "up | down | total")->check(CLI::IsMember({"up", "down", "total"}));
  spectrum->add_option("--format", format, "json | array")->check(CLI::IsMember({"json", "array"}));
  spectrum->add_flag("--charpoly", charpoly, "Add the factored characteristic polynomial");

  auto* verify = app.add_subcommand("verify", "Compare computed spectra with the closed forms");
  verify->add_option("family", family_spec, "triangular:n | hamming:d,a | gq-w3:q | kncomplex:n,k | unique-faces:<graph>")
      ->required();
  verify->add_option("--dim", dims_text, "Comma-separated dimensions");
  verify->add_option("--laplacian", kind, "up | down (triangular only)")->check(CLI::IsMember({"up", "down"}));

  auto* scan = app.add_subcommand("cospectral-scan", "Group graphs by L_i^up characteristic polynomial");
  scan->add_option("file", file, "graph6 file, one graph per line")->required();
  scan->add_option("--dim", dim, "Face dimension i")->check(CLI::NonNegativeNumber);
  scan->add_flag("--with-complements", with_complements, "Subdivide classes by complement fingerprints");
  scan->add_option("--threads", threads, "Worker threads (0 = hardware)");

  auto* coh = app.add_subcommand("cohomology", "dim H^1 and the sufficient-condition checkers");
  coh->add_option("graph", graph_spec, "Graph spec")->required();
  coh->add_option("--max-cycle-len", max_len, "Longest induced cycle examined (0 = order)");

  auto* exp = app.add_subcommand("export", "Write a matrix in MatrixMarket format");
  exp->add_option("graph", graph_spec, "Graph spec")->required();
  exp->add_option("--matrix", matrix, "d<i> | L<i>up | L<i>down | L<i>")->required();
  exp->add_option("--out", out, "Output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Run r;
    std::ostringstream human;
    if (*spectrum) r = cmd_spectrum(graph_spec, dim, kind, charpoly, format, human);
    else if (*verify) r = cmd_verify(family_spec, dims_text, kind);
    else if (*scan) r = cmd_cospectral_scan(file, dim, with_complements, threads);
    else if (*coh) r = cmd_cohomology(graph_spec, max_len);
    else if (*exp) {
      cmd_export(graph_spec, matrix, out);
      return kOk;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (*spectrum && format == "array") std::cout << human.str();
    else emit(r.report, ms);
    return r.code;
  } catch (const CapExceeded& e) {
    std::cerr << "error: resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
