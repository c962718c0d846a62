#include "sspec/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "sspec/errors.hpp"

namespace sspec {

IntMatrix up_laplacian(const CliqueComplex& x, int i) {
  IntMatrix d = coboundary(x, i);
  return (d.transpose() * d).tag(i, i);
}

IntMatrix down_laplacian(const CliqueComplex& x, int i) {
  IntMatrix d = coboundary(x, i - 1);
  return (d * d.transpose()).tag(i, i);
}

IntMatrix total_laplacian(const CliqueComplex& x, int i) {
  return (up_laplacian(x, i) + down_laplacian(x, i)).tag(i, i);
}

std::vector<double> numeric_spectrum(const IntMatrix& m) {
  if (!m.is_symmetric()) throw InputError("numeric_spectrum: matrix is not symmetric");
  const auto n = static_cast<Eigen::Index>(m.rows());
  if (n == 0) return {};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto e : m.row(r))
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(e.col)) = static_cast<double>(e.value);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw VerificationError("numeric_spectrum: eigensolver failed");
  const auto& ev = es.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

CharPolyFingerprint cospectral_fingerprint(const IntMatrix& m, const std::vector<std::uint64_t>& primes) {
  CharPolyFingerprint fp;
  fp.degree = m.rows();
  for (auto p : primes) fp.evaluations.emplace_back(p, charpoly_mod_p(m, p));
  return fp;
}

std::map<std::int64_t, std::size_t> SpectrumSummary::multiset() const {
  std::map<std::int64_t, std::size_t> out;
  for (auto& e : integer_eigs)
    if (e.multiplicity) out[e.value] = e.multiplicity;
  return out;
}

bool SpectrumSummary::same_spectrum(const SpectrumSummary& other) const {
  return size == other.size && multiset() == other.multiset() &&
         residual_degree == other.residual_degree && residual == other.residual;
}

namespace {

// Nullity of (M - lambda I) agreed by two primes. Mod-p nullity can only
// overshoot the rational one, so the first repeated value is accepted.
std::size_t agreed_nullity(const IntMatrix& m, std::int64_t lambda, const std::vector<std::uint64_t>& primes,
                           std::vector<std::uint64_t>& extra_used) {
  std::vector<std::uint64_t> pool = primes;
  if (pool.size() < 4) {
    auto more = primes_below(*std::min_element(pool.begin(), pool.end()), 4 - pool.size());
    pool.insert(pool.end(), more.begin(), more.end());
  }
  std::vector<std::size_t> seen;
  for (std::size_t k = 0; k < 4; ++k) {
    std::size_t v = nullity_mod_p(m, lambda, pool[k]);
    if (k >= primes.size() && std::find(extra_used.begin(), extra_used.end(), pool[k]) == extra_used.end())
      extra_used.push_back(pool[k]);
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) return v;
    seen.push_back(v);
  }
  throw VerificationError("certified_spectrum: nullity of M - " + std::to_string(lambda) +
                          "I disagrees across four primes");
}

}  // namespace

SpectrumSummary certified_spectrum(const IntMatrix& m, const SpectrumOptions& opt) {
  if (opt.primes.size() < 2) throw InputError("certified_spectrum: need at least two primes");
  SpectrumSummary s;
  s.size = m.rows();
  s.float_eigs = numeric_spectrum(m);  // also validates symmetry

  const std::int64_t norm = m.inf_norm();
  const double tol = opt.snap_tolerance * std::max<double>(1.0, static_cast<double>(norm));
  std::set<std::int64_t> candidates;
  for (double v : s.float_eigs) {
    double r = std::round(v);
    if (std::abs(v - r) <= tol) candidates.insert(static_cast<std::int64_t>(r));
  }

  std::map<std::int64_t, std::size_t> mult;
  auto certify = [&](std::int64_t lambda) {
    if (mult.count(lambda)) return;
    mult[lambda] = agreed_nullity(m, lambda, opt.primes, s.primes_used);
  };
  for (auto c : candidates) certify(c);

  // Charpoly per prime, divided by the certified integer factors.
  std::vector<ModPoly> charpolys;
  for (auto p : opt.primes) charpolys.push_back(charpoly_mod_p(m, p));

  auto residuals = [&]() {
    std::vector<ModPoly> res;
    for (std::size_t k = 0; k < opt.primes.size(); ++k) {
      ModPoly f = charpolys[k];
      for (auto [lambda, mu] : mult)
        if (mu && !poly_divide_root(f, lambda, mu, opt.primes[k]))
          throw VerificationError("certified_spectrum: charpoly not divisible by (x - " +
                                  std::to_string(lambda) + ")^" + std::to_string(mu));
      res.push_back(std::move(f));
    }
    return res;
  };
  auto res = residuals();

  // Completeness sweep: any integer eigenvalue missed by the numeric snap is a
  // root of the residual modulo every prime.
  bool added = false;
  for (std::int64_t r = -norm; r <= norm; ++r) {
    if (res[0].size() < 2) break;
    if (poly_eval(res[0], r, opt.primes[0]) != 0) continue;
    if (mult.count(r) && mult[r] > 0) continue;
    std::size_t mu = agreed_nullity(m, r, opt.primes, s.primes_used);
    if (mu) {
      mult[r] = mu;
      added = true;
    }
  }
  if (added) res = residuals();

  for (auto [lambda, mu] : mult)
    if (mu) s.integer_eigs.push_back({lambda, mu, true});
  std::size_t total = 0;
  for (auto& e : s.integer_eigs) total += e.multiplicity;
  s.residual_degree = s.size - total;
  s.residual.degree = s.residual_degree;
  for (std::size_t k = 0; k < opt.primes.size(); ++k) {
    if (res[k].size() != s.residual_degree + 1)
      throw VerificationError("certified_spectrum: residual degree mismatch across primes");
    s.residual.evaluations.emplace_back(opt.primes[k], std::move(res[k]));
  }
  return s;
}

std::string format_spectrum_array(const SpectrumSummary& s) {
  std::vector<std::string> top, bottom;
  for (auto it = s.integer_eigs.rbegin(); it != s.integer_eigs.rend(); ++it) {
    top.push_back(std::to_string(it->value));
    bottom.push_back(std::to_string(it->multiplicity));
  }
  std::ostringstream os;
  auto row = [&](const std::vector<std::string>& cells, const std::vector<std::string>& other) {
    os << "( ";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::size_t w = std::max(cells[i].size(), other[i].size());
      os << std::string(w - cells[i].size(), ' ') << cells[i] << " ";
    }
    os << ")\n";
  };
  row(top, bottom);
  row(bottom, top);
  if (s.residual_degree)
    os << "+ non-integer part of degree " << s.residual_degree << " (residual fingerprint)\n";
  return os.str();
}

}  // namespace sspec
