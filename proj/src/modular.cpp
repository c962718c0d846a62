#include "sspec/modular.hpp"

#include <charconv>
#include <string>

#include "sspec/errors.hpp"

namespace sspec {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

void require_field(u64 p) {
  if (p <= 2 || p >= (u64{1} << 32) || !is_prime(p))
    throw InputError("modulus " + std::to_string(p) + " is not an odd prime below 2^32");
}

// Dense row-major matrix over GF(p); entries < p < 2^32 so products fit in u64.
struct ModDense {
  std::size_t rows, cols;
  u64 p;
  std::vector<u64> a;

  ModDense(const IntMatrix& m, u64 p_, std::int64_t shift = 0, bool transpose = false)
      : rows(transpose ? m.cols() : m.rows()), cols(transpose ? m.rows() : m.cols()), p(p_),
        a(rows * cols, 0) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (auto e : m.row(r)) {
        std::size_t i = transpose ? e.col : r, j = transpose ? r : e.col;
        a[i * cols + j] = reduce_mod(e.value, p);
      }
    if (shift) {
      u64 s = reduce_mod(shift, p);
      for (std::size_t i = 0; i < std::min(rows, cols); ++i)
        a[i * cols + i] = (a[i * cols + i] + p - s) % p;
    }
  }

  u64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

  // Row echelon form in place; returns the rank.
  std::size_t eliminate() {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t piv = rank;
      while (piv < rows && at(piv, c) == 0) ++piv;
      if (piv == rows) continue;
      if (piv != rank)
        for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
      u64 inv = inverse_mod(at(rank, c), p);
      for (std::size_t j = c; j < cols; ++j) at(rank, j) = at(rank, j) * inv % p;
      const u64* prow = &a[rank * cols];
      for (std::size_t i = rank + 1; i < rows; ++i) {
        u64 f = at(i, c);
        if (!f) continue;
        u64* row = &a[i * cols];
        u64 nf = p - f;
        for (std::size_t j = c; j < cols; ++j) row[j] = (row[j] + nf * prow[j]) % p;
      }
      ++rank;
    }
    return rank;
  }
};

}  // namespace

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = mul_mod64(r, base, p);
    base = mul_mod64(base, base, p);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 inverse_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

u64 reduce_mod(std::int64_t v, u64 p) {
  auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  return static_cast<u64>(r < 0 ? r + sp : r);
}

const std::vector<u64>& default_primes() {
  static const std::vector<u64> primes = {2147483647ULL, 2147483629ULL, 2147483587ULL};
  return primes;
}

std::vector<u64> primes_below(u64 below, std::size_t count) {
  std::vector<u64> out;
  for (u64 c = below - 1; out.size() < count && c > 2; --c)
    if (is_prime(c)) out.push_back(c);
  return out;
}

std::vector<u64> parse_prime_list(std::string_view text) {
  std::vector<u64> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InputError("prime list: bad entry '" + std::string(tok) + "'");
    if (v <= (u64{1} << 16) || v >= (u64{1} << 32) || !is_prime(v))
      throw InputError("prime list: " + std::to_string(v) + " is not a prime in (2^16, 2^32)");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() < 2) throw InputError("prime list: need at least two primes");
  return out;
}

std::size_t rank_mod_p(const IntMatrix& m, u64 p, bool as_given) {
  require_field(p);
  // eliminate along the shorter dimension to keep the pivot loop small
  ModDense d(m, p, 0, !as_given && m.rows() > m.cols());
  return d.eliminate();
}

std::size_t nullity_mod_p(const IntMatrix& m, std::int64_t shift, u64 p) {
  require_field(p);
  if (!m.is_square()) throw InputError("nullity_mod_p: matrix is not square");
  ModDense d(m, p, shift);
  return m.cols() - d.eliminate();
}

ModPoly charpoly_mod_p(const IntMatrix& m, u64 p) {
  require_field(p);
  if (!m.is_square()) throw InputError("charpoly_mod_p: matrix is not square");
  const std::size_t n = m.rows();
  if (p <= n) throw InputError("charpoly_mod_p: prime must exceed the matrix order");
  ModDense h(m, p);

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h.at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h.at(piv, k), h.at(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h.at(k, piv), h.at(k, j + 1));
    }
    u64 inv = inverse_mod(h.at(j + 1, j), p);
    for (std::size_t i = j + 2; i < n; ++i) {
      u64 u = h.at(i, j) * inv % p;
      if (!u) continue;
      for (std::size_t k = 0; k < n; ++k) h.at(i, k) = (h.at(i, k) + (p - u) * h.at(j + 1, k)) % p;
      for (std::size_t k = 0; k < n; ++k) h.at(k, j + 1) = (h.at(k, j + 1) + u * h.at(k, i)) % p;
    }
  }

  // Three-term recurrence on leading principal submatrices:
  // P_m = (x - h_mm) P_{m-1} - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) P_{i-1}.
  std::vector<ModPoly> P(n + 1);
  P[0] = {1};
  for (std::size_t m1 = 1; m1 <= n; ++m1) {
    const std::size_t mi = m1 - 1;  // 0-based index of the new row/column
    ModPoly cur(m1 + 1, 0);
    for (std::size_t k = 0; k < P[m1 - 1].size(); ++k) {
      cur[k + 1] = (cur[k + 1] + P[m1 - 1][k]) % p;
      cur[k] = (cur[k] + (p - h.at(mi, mi)) * P[m1 - 1][k]) % p;
    }
    u64 t = 1;
    for (std::size_t i = mi; i-- > 0;) {
      t = t * h.at(i + 1, i) % p;
      if (!t) break;
      u64 c = t * h.at(i, mi) % p;
      if (!c) continue;
      for (std::size_t k = 0; k < P[i].size(); ++k) cur[k] = (cur[k] + (p - c) * P[i][k]) % p;
    }
    P[m1] = std::move(cur);
  }
  return P[n];
}

u64 poly_eval(const ModPoly& f, std::int64_t x, u64 p) {
  u64 xv = reduce_mod(x, p), r = 0;
  for (std::size_t k = f.size(); k-- > 0;) r = (r * xv + f[k]) % p;
  return r;
}

bool poly_divide_root(ModPoly& f, std::int64_t root, std::size_t mult, u64 p) {
  const u64 r = reduce_mod(root, p);
  for (std::size_t t = 0; t < mult; ++t) {
    if (f.size() < 2) return false;
    // synthetic division by (x - r)
    const std::size_t d = f.size() - 1;
    ModPoly q(d, 0);
    u64 carry = 0;
    for (std::size_t k = d; k-- > 0;) {
      carry = (f[k + 1] + carry * r) % p;
      q[k] = carry;
    }
    u64 rem = (f[0] + carry * r) % p;
    if (rem != 0) return false;
    f = std::move(q);
  }
  return true;
}

ModPoly poly_mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

ModPoly poly_pow(const ModPoly& a, std::size_t e, u64 p) {
  ModPoly r = {1};
  for (std::size_t i = 0; i < e; ++i) r = poly_mul(r, a, p);
  return r;
}

ModPoly poly_from_roots(const std::vector<std::pair<std::int64_t, std::size_t>>& roots, u64 p) {
  ModPoly r = {1};
  for (auto [root, mult] : roots) r = poly_mul(r, poly_pow({(p - reduce_mod(root, p)) % p, 1}, mult, p), p);
  return r;
}

ModPoly poly_from_integers(const std::vector<std::int64_t>& coeffs, u64 p) {
  ModPoly r;
  for (auto c : coeffs) r.push_back(reduce_mod(c, p));
  return r;
}

}  // namespace sspec
