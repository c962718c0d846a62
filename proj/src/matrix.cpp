#include "sspec/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sspec/errors.hpp"

namespace sspec {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("IntMatrix: int64 overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("IntMatrix: int64 overflow");
  return r;
}

}  // namespace

IntMatrix IntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> ts) {
  for (auto& t : ts)
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("IntMatrix: triplet out of range");
  std::sort(ts.begin(), ts.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  IntMatrix m(rows, cols);
  std::size_t i = 0;
  while (i < ts.size()) {
    std::size_t j = i;
    std::int64_t sum = 0;
    while (j < ts.size() && ts[j].row == ts[i].row && ts[j].col == ts[i].col)
      sum = checked_add(sum, ts[j++].value);
    if (sum != 0) {
      m.entries_.push_back({static_cast<std::uint32_t>(ts[i].col), sum});
      ++m.row_ptr_[ts[i].row + 1];
    }
    i = j;
  }
  for (std::size_t r = 0; r < rows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows[0].size() : 0;
  std::vector<Triplet> ts;
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("IntMatrix: ragged dense input");
    for (std::size_t c = 0; c < nc; ++c)
      if (rows[r][c]) ts.push_back({r, c, rows[r][c]});
  }
  return from_triplets(nr, nc, std::move(ts));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  std::vector<Triplet> ts;
  for (std::size_t i = 0; i < n; ++i) ts.push_back({i, i, 1});
  return from_triplets(n, n, std::move(ts));
}

std::int64_t IntMatrix::at(std::size_t r, std::size_t c) const {
  auto rw = row(r);
  auto it = std::lower_bound(rw.begin(), rw.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  return (it != rw.end() && it->col == c) ? it->value : 0;
}

IntMatrix IntMatrix::transpose() const {
  std::vector<Triplet> ts;
  ts.reserve(nnz());
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto e : row(r)) ts.push_back({e.col, r, e.value});
  auto t = from_triplets(cols_, rows_, std::move(ts));
  return t.tag(col_dim, row_dim);
}

IntMatrix IntMatrix::shifted(std::int64_t shift) const {
  if (!is_square()) throw std::invalid_argument("IntMatrix: shift of non-square matrix");
  std::vector<Triplet> ts;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (auto e : row(r)) ts.push_back({r, e.col, e.value});
    ts.push_back({r, r, -shift});
  }
  auto m = from_triplets(rows_, cols_, std::move(ts));
  return m.tag(row_dim, col_dim);
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
  std::vector<std::int64_t> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto e : row(r)) y[r] = checked_add(y[r], checked_mul(e.value, x[e.col]));
  return y;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> d(rows_, std::vector<std::int64_t>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto e : row(r)) d[r][e.col] = e.value;
  return d;
}

bool IntMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

std::int64_t IntMatrix::inf_norm() const {
  std::int64_t best = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t s = 0;
    for (auto e : row(r)) s = checked_add(s, e.value < 0 ? -e.value : e.value);
    best = std::max(best, s);
  }
  return best;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t r = 0; r < std::min(rows_, cols_); ++r) t = checked_add(t, at(r, r));
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
  std::vector<IntMatrix::Triplet> ts;
  std::vector<std::int64_t> acc(b.cols_, 0);
  std::vector<std::uint32_t> touched;
  std::vector<bool> mark(b.cols_, false);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (auto ea : a.row(r))
      for (auto eb : b.row(ea.col)) {
        if (!mark[eb.col]) {
          mark[eb.col] = true;
          touched.push_back(eb.col);
        }
        acc[eb.col] = checked_add(acc[eb.col], checked_mul(ea.value, eb.value));
      }
    for (auto c : touched) {
      if (acc[c]) ts.push_back({r, c, acc[c]});
      acc[c] = 0;
      mark[c] = false;
    }
    touched.clear();
  }
  auto m = IntMatrix::from_triplets(a.rows_, b.cols_, std::move(ts));
  return m.tag(a.row_dim, b.col_dim);
}

namespace {

IntMatrix combine(const IntMatrix& a, const IntMatrix& b, std::int64_t sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("IntMatrix: sum shape mismatch");
  std::vector<IntMatrix::Triplet> ts;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (auto e : a.row(r)) ts.push_back({r, e.col, e.value});
    for (auto e : b.row(r)) ts.push_back({r, e.col, sign * e.value});
  }
  auto m = IntMatrix::from_triplets(a.rows(), a.cols(), std::move(ts));
  return m.tag(a.row_dim, a.col_dim);
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) { return combine(a, b, 1); }
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return combine(a, b, -1); }

void write_matrix_market(std::ostream& os, const IntMatrix& m) {
  os << "%%MatrixMarket matrix coordinate integer general\n";
  if (m.row_dim) os << "% row_dim " << *m.row_dim << "\n";
  if (m.col_dim) os << "% col_dim " << *m.col_dim << "\n";
  os << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto e : m.row(r)) os << r + 1 << " " << e.col + 1 << " " << e.value << "\n";
}

IntMatrix read_matrix_market(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("%%MatrixMarket matrix coordinate integer general", 0) != 0)
    throw InputError("MatrixMarket: expected 'coordinate integer general' header");
  std::optional<int> rdim, cdim;
  while (std::getline(is, line) && !line.empty() && line[0] == '%') {
    std::istringstream ss(line.substr(1));
    std::string key;
    int v = 0;
    if (ss >> key >> v) {
      if (key == "row_dim") rdim = v;
      if (key == "col_dim") cdim = v;
    }
  }
  std::istringstream head(line);
  std::size_t nr = 0, nc = 0, nz = 0;
  if (!(head >> nr >> nc >> nz)) throw InputError("MatrixMarket: bad size line");
  std::vector<IntMatrix::Triplet> ts;
  for (std::size_t k = 0; k < nz; ++k) {
    std::size_t r = 0, c = 0;
    std::int64_t v = 0;
    if (!(is >> r >> c >> v) || r == 0 || c == 0 || r > nr || c > nc)
      throw InputError("MatrixMarket: bad entry " + std::to_string(k + 1));
    ts.push_back({r - 1, c - 1, v});
  }
  auto m = IntMatrix::from_triplets(nr, nc, std::move(ts));
  return m.tag(rdim, cdim);
}

}  // namespace sspec
