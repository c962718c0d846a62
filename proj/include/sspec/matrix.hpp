#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace sspec {

/// Sparse integer matrix in compressed-row form. Rows and columns can carry
/// the face dimension of the index space they refer to (row_dim/col_dim).
class IntMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    std::int64_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  struct Triplet {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
  };

  IntMatrix() : row_ptr_(1, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  /// Duplicate (row, col) pairs are summed; zero results are dropped.
  static IntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  static IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }

  std::span<const Entry> row(std::size_t r) const noexcept {
    return {entries_.data() + row_ptr_[r], entries_.data() + row_ptr_[r + 1]};
  }
  std::int64_t at(std::size_t r, std::size_t c) const;

  IntMatrix transpose() const;
  /// M - shift * I (square only).
  IntMatrix shifted(std::int64_t shift) const;
  std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;
  std::vector<std::vector<std::int64_t>> to_dense() const;

  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const noexcept { return entries_.empty(); }
  /// Max absolute row sum; bounds the spectral radius.
  std::int64_t inf_norm() const;
  std::int64_t trace() const;

  std::optional<int> row_dim;
  std::optional<int> col_dim;

  IntMatrix& tag(std::optional<int> rdim, std::optional<int> cdim) {
    row_dim = rdim;
    col_dim = cdim;
    return *this;
  }

  /// Equality of shape and entries; tags are ignored.
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ptr_ == b.row_ptr_ &&
           a.entries_ == b.entries_;
  }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<Entry> entries_;
};

/// MatrixMarket "coordinate integer general", 1-based. Face-dimension tags are
/// written as "% row_dim" / "% col_dim" comments and restored on read.
void write_matrix_market(std::ostream& os, const IntMatrix& m);
IntMatrix read_matrix_market(std::istream& is);

}  // namespace sspec
