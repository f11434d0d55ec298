#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ptriv {

// Exact multiprecision integer.
using Int = mpz_class;

// Dense matrix over Int, row-major.  Either dimension may be zero; a
// rows x 0 or 0 x cols matrix is a legitimate map to/from the zero group.
class IntegerMatrix {
 public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);
  // Convenience for literals in tests and small fixtures.
  static IntegerMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  bool is_identity() const;

  IntegerMatrix transposed() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-() const;
  bool operator==(const IntegerMatrix&) const = default;

  std::vector<Int> apply(const std::vector<Int>& v) const;  // A*v
  std::vector<Int> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<Int>& v);

  // Elementary operations (used by the Smith reduction).
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  void scale_all(const Int& q);

  // [a | b], both with the same row count.
  static IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
  // diag(a, b) as a block matrix.
  static IntegerMatrix block_diag(const IntegerMatrix& a,
                                  const IntegerMatrix& b);
  static IntegerMatrix kronecker(const IntegerMatrix& a,
                                 const IntegerMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> data_;
};

}  // namespace ptriv
