#include "ptriv/integer_matrix.hpp"

#include <cassert>
#include <sstream>

namespace ptriv {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntegerMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    assert(row.size() == c);
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

bool IntegerMatrix::is_zero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntegerMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  assert(cols_ == rhs.rows_);
  IntegerMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntegerMatrix IntegerMatrix::operator-() const {
  IntegerMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& v) const {
  assert(v.size() == cols_);
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<Int> IntegerMatrix::column(std::size_t j) const {
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

void IntegerMatrix::set_column(std::size_t j, const std::vector<Int>& v) {
  assert(v.size() == rows_);
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap(data_[i * cols_ + k], data_[j * cols_ + k]);
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k)
    std::swap(data_[k * cols_ + i], data_[k * cols_ + j]);
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                     const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += q * at(src, k);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                     const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += q * at(k, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntegerMatrix::scale_all(const Int& q) {
  for (Int& v : data_) v *= q;
}

IntegerMatrix IntegerMatrix::hstack(const IntegerMatrix& a,
                                    const IntegerMatrix& b) {
  assert(a.rows() == b.rows());
  IntegerMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

IntegerMatrix IntegerMatrix::block_diag(const IntegerMatrix& a,
                                        const IntegerMatrix& b) {
  IntegerMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

IntegerMatrix IntegerMatrix::kronecker(const IntegerMatrix& a,
                                       const IntegerMatrix& b) {
  IntegerMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " [";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

}  // namespace ptriv
