#include "ptriv/smith.hpp"

#include <cassert>

namespace ptriv {

namespace {

// Applies elementary operations to s while keeping u*a*v == s and the
// inverse transforms exact.
struct Reducer {
  IntegerMatrix s, u, v, ui, vi;

  explicit Reducer(const IntegerMatrix& a)
      : s(a),
        u(IntegerMatrix::identity(a.rows())),
        v(IntegerMatrix::identity(a.cols())),
        ui(IntegerMatrix::identity(a.rows())),
        vi(IntegerMatrix::identity(a.cols())) {}

  void row_swap(std::size_t i, std::size_t j) {
    s.swap_rows(i, j);
    u.swap_rows(i, j);
    ui.swap_cols(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    s.swap_cols(i, j);
    v.swap_cols(i, j);
    vi.swap_rows(i, j);
  }
  // row dst += q * row src
  void row_axpy(std::size_t dst, std::size_t src, const Int& q) {
    s.add_row_multiple(dst, src, q);
    u.add_row_multiple(dst, src, q);
    ui.add_col_multiple(src, dst, -q);
  }
  // col dst += q * col src
  void col_axpy(std::size_t dst, std::size_t src, const Int& q) {
    s.add_col_multiple(dst, src, q);
    v.add_col_multiple(dst, src, q);
    vi.add_row_multiple(src, dst, -q);
  }
  void row_negate(std::size_t i) {
    s.negate_row(i);
    u.negate_row(i);
    ui.negate_col(i);
  }
};

// Quotient with balanced remainder: |a - q*b| <= |b| / 2.  Halving the
// remainder each pass keeps pivot descent short and entry growth down.
Int balanced_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int r2 = r * 2;
  if (mpz_cmpabs(r2.get_mpz_t(), b.get_mpz_t()) > 0) {
    q += (sgn(r) == sgn(b)) ? 1 : -1;
  }
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Reducer r(a);

  const std::size_t steps = std::min(m, n);
  std::size_t t = 0;
  while (t < steps) {
    // Pivot: minimal nonzero absolute value in the remaining submatrix,
    // first occurrence in row-major order.
    bool found = false;
    std::size_t pi = 0, pj = 0;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (r.s.at(i, j) == 0) continue;
        Int av = abs(r.s.at(i, j));
        if (!found || av < best) {
          found = true;
          best = av;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;  // submatrix is zero, trailing diagonal stays 0
    r.row_swap(t, pi);
    r.col_swap(t, pj);

    for (;;) {
      // Reduce the pivot column to balanced remainders.  Every remainder
      // is at most half the pivot, so re-pivoting terminates quickly.
      for (std::size_t i = t + 1; i < m; ++i) {
        if (r.s.at(i, t) == 0) continue;
        Int q = balanced_quotient(r.s.at(i, t), r.s.at(t, t));
        if (q != 0) r.row_axpy(i, t, -q);
      }
      bool col_clean = true;
      for (std::size_t i = t + 1; i < m && col_clean; ++i)
        if (r.s.at(i, t) != 0) col_clean = false;
      // Only touch the columns once the pivot column is clean: column
      // operations then cause no fill-in below row t, which is what keeps
      // intermediate entries from compounding.
      bool row_clean = col_clean;
      if (col_clean) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (r.s.at(t, j) == 0) continue;
          Int q = balanced_quotient(r.s.at(t, j), r.s.at(t, t));
          if (q != 0) r.col_axpy(j, t, -q);
        }
        for (std::size_t j = t + 1; j < n && row_clean; ++j)
          if (r.s.at(t, j) != 0) row_clean = false;
      }
      if (!col_clean || !row_clean) {
        // Bring the smallest remaining entry up as the new pivot; it is
        // strictly smaller than the current pivot.
        bool f2 = false;
        std::size_t qi = t, qj = t;
        Int b2;
        for (std::size_t i = t; i < m; ++i)
          for (std::size_t j = t; j < n; ++j) {
            if (r.s.at(i, j) == 0) continue;
            Int av = abs(r.s.at(i, j));
            if (!f2 || av < b2) {
              f2 = true;
              b2 = av;
              qi = i;
              qj = j;
            }
          }
        r.row_swap(t, qi);
        r.col_swap(t, qj);
        continue;
      }
      // Pivot must divide the whole remaining submatrix, otherwise the
      // diagonal would not form a divisor chain.
      bool offender = false;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n && !offender; ++j)
          if (r.s.at(i, j) % r.s.at(t, t) != 0) {
            r.row_axpy(t, i, 1);
            offender = true;
          }
      if (!offender) break;
    }
    if (r.s.at(t, t) < 0) r.row_negate(t);
    ++t;
  }

  SmithDecomposition d;
  d.invariant_factors.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    assert(r.s.at(i, i) > 0);
    assert(i == 0 || r.s.at(i, i) % r.s.at(i - 1, i - 1) == 0);
    d.invariant_factors.push_back(r.s.at(i, i));
  }
  d.u = std::move(r.u);
  d.s = std::move(r.s);
  d.v = std::move(r.v);
  d.u_inv = std::move(r.ui);
  d.v_inv = std::move(r.vi);
  return d;
}

FinAbGroup cokernel_group(const IntegerMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  return FinAbGroup::from_cyclic_orders(a.rows() - d.rank(),
                                        d.invariant_factors);
}

IntegerMatrix kernel_basis(const SmithDecomposition& d) {
  const std::size_t n = d.v.rows();
  const std::size_t r = d.rank();
  IntegerMatrix k(n, n - r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) k.at(i, j - r) = d.v.at(i, j);
  return k;
}

std::optional<std::vector<Int>> solve(const SmithDecomposition& d,
                                      const std::vector<Int>& b) {
  const std::size_t m = d.u.rows();
  const std::size_t n = d.v.rows();
  const std::size_t r = d.rank();
  assert(b.size() == m);
  std::vector<Int> c = d.u.apply(b);
  std::vector<Int> y(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < r) {
      if (c[i] % d.invariant_factors[i] != 0) return std::nullopt;
      y[i] = c[i] / d.invariant_factors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return d.v.apply(y);
}

std::optional<IntegerMatrix> solve_columns(const SmithDecomposition& d,
                                           const IntegerMatrix& b) {
  assert(b.rows() == d.u.rows());
  IntegerMatrix x(d.v.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = solve(d, b.column(j));
    if (!col) return std::nullopt;
    x.set_column(j, *col);
  }
  return x;
}

}  // namespace ptriv
