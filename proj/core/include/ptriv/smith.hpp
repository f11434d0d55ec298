#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ptriv/fin_ab_group.hpp"
#include "ptriv/integer_matrix.hpp"

namespace ptriv {

// Smith normal form u * a * v == s with u, v unimodular and s diagonal,
// s = diag(d_1, ..., d_r, 0, ...) with d_i > 0 and d_i | d_{i+1}.
// u_inv and v_inv are exact inverses, maintained alongside the reduction.
struct SmithDecomposition {
  IntegerMatrix u;      // rows x rows
  IntegerMatrix s;      // rows x cols
  IntegerMatrix v;      // cols x cols
  IntegerMatrix u_inv;
  IntegerMatrix v_inv;
  std::vector<Int> invariant_factors;  // the d_i, in divisor order

  std::size_t rank() const { return invariant_factors.size(); }
};

// Total and deterministic: pivots are chosen by minimal absolute value,
// scanning row-major, so equal inputs yield identical decompositions.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Z^rows / (column span of a), in canonical form.
FinAbGroup cokernel_group(const IntegerMatrix& a);

// Columns form a basis of { x : a x = 0 }.
IntegerMatrix kernel_basis(const SmithDecomposition& d);

// Integral solution of a x = b, if one exists.
std::optional<std::vector<Int>> solve(const SmithDecomposition& d,
                                      const std::vector<Int>& b);

// Column-wise solve a X = B; nullopt if any column has no solution.
std::optional<IntegerMatrix> solve_columns(const SmithDecomposition& d,
                                           const IntegerMatrix& b);

}  // namespace ptriv
