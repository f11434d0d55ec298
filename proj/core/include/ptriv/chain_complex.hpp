#pragma once

#include <map>
#include <string>

#include "ptriv/fin_ab_group.hpp"
#include "ptriv/integer_matrix.hpp"

namespace ptriv {

// Coefficient ring selector: the integers, or Z/q for q >= 2.
struct Coefficients {
  long modulus = 0;  // 0 encodes Z

  static Coefficients integers() { return {}; }
  static Coefficients mod(long q);

  bool is_integers() const { return modulus == 0; }
  bool operator==(const Coefficients&) const = default;
  std::string to_string() const;  // "Z", "Z2", "Z4", ...
};

// Bounded complex of free abelian groups.  rank(j) is the number of basis
// cells in degree j; boundary(j) is the matrix of d_j : C_j -> C_{j-1},
// with shape rank(j-1) x rank(j).  Degrees never touched have rank zero,
// and their boundaries are the unique maps to/from the zero group.
class ChainComplex {
 public:
  void set_rank(int degree, std::size_t rank);
  void set_boundary(int degree, IntegerMatrix d);

  std::size_t rank(int degree) const;
  IntegerMatrix boundary(int degree) const;  // zero matrix when unset

  // Degrees with nonzero rank, ascending.
  const std::map<int, std::size_t>& ranks() const { return ranks_; }
  // Degrees with an explicitly stored (nonzero) boundary matrix.
  std::vector<int> boundary_degrees() const;
  bool empty() const { return ranks_.empty(); }
  int lowest_degree() const;  // 0 when empty
  int top_degree() const;     // 0 when empty

 private:
  std::map<int, std::size_t> ranks_;
  std::map<int, IntegerMatrix> boundaries_;
};

// Shape and d*d == 0 checks; throws NotAComplexError carrying the upper
// degree of the first failing square (scanning degrees in ascending order).
void validate(const ChainComplex& c);

GradedGroup homology(const ChainComplex& c, const Coefficients& coeff);
// Computed from the transposed boundaries (the cochain complex), not by
// dualizing the homology answer, so the two functions cross-check each
// other through universal coefficients.
GradedGroup cohomology(const ChainComplex& c, const Coefficients& coeff);

// True when degree 0 is a single basepoint cell: rank(0) == 1, nothing in
// negative degrees, d_1 == 0.
bool is_based(const ChainComplex& c);

// Degree shift by k >= 1 keeping one basepoint cell; throws NotBasedError
// when !is_based(c), BadRangeError when k < 1.
ChainComplex suspend(const ChainComplex& c, int k);

// One-point union: basepoint cells identified, positive degrees summed
// (cells of a first, then cells of b).  Both inputs must be based.
ChainComplex wedge(const ChainComplex& a, const ChainComplex& b);

// Tensor product with the usual sign: d(x (x) y) = dx (x) y + (-1)^i x (x) dy
// for x in degree i.  Cells in degree n are ordered by ascending a-degree,
// then row-major within each block.
ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b);

long euler_characteristic(const ChainComplex& c);

ChainComplex point_complex();
ChainComplex sphere_complex(int n);  // n >= 1

}  // namespace ptriv
