#pragma once

#include <vector>

#include "ptriv/chain_complex.hpp"
#include "ptriv/fin_ab_group.hpp"
#include "ptriv/integer_matrix.hpp"
#include "ptriv/smith.hpp"

namespace ptriv {

// Quotient of two subgroups of a fixed ambient lattice Z^r, presented with
// explicit generators.  Built from column generating sets Z (numerator) and
// B (denominator, required to lie inside Z).  Canonical generators come in
// SNF order: torsion generators first (orders ascending), free ones after;
// this matches FinAbGroup::generator_count indexing.
class SubquotientPresentation {
 public:
  const FinAbGroup& group() const { return group_; }
  std::size_t ambient_dim() const { return ambient_dim_; }

  // Ambient representative of canonical generator i.
  std::vector<Int> generator(std::size_t i) const;

  // Coordinates of an ambient vector (which must lie in the numerator
  // subgroup, else ContainmentViolation) with respect to the canonical
  // generators.  Torsion coordinates are reduced into [0, order).
  std::vector<Int> classify(const std::vector<Int>& ambient) const;

 private:
  friend SubquotientPresentation subquotient_presentation(
      const IntegerMatrix& numerator, const IntegerMatrix& denominator);

  FinAbGroup group_;
  std::size_t ambient_dim_ = 0;
  IntegerMatrix numerator_;            // r x z
  SmithDecomposition numerator_snf_;   // for membership solves
  SmithDecomposition relation_snf_;    // of [Q | ker numerator], z x *
  std::vector<std::size_t> gen_rows_;  // rows of relation SNF kept as gens
};

// numerator and denominator are column generating sets in Z^r (not
// necessarily bases); throws ContainmentViolation unless the denominator
// columns lie in the span of the numerator columns.
SubquotientPresentation subquotient_presentation(
    const IntegerMatrix& numerator, const IntegerMatrix& denominator);

}  // namespace ptriv
