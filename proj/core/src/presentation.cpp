#include "ptriv/presentation.hpp"

#include <cassert>

#include "ptriv/errors.hpp"

namespace ptriv {

namespace {

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

SubquotientPresentation subquotient_presentation(
    const IntegerMatrix& numerator, const IntegerMatrix& denominator) {
  if (denominator.rows() != numerator.rows())
    throw ContainmentViolation("numerator and denominator ambient dims differ");

  SubquotientPresentation p;
  p.ambient_dim_ = numerator.rows();
  p.numerator_ = numerator;
  p.numerator_snf_ = smith_normal_form(numerator);

  auto coords = solve_columns(p.numerator_snf_, denominator);
  if (!coords)
    throw ContainmentViolation(
        "denominator subgroup is not contained in the numerator subgroup");

  // The quotient is Z^z / (denominator coordinates + numerator kernel),
  // where z counts numerator columns.  The kernel columns make the answer
  // independent of the choice of coordinates for a non-basis numerator.
  IntegerMatrix relations =
      IntegerMatrix::hstack(*coords, kernel_basis(p.numerator_snf_));
  p.relation_snf_ = smith_normal_form(relations);

  const std::size_t z = numerator.cols();
  const std::size_t rank = p.relation_snf_.rank();
  std::vector<Int> torsion;
  for (std::size_t i = 0; i < rank; ++i) {
    const Int& f = p.relation_snf_.invariant_factors[i];
    if (f > 1) {
      torsion.push_back(f);
      p.gen_rows_.push_back(i);
    }
  }
  for (std::size_t i = rank; i < z; ++i) p.gen_rows_.push_back(i);
  p.group_ = FinAbGroup(z - rank, std::move(torsion));
  return p;
}

std::vector<Int> SubquotientPresentation::generator(std::size_t i) const {
  assert(i < gen_rows_.size());
  return numerator_.apply(relation_snf_.u_inv.column(gen_rows_[i]));
}

std::vector<Int> SubquotientPresentation::classify(
    const std::vector<Int>& ambient) const {
  assert(ambient.size() == ambient_dim_);
  auto x = solve(numerator_snf_, ambient);
  if (!x)
    throw ContainmentViolation("vector lies outside the numerator subgroup");
  std::vector<Int> y = relation_snf_.u.apply(*x);
  const std::size_t rank = relation_snf_.rank();
  std::vector<Int> out;
  out.reserve(gen_rows_.size());
  for (std::size_t row : gen_rows_) {
    if (row < rank)
      out.push_back(mod_floor(y[row], relation_snf_.invariant_factors[row]));
    else
      out.push_back(y[row]);
  }
  return out;
}

}  // namespace ptriv
