#include "ptriv/induced_maps.hpp"

#include <cassert>
#include <functional>

#include "ptriv/errors.hpp"
#include "ptriv/smith.hpp"

namespace ptriv {

namespace {

bool subgroup_contains(const IntegerMatrix& sup, const IntegerMatrix& sub) {
  return solve_columns(smith_normal_form(sup), sub).has_value();
}

// Column generators, in source-generator coordinates, of the full preimage
// of zero under the presented map (m, target).
IntegerMatrix kernel_generators(const IntegerMatrix& m,
                                const FinAbGroup& target) {
  IntegerMatrix stacked =
      IntegerMatrix::hstack(m, target.relation_matrix());
  IntegerMatrix k = kernel_basis(smith_normal_form(stacked));
  IntegerMatrix out(m.cols(), k.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out.at(i, j) = k.at(i, j);
  return out;
}

PresentedMap make_presented_map(const FinAbGroup& source,
                                const FinAbGroup& target, IntegerMatrix m) {
  PresentedMap out{source, target, std::move(m), false, false};
  IntegerMatrix ker = kernel_generators(out.matrix, target);
  out.injective = subgroup_contains(source.relation_matrix(), ker);
  out.surjective =
      cokernel_group(IntegerMatrix::hstack(out.matrix,
                                           target.relation_matrix()))
          .trivial();
  return out;
}

PresentedMap map_from_generators(
    const SubquotientPresentation& src, const SubquotientPresentation& tgt,
    const std::function<std::vector<Int>(const std::vector<Int>&)>& push) {
  IntegerMatrix m(tgt.group().generator_count(),
                  src.group().generator_count());
  for (std::size_t i = 0; i < m.cols(); ++i)
    m.set_column(i, tgt.classify(push(src.generator(i))));
  return make_presented_map(src.group(), tgt.group(), std::move(m));
}

}  // namespace

SubquotientPresentation cohomology_presentation(const ChainComplex& c,
                                                int degree,
                                                const Coefficients& coeff) {
  const std::size_t r = c.rank(degree);
  IntegerMatrix delta_up = c.boundary(degree + 1).transposed();
  IntegerMatrix delta_down = c.boundary(degree).transposed();

  if (coeff.is_integers()) {
    IntegerMatrix cocycles = kernel_basis(smith_normal_form(delta_up));
    return subquotient_presentation(cocycles, delta_down);
  }

  Int q(coeff.modulus);
  // x is a mod-q cocycle iff delta_up * x + q * w == 0 for some w.
  IntegerMatrix q_up = IntegerMatrix::identity(delta_up.rows());
  q_up.scale_all(q);
  IntegerMatrix k =
      kernel_basis(smith_normal_form(IntegerMatrix::hstack(delta_up, q_up)));
  IntegerMatrix cocycles(r, k.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) cocycles.at(i, j) = k.at(i, j);

  IntegerMatrix q_amb = IntegerMatrix::identity(r);
  q_amb.scale_all(q);
  IntegerMatrix denominator = IntegerMatrix::hstack(delta_down, q_amb);
  return subquotient_presentation(cocycles, denominator);
}

PresentedMap reduction_map(const SubquotientPresentation& integral,
                           const SubquotientPresentation& mod_q) {
  assert(integral.ambient_dim() == mod_q.ambient_dim());
  return map_from_generators(integral, mod_q,
                             [](const std::vector<Int>& v) { return v; });
}

PresentedMap bockstein_map(const SubquotientPresentation& mod_two,
                           const SubquotientPresentation& integral_next,
                           const IntegerMatrix& delta_up) {
  return map_from_generators(
      mod_two, integral_next, [&](const std::vector<Int>& v) {
        std::vector<Int> w = delta_up.apply(v);
        for (Int& entry : w) {
          if (entry % 2 != 0)
            throw LiftFailure("odd coboundary entry in Bockstein lift");
          entry /= 2;
        }
        return w;
      });
}

PresentedMap multiplication_map_on(const SubquotientPresentation& p,
                                   const Int& factor) {
  return map_from_generators(p, p, [&](const std::vector<Int>& v) {
    std::vector<Int> w = v;
    for (Int& entry : w) entry *= factor;
    return w;
  });
}

PresentedMap coefficient_reduction(const ChainComplex& c, int degree,
                                   long q) {
  if (q != 2 && q != 4)
    throw BadRangeError("coefficient reduction supports q in {2, 4}");
  return reduction_map(cohomology_presentation(c, degree, Coefficients::integers()),
                       cohomology_presentation(c, degree, Coefficients::mod(q)));
}

PresentedMap bockstein_integral(const ChainComplex& c, int degree) {
  return bockstein_map(
      cohomology_presentation(c, degree, Coefficients::mod(2)),
      cohomology_presentation(c, degree + 1, Coefficients::integers()),
      c.boundary(degree + 1).transposed());
}

PresentedMap multiplication_map(const ChainComplex& c, int degree,
                                const Int& factor) {
  return multiplication_map_on(
      cohomology_presentation(c, degree, Coefficients::integers()), factor);
}

bool composes_to_zero(const PresentedMap& f, const PresentedMap& g) {
  assert(f.target == g.source);
  return subgroup_contains(g.target.relation_matrix(), g.matrix * f.matrix);
}

bool exact_at(const PresentedMap& f, const PresentedMap& g) {
  assert(f.target == g.source);
  IntegerMatrix rel = f.target.relation_matrix();
  IntegerMatrix image = IntegerMatrix::hstack(f.matrix, rel);
  IntegerMatrix kernel = IntegerMatrix::hstack(
      kernel_generators(g.matrix, g.target), rel);
  return subgroup_contains(image, kernel) &&
         subgroup_contains(kernel, image);
}

}  // namespace ptriv
