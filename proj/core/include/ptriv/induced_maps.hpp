#pragma once

#include "ptriv/chain_complex.hpp"
#include "ptriv/presentation.hpp"

namespace ptriv {

// Homomorphism between two finitely generated abelian groups given on
// canonical generators; matrix is target-gens x source-gens, with torsion
// rows reduced modulo the generator order.
struct PresentedMap {
  FinAbGroup source;
  FinAbGroup target;
  IntegerMatrix matrix;
  bool injective = false;
  bool surjective = false;
};

// H^degree(c; coeff) with explicit cocycle generators in C^degree.
// Mod-q classes are presented in the same integer lattice: a vector is a
// mod-q cocycle when its coboundary vanishes mod q, and coboundaries
// together with q-multiples of everything form the denominator.
SubquotientPresentation cohomology_presentation(const ChainComplex& c,
                                                int degree,
                                                const Coefficients& coeff);

// rho_q : H^degree(c; Z) -> H^degree(c; Z/q), q in {2, 4}.
PresentedMap coefficient_reduction(const ChainComplex& c, int degree, long q);

// beta : H^degree(c; Z/2) -> H^(degree+1)(c; Z) (lift, coboundary, halve).
// Throws LiftFailure if the halving step meets an odd entry, which cannot
// happen for a valid complex.
PresentedMap bockstein_integral(const ChainComplex& c, int degree);

// Multiplication by `factor` on H^degree(c; Z).
PresentedMap multiplication_map(const ChainComplex& c, int degree,
                                const Int& factor);

// Variants over already-built presentations, so a caller assembling a long
// exact sequence constructs each cohomology presentation exactly once.
PresentedMap reduction_map(const SubquotientPresentation& integral,
                           const SubquotientPresentation& mod_q);
PresentedMap bockstein_map(const SubquotientPresentation& mod_two,
                           const SubquotientPresentation& integral_next,
                           const IntegerMatrix& delta_up);
PresentedMap multiplication_map_on(const SubquotientPresentation& p,
                                   const Int& factor);

// g after f vanishes.
bool composes_to_zero(const PresentedMap& f, const PresentedMap& g);
// image(f) == kernel(g) inside f.target (== g.source).
bool exact_at(const PresentedMap& f, const PresentedMap& g);

}  // namespace ptriv
