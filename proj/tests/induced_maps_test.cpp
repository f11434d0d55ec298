#include "doctest.h"
#include "ptriv/chain_complex.hpp"
#include "ptriv/errors.hpp"
#include "ptriv/induced_maps.hpp"
#include "ptriv/space_spec.hpp"
#include "ptriv/spaces.hpp"

using ptriv::ChainComplex;
using ptriv::Coefficients;
using ptriv::FinAbGroup;
using ptriv::Int;
using ptriv::PresentedMap;

namespace {

const FinAbGroup kZ(1, {});
const FinAbGroup kZ2(0, {Int(2)});

ChainComplex space(const char* text) {
  return ptriv::build_complex(ptriv::parse_spec(text));
}

// rho2, beta, and doubling around one degree; exactness of the Bockstein
// sequence ... -> H^j(Z) -> H^j(Z2) -> H^(j+1)(Z) -> H^(j+1)(Z) -> ...
void check_ladder_exactness(const ChainComplex& c, int j) {
  const PresentedMap mul_j = ptriv::multiplication_map(c, j, 2);
  const PresentedMap rho_j = ptriv::coefficient_reduction(c, j, 2);
  const PresentedMap beta_j = ptriv::bockstein_integral(c, j);
  const PresentedMap mul_next = ptriv::multiplication_map(c, j + 1, 2);

  CHECK(ptriv::composes_to_zero(mul_j, rho_j));
  CHECK(ptriv::composes_to_zero(rho_j, beta_j));
  CHECK(ptriv::composes_to_zero(beta_j, mul_next));
  CHECK(ptriv::exact_at(mul_j, rho_j));
  CHECK(ptriv::exact_at(rho_j, beta_j));
  CHECK(ptriv::exact_at(beta_j, mul_next));
}

}  // namespace

TEST_SUITE("induced_maps") {

TEST_CASE("presentations match the cohomology engine") {
  const ChainComplex c = space("X(3,0)^2");
  for (int j = 0; j <= 6; ++j) {
    for (const auto& coeff : {Coefficients::integers(), Coefficients::mod(2),
                              Coefficients::mod(4)}) {
      CHECK(ptriv::cohomology_presentation(c, j, coeff).group() ==
            cohomology(c, coeff).at(j));
    }
  }
}

TEST_CASE("sphere: rho2 is onto but not injective on a free class") {
  const ChainComplex s4 = ptriv::sphere_complex(4);
  const PresentedMap rho = ptriv::coefficient_reduction(s4, 4, 2);
  CHECK(rho.source == kZ);
  CHECK(rho.target == kZ2);
  CHECK(rho.surjective);
  CHECK_FALSE(rho.injective);

  const PresentedMap dbl = ptriv::multiplication_map(s4, 4, 2);
  CHECK(dbl.injective);
  CHECK_FALSE(dbl.surjective);

  // H^3(S4; Z2) = 0, so beta out of degree 3 is the empty map.
  const PresentedMap beta = ptriv::bockstein_integral(s4, 3);
  CHECK(beta.source == FinAbGroup());
  CHECK(beta.target == kZ);
  CHECK(beta.injective);
  CHECK_FALSE(beta.surjective);
  CHECK(ptriv::exact_at(beta, ptriv::multiplication_map(s4, 4, 2)));
}

TEST_CASE("suspended projective 3-space: beta hits the torsion class") {
  const ChainComplex c = space("X(3,0)^2");
  // Integral: {0: Z, 4: Z2, 5: Z}; mod 2: {0, 3, 4, 5} all Z2.
  CHECK(cohomology(c, Coefficients::integers()).at(4) == kZ2);
  CHECK(cohomology(c, Coefficients::mod(2)).at(3) == kZ2);

  const PresentedMap beta3 = ptriv::bockstein_integral(c, 3);
  CHECK(beta3.source == kZ2);
  CHECK(beta3.target == kZ2);
  CHECK(beta3.injective);
  CHECK(beta3.surjective);

  // The torsion class survives reduction: rho2 at degree 4 is injective.
  const PresentedMap rho4 = ptriv::coefficient_reduction(c, 4, 2);
  CHECK(rho4.injective);
  CHECK(rho4.surjective);

  // But beta applied right after vanishes: im(rho2) = ker(beta).
  const PresentedMap beta4 = ptriv::bockstein_integral(c, 4);
  CHECK(beta4.matrix.is_zero());
  CHECK_FALSE(beta4.injective);
  CHECK_FALSE(beta4.surjective);

  // On the free class in degree 5, rho2 is onto with kernel 2Z.
  const PresentedMap rho5 = ptriv::coefficient_reduction(c, 5, 2);
  CHECK(rho5.surjective);
  CHECK_FALSE(rho5.injective);

  for (int j = -1; j <= 6; ++j) check_ladder_exactness(c, j);
}

TEST_CASE("stunted space with the same shape behaves identically") {
  const ChainComplex c = space("X(5,2)");
  const PresentedMap beta3 = ptriv::bockstein_integral(c, 3);
  CHECK(beta3.source == kZ2);
  CHECK(beta3.target == kZ2);
  CHECK(beta3.injective);
  CHECK(beta3.surjective);
  const PresentedMap rho4 = ptriv::coefficient_reduction(c, 4, 2);
  CHECK(rho4.injective);
  for (int j = -1; j <= 6; ++j) check_ladder_exactness(c, j);
}

TEST_CASE("suspended projective 5-space carries an injective rho2 at 4") {
  const ChainComplex c = space("X(5,0)^2");
  const PresentedMap rho4 = ptriv::coefficient_reduction(c, 4, 2);
  CHECK(rho4.source == kZ2);
  CHECK(rho4.injective);
  for (int j = -1; j <= 8; ++j) check_ladder_exactness(c, j);
}

TEST_CASE("rho2 flags are stable under suspension") {
  const ChainComplex base = space("X(5,0)");
  const ChainComplex susp = space("X(5,0)^4");
  const PresentedMap r_base = ptriv::coefficient_reduction(base, 4, 2);
  const PresentedMap r_susp = ptriv::coefficient_reduction(susp, 8, 2);
  CHECK(r_base.source == r_susp.source);
  CHECK(r_base.injective == r_susp.injective);
  CHECK(r_base.surjective == r_susp.surjective);
}

TEST_CASE("multiplication by units and by the modulus") {
  const ChainComplex c = space("X(3,0)^2");  // H^4 = Z2
  const PresentedMap triple = ptriv::multiplication_map(c, 4, 3);
  CHECK(triple.injective);
  CHECK(triple.surjective);
  const PresentedMap dbl = ptriv::multiplication_map(c, 4, 2);
  CHECK(dbl.matrix.is_zero());
  CHECK_FALSE(dbl.injective);
}

TEST_CASE("map variants over shared presentations agree") {
  const ChainComplex c = space("X(5,2)");
  const auto pz3 = ptriv::cohomology_presentation(c, 3, Coefficients::mod(2));
  const auto pz4 = ptriv::cohomology_presentation(c, 4, Coefficients::integers());
  const auto p24 = ptriv::cohomology_presentation(c, 4, Coefficients::mod(2));

  const PresentedMap beta_direct = ptriv::bockstein_integral(c, 3);
  const PresentedMap beta_shared =
      ptriv::bockstein_map(pz3, pz4, c.boundary(4).transposed());
  CHECK(beta_direct.matrix == beta_shared.matrix);
  CHECK(beta_direct.injective == beta_shared.injective);
  CHECK(beta_direct.surjective == beta_shared.surjective);

  const PresentedMap rho_direct = ptriv::coefficient_reduction(c, 4, 2);
  const PresentedMap rho_shared = ptriv::reduction_map(pz4, p24);
  CHECK(rho_direct.matrix == rho_shared.matrix);
  CHECK(rho_direct.injective == rho_shared.injective);
  CHECK(rho_direct.surjective == rho_shared.surjective);
}

TEST_CASE("only moduli 2 and 4 are supported") {
  const ChainComplex s4 = ptriv::sphere_complex(4);
  CHECK_THROWS_AS(ptriv::coefficient_reduction(s4, 4, 3),
                  ptriv::BadRangeError);
  CHECK_THROWS_AS(ptriv::coefficient_reduction(s4, 4, 8),
                  ptriv::BadRangeError);
  CHECK_NOTHROW(ptriv::coefficient_reduction(s4, 4, 4));
}

}  // TEST_SUITE
