#pragma once

#include <optional>

#include "ptriv/chain_complex.hpp"
#include "ptriv/space_spec.hpp"

namespace ptriv {

// Cellular chain complex of the space; validates parameter bounds first
// (InvalidSpecError).  The result always passes validate().
ChainComplex build_complex(const SpaceSpec& s);

// Integral cohomology by the closed-form case tables; only the stunted
// families are covered (UnsupportedSpecError otherwise).
GradedGroup closed_form_cohomology(const SpaceSpec& s);

// Integral homology case table, real stunted family only.
GradedGroup closed_form_homology(const SpaceSpec& s);

// Known homotopy equivalences onto simpler specs:
//   X(m,m-1)^k ~ S(m+k)
//   X(m,m-2)^k ~ S(m+k) v S(m+k-1)        (m odd)
//   X(m,m-2)^k ~ Susp[X(2,0)]^(m-2+k)     (m even >= 4)
// and the complex analogues with doubled dimensions.  For m = 2 the
// "splitting" is the space itself, so nullopt is returned, as it is for
// any spec outside the stunted families.
std::optional<SpaceSpec> recognize_splitting(const SpaceSpec& s);

}  // namespace ptriv
