#include "ptriv/spaces.hpp"

#include "ptriv/errors.hpp"

namespace ptriv {

namespace {

ChainComplex stunted_real_complex(int m, int n) {
  ChainComplex c;
  c.set_rank(0, 1);
  for (int j = n + 1; j <= m; ++j) c.set_rank(j, 1);
  for (int j = n + 2; j <= m; ++j) {
    if (j % 2 == 0) {
      IntegerMatrix d(1, 1);
      d.at(0, 0) = 2;
      c.set_boundary(j, std::move(d));
    }
  }
  return c;
}

ChainComplex stunted_complex_complex(int m, int n) {
  ChainComplex c;
  c.set_rank(0, 1);
  for (int i = n + 1; i <= m; ++i) c.set_rank(2 * i, 1);
  return c;
}

ChainComplex surface_complex(int genus) {
  ChainComplex c;
  c.set_rank(0, 1);
  c.set_rank(1, 2 * static_cast<std::size_t>(genus));
  c.set_rank(2, 1);
  return c;
}

struct Builder {
  ChainComplex operator()(const StuntedReal& s) const {
    ChainComplex c = stunted_real_complex(s.m, s.n);
    return s.k > 0 ? suspend(c, s.k) : c;
  }
  ChainComplex operator()(const StuntedComplex& s) const {
    ChainComplex c = stunted_complex_complex(s.m, s.n);
    return s.k > 0 ? suspend(c, s.k) : c;
  }
  ChainComplex operator()(const Sphere& s) const {
    return sphere_complex(s.n);
  }
  ChainComplex operator()(const SphereProduct& s) const {
    return tensor_product(sphere_complex(s.n), sphere_complex(s.k));
  }
  ChainComplex operator()(const SurfaceSuspension& s) const {
    ChainComplex c = surface_complex(s.genus);
    return s.k > 0 ? suspend(c, s.k) : c;
  }
  ChainComplex operator()(const Wedge& s) const {
    ChainComplex c = build_complex(s.parts.front());
    for (std::size_t i = 1; i < s.parts.size(); ++i)
      c = wedge(c, build_complex(s.parts[i]));
    return c;
  }
  ChainComplex operator()(const Suspension& s) const {
    return suspend(build_complex(*s.base), s.k);
  }
};

}  // namespace

ChainComplex build_complex(const SpaceSpec& s) {
  validate_spec(s);
  return std::visit(Builder{}, s.node);
}

GradedGroup closed_form_cohomology(const SpaceSpec& s) {
  GradedGroup out;
  out.set(0, FinAbGroup(1, {}));
  if (const auto* x = std::get_if<StuntedReal>(&s.node)) {
    validate_spec(s);
    const int m = x->m, n = x->n, k = x->k;
    for (int j = n + 1 + k; j <= m + k; ++j) {
      int i = j - k;  // unsuspended degree
      if (i == n + 1 && (n + 1) % 2 == 0)
        out.set(j, FinAbGroup(1, {}));
      else if (i == m && m % 2 == 1)
        out.set(j, FinAbGroup(1, {}));
      else if (i % 2 == 0 && n + 1 < i && i <= m)
        out.set(j, FinAbGroup(0, {2}));
    }
    return out;
  }
  if (const auto* y = std::get_if<StuntedComplex>(&s.node)) {
    validate_spec(s);
    const int m = y->m, n = y->n, k = y->k;
    for (int j = 2 * n + k + 2; j <= 2 * m + k; ++j)
      if ((j - k) % 2 == 0) out.set(j, FinAbGroup(1, {}));
    return out;
  }
  throw UnsupportedSpecError(
      "closed-form cohomology covers only X(m,n)^k and Y(m,n)^k");
}

GradedGroup closed_form_homology(const SpaceSpec& s) {
  const auto* x = std::get_if<StuntedReal>(&s.node);
  if (!x)
    throw UnsupportedSpecError("closed-form homology covers only X(m,n)^k");
  validate_spec(s);
  const int m = x->m, n = x->n, k = x->k;
  GradedGroup out;
  out.set(0, FinAbGroup(1, {}));
  for (int j = n + 1 + k; j <= m + k; ++j) {
    int i = j - k;
    if (i == n + 1 && (n + 1) % 2 == 0)
      out.set(j, FinAbGroup(1, {}));
    else if (i == m && m % 2 == 1)
      out.set(j, FinAbGroup(1, {}));
    else if (i % 2 == 1 && n + 1 <= i && i <= m - 1)
      out.set(j, FinAbGroup(0, {2}));
  }
  return out;
}

std::optional<SpaceSpec> recognize_splitting(const SpaceSpec& s) {
  if (const auto* x = std::get_if<StuntedReal>(&s.node)) {
    const int m = x->m, n = x->n, k = x->k;
    if (n == m - 1) return sphere(m + k);
    if (n == m - 2 && m >= 3) {
      if (m % 2 == 1)
        return wedge_of({sphere(m + k), sphere(m + k - 1)});
      return suspension_of(stunted_real(2, 0), m - 2 + k);
    }
    return std::nullopt;
  }
  if (const auto* y = std::get_if<StuntedComplex>(&s.node)) {
    const int m = y->m, n = y->n, k = y->k;
    if (n == m - 1) return sphere(2 * m + k);
    if (n == m - 2 && m >= 3) {
      if (m % 2 == 1)
        return wedge_of({sphere(2 * m + k), sphere(2 * m - 2 + k)});
      return suspension_of(stunted_complex(2, 0), 2 * m - 4 + k);
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace ptriv
