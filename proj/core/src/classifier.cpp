#include "ptriv/classifier.hpp"

#include <algorithm>

#include "ptriv/chain_complex.hpp"
#include "ptriv/errors.hpp"
#include "ptriv/induced_maps.hpp"
#include "ptriv/spaces.hpp"

namespace ptriv {

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::PTrivial:
      return "P-trivial";
    case Triviality::NotPTrivial:
      return "not-P-trivial";
    case Triviality::NotCovered:
      return "not-covered";
  }
  return "not-covered";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::VanishingH4j:
      return "vanishing-h4j";
    case CertificateKind::Rho2InjectiveSuspension:
      return "rho2-injective-suspension";
  }
  return "vanishing-h4j";
}

long phi(long m, long n) {
  if (n < 0 || m < 0 || n > m)
    throw BadRangeError("phi(m, n) requires 0 <= n <= m");
  long count = 0;
  for (long s = n + 1; s <= m; ++s) {
    long r = s % 8;
    if (r == 0 || r == 1 || r == 2 || r == 4) ++count;
  }
  return count;
}

namespace {

Verdict verdict(Triviality status, const char* rule_id,
                const char* citation) {
  return Verdict{status, rule_id, citation};
}

Triviality as_status(bool not_trivial) {
  return not_trivial ? Triviality::NotPTrivial : Triviality::PTrivial;
}

void check_stunted_args(int m, int n, int k) {
  if (n < 0 || n >= m) throw BadRangeError("requires 0 <= n < m");
  if (k < 0) throw BadRangeError("requires k >= 0");
}

// Adams bound 2^(g+1) as an exact integer.
Int phi_threshold(int n) {
  Int t = 1;
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(),
               static_cast<unsigned long>(phi(n, 0)) + 1);
  return t;
}

const char* kRpCitation = "RP^m is not P-trivial exactly when m >= 4.";
const char* kSuspendedRpCitation =
    "Sigma^k RP^m (k >= 1) is not P-trivial exactly when m is odd and "
    "m + k == 0 (mod 4).";
const char* kN3Mod4Citation =
    "X(m,n) with n == 3 (mod 4) is never P-trivial.";
const char* kPhiBoundCitation =
    "For n >= 1 with n != 3 (mod 4), X(m,n) is P-trivial exactly when "
    "m < 2^(g+1), where g = phi(n) counts 0 < s <= n with "
    "s == 0,1,2,4 (mod 8).";
const char* kSuspendedStuntedCitation =
    "For k >= 1 and 0 < n < m, X(m,n)^k is not P-trivial exactly when "
    "k and m are odd with k + m == 0 (mod 4), or k is even and n is odd "
    "with k + n + 1 == 0 (mod 4).";
const char* kSphereCitation =
    "S^n is not P-trivial exactly when n == 0 (mod 4).";
const char* kSphereProductCitation =
    "S^n x S^k is not P-trivial exactly when n + k == 0 (mod 4) or "
    "n == 0 (mod 4) or k == 0 (mod 4).";
const char* kComplexOddCitation =
    "Y(m,n)^k with k odd has reduced cohomology only in odd degrees, "
    "so every H^{4j} vanishes and the space is P-trivial.";
const char* kComplexSphereCitation =
    "Y(m,m-1)^k is the sphere S^(2m+k), which is not P-trivial exactly "
    "when 2m + k == 0 (mod 4).";
const char* kComplexDeepCitation =
    "Y(m,n)^k with k even and n <= m - 2 is never P-trivial.";
const char* kSurfaceLowCitation =
    "A closed orientable surface and its first suspension have dimension "
    "<= 3, hence carry no nonzero H^{4j} and are P-trivial.";
const char* kSurfaceDoubleCitation =
    "The double suspension of a closed orientable surface is not "
    "P-trivial.";
const char* kSurfaceTripleCitation =
    "The triple suspension of a closed orientable surface of genus >= 1 "
    "is not P-trivial.";
const char* kSurfaceUncoveredCitation =
    "No implemented rule decides Sigma^k of a surface for k >= 4.";
const char* kVanishingCitation =
    "Every H^{4j} (j >= 1) vanishes, so all Pontrjagin classes are "
    "trivially 1.";
const char* kRho2Citation =
    "The space is a suspension and rho_2 is injective on every nonzero "
    "H^{4j}; Pontrjagin classes reduce to squares mod 2, and squares "
    "vanish in a suspension.";
const char* kUncoveredCitation = "No implemented rule covers this space.";
const char* kCoarseCitation =
    "Coarse criterion: X(m,n)^k is not P-trivial exactly when "
    "(k = 0, n = 0, m >= 4); or (n = 0 and k + m == 0 (mod 4)); or "
    "(k = 0, n >= 1, and n == 3 (mod 4) or m >= 2^(g+1)); or (k >= 1 "
    "and either k odd with k + m == 0 (mod 4), or k even with "
    "k + n + 1 == 0 (mod 4)).";

}  // namespace

Verdict classify_stunted_real(int m, int n, int k) {
  check_stunted_args(m, n, k);
  if (n == 0) {
    if (k == 0) return verdict(as_status(m >= 4), "rp", kRpCitation);
    return verdict(as_status(m % 2 == 1 && (m + k) % 4 == 0), "suspended_rp",
                   kSuspendedRpCitation);
  }
  if (k == 0) {
    if (n % 4 == 3)
      return verdict(Triviality::NotPTrivial, "stunted_n_3_mod_4",
                     kN3Mod4Citation);
    bool trivial = Int(m) < phi_threshold(n);
    return verdict(as_status(!trivial), "stunted_phi_bound",
                   kPhiBoundCitation);
  }
  bool odd_case = (k % 2 == 1) && (m % 2 == 1) && ((m + k) % 4 == 0);
  bool even_case = (k % 2 == 0) && (n % 2 == 1) && ((k + n + 1) % 4 == 0);
  return verdict(as_status(odd_case || even_case), "suspended_stunted",
                 kSuspendedStuntedCitation);
}

Verdict classify_stunted_complex(int m, int n, int k) {
  check_stunted_args(m, n, k);
  if (k % 2 == 1)
    return verdict(Triviality::PTrivial, "complex_odd_suspension",
                   kComplexOddCitation);
  if (n == m - 1)
    return verdict(as_status((2 * m + k) % 4 == 0), "complex_sphere",
                   kComplexSphereCitation);
  return verdict(Triviality::NotPTrivial, "complex_deep_stunting",
                 kComplexDeepCitation);
}

Verdict classify_sphere(int n) {
  if (n < 1) throw BadRangeError("sphere dimension must be >= 1");
  return verdict(as_status(n % 4 == 0), "sphere", kSphereCitation);
}

Verdict classify_sphere_product(int n, int k) {
  if (n < 1 || k < 1)
    throw BadRangeError("sphere product requires n, k >= 1");
  bool not_trivial = (n + k) % 4 == 0 || n % 4 == 0 || k % 4 == 0;
  return verdict(as_status(not_trivial), "sphere_product",
                 kSphereProductCitation);
}

Verdict classify_surface_suspension(int genus, int k) {
  if (genus < 1) throw BadRangeError("surface genus must be >= 1");
  if (k < 0) throw BadRangeError("suspension count must be >= 0");
  if (k <= 1)
    return verdict(Triviality::PTrivial, "surface_low_suspension",
                   kSurfaceLowCitation);
  if (k == 2)
    return verdict(Triviality::NotPTrivial, "surface_double_suspension",
                   kSurfaceDoubleCitation);
  if (k == 3)
    return verdict(Triviality::NotPTrivial, "surface_triple_suspension",
                   kSurfaceTripleCitation);
  return verdict(Triviality::NotCovered, "surface_uncovered",
                 kSurfaceUncoveredCitation);
}

namespace {

bool is_suspension_spec(const SpaceSpec& s) {
  if (const auto* x = std::get_if<StuntedReal>(&s.node)) return x->k >= 1;
  if (const auto* y = std::get_if<StuntedComplex>(&s.node)) return y->k >= 1;
  if (const auto* f = std::get_if<SurfaceSuspension>(&s.node))
    return f->k >= 1;
  return std::holds_alternative<Suspension>(s.node);
}

Verdict certificate_verdict(const SpaceSpec& s) {
  auto cert = certify(s);
  if (!cert)
    return verdict(Triviality::NotCovered, "uncovered", kUncoveredCitation);
  if (cert->kind == CertificateKind::VanishingH4j)
    return verdict(Triviality::PTrivial, "cert_vanishing_h4j",
                   kVanishingCitation);
  return verdict(Triviality::PTrivial, "cert_rho2_suspension",
                 kRho2Citation);
}

struct ClassifyVisitor {
  const SpaceSpec& whole;

  Verdict operator()(const StuntedReal& x) const {
    return classify_stunted_real(x.m, x.n, x.k);
  }
  Verdict operator()(const StuntedComplex& y) const {
    return classify_stunted_complex(y.m, y.n, y.k);
  }
  Verdict operator()(const Sphere& s) const { return classify_sphere(s.n); }
  Verdict operator()(const SphereProduct& p) const {
    return classify_sphere_product(p.n, p.k);
  }
  Verdict operator()(const SurfaceSuspension& f) const {
    return classify_surface_suspension(f.genus, f.k);
  }
  Verdict operator()(const Wedge&) const { return certificate_verdict(whole); }
  Verdict operator()(const Suspension& su) const {
    const SpaceSpec& base = *su.base;
    if (const auto* x = std::get_if<StuntedReal>(&base.node))
      return classify_stunted_real(x->m, x->n, x->k + su.k);
    if (const auto* y = std::get_if<StuntedComplex>(&base.node))
      return classify_stunted_complex(y->m, y->n, y->k + su.k);
    if (const auto* s = std::get_if<Sphere>(&base.node))
      return classify_sphere(s->n + su.k);
    if (const auto* f = std::get_if<SurfaceSuspension>(&base.node))
      return classify_surface_suspension(f->genus, f->k + su.k);
    if (const auto* inner = std::get_if<Suspension>(&base.node))
      return classify(suspension_of(*inner->base, inner->k + su.k));
    return certificate_verdict(whole);
  }
};

}  // namespace

Verdict classify(const SpaceSpec& s) {
  validate_spec(s);
  return std::visit(ClassifyVisitor{s}, s.node);
}

std::optional<Certificate> certify(const SpaceSpec& s) {
  ChainComplex c = build_complex(s);
  GradedGroup h = cohomology(c, Coefficients::integers());
  const int top = c.top_degree();

  std::vector<CertificateWitness> vanishing;
  std::vector<int> nonzero;
  for (int j = 4; j <= top; j += 4) {
    const FinAbGroup& g = h.at(j);
    vanishing.push_back(CertificateWitness{j, g, false});
    if (!g.trivial()) nonzero.push_back(j);
  }
  if (nonzero.empty())
    return Certificate{CertificateKind::VanishingH4j, std::move(vanishing)};

  if (!is_suspension_spec(s)) return std::nullopt;
  std::vector<CertificateWitness> witnesses;
  for (int j : nonzero) {
    PresentedMap rho = coefficient_reduction(c, j, 2);
    if (!rho.injective) return std::nullopt;
    witnesses.push_back(CertificateWitness{j, h.at(j), true});
  }
  return Certificate{CertificateKind::Rho2InjectiveSuspension,
                     std::move(witnesses)};
}

Verdict classify_stunted_real_coarse(int m, int n, int k) {
  check_stunted_args(m, n, k);
  bool clause_a = k == 0 && n == 0 && m >= 4;
  bool clause_b = n == 0 && (k + m) % 4 == 0;
  bool clause_c = false;
  if (k == 0 && n > 0)
    clause_c = n % 4 == 3 || Int(m) >= phi_threshold(n);
  bool clause_d =
      k > 0 && ((k % 2 == 1 && (k + m) % 4 == 0) ||
                (k % 2 == 0 && (k + n + 1) % 4 == 0));
  return verdict(as_status(clause_a || clause_b || clause_c || clause_d),
                 "coarse_criterion", kCoarseCitation);
}

std::vector<Discrepancy> discrepancy_report(int m_max, int n_max, int k_max) {
  std::vector<Discrepancy> out;
  for (int m = 1; m <= m_max; ++m) {
    int n_top = n_max < 0 ? m - 1 : std::min(n_max, m - 1);
    for (int n = 0; n <= n_top; ++n)
      for (int k = 0; k <= k_max; ++k) {
        Verdict fine = classify_stunted_real(m, n, k);
        Verdict coarse = classify_stunted_real_coarse(m, n, k);
        if (fine.status != coarse.status)
          out.push_back(Discrepancy{m, n, k, fine, coarse});
      }
  }
  return out;
}

}  // namespace ptriv
