#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptriv/fin_ab_group.hpp"
#include "ptriv/space_spec.hpp"

namespace ptriv {

enum class Triviality { PTrivial, NotPTrivial, NotCovered };

std::string to_string(Triviality t);  // "P-trivial", "not-P-trivial", ...

// Decision plus a stable rule identifier and a self-contained one-line
// justification of the rule applied.
struct Verdict {
  Triviality status = Triviality::NotCovered;
  std::string rule_id;
  std::string citation;
  bool operator==(const Verdict&) const = default;
};

enum class CertificateKind { VanishingH4j, Rho2InjectiveSuspension };

std::string to_string(CertificateKind k);

// Per-degree evidence: the group H^{4j} that was inspected and, for the
// rho_2 route, whether the reduction map was injective there.
struct CertificateWitness {
  int degree = 0;
  FinAbGroup group;
  bool rho2_injective = false;
  bool operator==(const CertificateWitness&) const = default;
};

// Machine-checked sufficient condition for P-triviality, recomputable from
// the chain complex of the certified space.
struct Certificate {
  CertificateKind kind = CertificateKind::VanishingH4j;
  std::vector<CertificateWitness> witness;
};

// Count of integers n < s <= m with s congruent to 0, 1, 2 or 4 mod 8.
// Throws BadRangeError unless 0 <= n <= m.
long phi(long m, long n);

Verdict classify_stunted_real(int m, int n, int k);
Verdict classify_stunted_complex(int m, int n, int k);
Verdict classify_sphere(int n);
Verdict classify_sphere_product(int n, int k);
Verdict classify_surface_suspension(int genus, int k);

// Dispatcher over every SpaceSpec variant.  Suspensions over parametric
// families fold into the family's own suspension parameter; wedges and
// suspensions of products fall back to the certificate route and come back
// NotCovered when no certificate exists.
Verdict classify(const SpaceSpec& s);

// Sufficient-condition prover: VanishingH4j when every H^{4j} (j >= 1)
// vanishes; otherwise, for suspensions only, Rho2InjectiveSuspension when
// rho_2 is injective on every nonzero H^{4j}.  nullopt when neither holds.
std::optional<Certificate> certify(const SpaceSpec& s);

// The coarse one-line criterion for X(m,n)^k, transcribed literally with
// no case refinements.  It overstates non-triviality on a known parameter
// set; discrepancy_report documents the difference.
Verdict classify_stunted_real_coarse(int m, int n, int k);

struct Discrepancy {
  int m = 0, n = 0, k = 0;
  Verdict case_verdict;    // classify_stunted_real
  Verdict coarse_verdict;  // classify_stunted_real_coarse
};

// Every grid triple where the coarse criterion and the case analysis
// disagree, ordered lexicographically by (m, n, k).
std::vector<Discrepancy> discrepancy_report(int m_max, int n_max, int k_max);

}  // namespace ptriv
