#include "ptriv/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "ptriv/errors.hpp"
#include "ptriv/induced_maps.hpp"
#include "ptriv/spaces.hpp"

namespace ptriv {

long VerifyReport::total_points() const {
  long t = 0;
  for (const auto& s : sections) t += s.points;
  return t;
}

long VerifyReport::total_failures() const {
  long t = 0;
  for (const auto& s : sections) t += s.failures;
  return t;
}

namespace {

enum Section : std::size_t {
  kValidates = 0,
  kCohomologyOracle,
  kHomologyOracle,
  kUct,
  kBocksteinExactness,
  kPresentationConsistency,
  kSplittingSoundness,
  kSphereRuleConsistency,
  kVanishingSoundness,
  kCertificateSoundness,
  kRho2CertificateExpected,
  kN3Mod4Rule,
  kOddSuspensionRule,
  kPhiIdentities,
  kSectionCount
};

const char* kSectionNames[kSectionCount] = {
    "build-validates",
    "cohomology-closed-form",
    "homology-closed-form",
    "uct",
    "bockstein-exactness",
    "presentation-consistency",
    "splitting-soundness",
    "sphere-rule-consistency",
    "vanishing-soundness",
    "certificate-soundness",
    "rho2-certificate-expected",
    "n-3-mod-4-rule",
    "odd-suspension-rule",
    "phi-identities",
};

struct GridPoint {
  bool real_family = true;
  int m = 1, n = 0, k = 0;
};

struct PointOutcome {
  std::array<long, kSectionCount> attempts{};
  std::array<std::vector<std::string>, kSectionCount> failures;

  void pass(Section s, long count = 1) { attempts[s] += count; }
  void fail(Section s, std::string msg) {
    attempts[s] += 1;
    failures[s].push_back(std::move(msg));
  }
};

SpaceSpec point_spec(const GridPoint& p) {
  return p.real_family ? stunted_real(p.m, p.n, p.k)
                       : stunted_complex(p.m, p.n, p.k);
}

FinAbGroup hom_ext(const FinAbGroup& h_j, const FinAbGroup& h_jm1) {
  return FinAbGroup(h_j.free_rank(), {}).direct_sum(
      FinAbGroup(0, h_jm1.torsion()));
}

void check_point(const GridPoint& p, PointOutcome& out) {
  SpaceSpec s = point_spec(p);
  const std::string name = print_spec(s);
  ChainComplex c = build_complex(s);

  try {
    validate(c);
    out.pass(kValidates);
  } catch (const NotAComplexError& e) {
    out.fail(kValidates, name + ": " + e.what());
    return;  // everything downstream assumes a valid complex
  }

  const GradedGroup hc = cohomology(c, Coefficients::integers());
  const GradedGroup closed = closed_form_cohomology(s);
  if (hc == closed)
    out.pass(kCohomologyOracle);
  else
    out.fail(kCohomologyOracle, name + ": snf=" + hc.to_string() +
                                    " closed=" + closed.to_string());

  const GradedGroup h = homology(c, Coefficients::integers());
  if (p.real_family) {
    const GradedGroup closed_h = closed_form_homology(s);
    if (h == closed_h)
      out.pass(kHomologyOracle);
    else
      out.fail(kHomologyOracle, name + ": snf=" + h.to_string() +
                                    " closed=" + closed_h.to_string());
  }

  const int top = c.top_degree();
  {
    bool ok = true;
    std::ostringstream why;
    for (int j = 0; j <= top + 1 && ok; ++j) {
      FinAbGroup expected = hom_ext(h.at(j), h.at(j - 1));
      if (!(expected == hc.at(j))) {
        ok = false;
        why << name << ": degree " << j << " cohomology "
            << hc.at(j).to_string() << " != Hom+Ext "
            << expected.to_string();
      }
    }
    if (ok)
      out.pass(kUct);
    else
      out.fail(kUct, why.str());
  }

  {
    const GradedGroup hc2 = cohomology(c, Coefficients::mod(2));
    bool exact_ok = true, pres_ok = true;
    std::ostringstream exact_why, pres_why;
    std::map<int, SubquotientPresentation> pz, pz2;
    std::map<int, PresentedMap> mul2, rho, beta;
    for (int j = -1; j <= top + 2; ++j) {
      pz.emplace(j, cohomology_presentation(c, j, Coefficients::integers()));
      pz2.emplace(j, cohomology_presentation(c, j, Coefficients::mod(2)));
      if (!(pz.at(j).group() == hc.at(j)) && pres_ok) {
        pres_ok = false;
        pres_why << name << ": degree " << j << " integral presentation "
                 << pz.at(j).group().to_string() << " != "
                 << hc.at(j).to_string();
      }
      if (!(pz2.at(j).group() == hc2.at(j)) && pres_ok) {
        pres_ok = false;
        pres_why << name << ": degree " << j << " mod-2 presentation "
                 << pz2.at(j).group().to_string() << " != "
                 << hc2.at(j).to_string();
      }
    }
    for (int j = -1; j <= top + 2; ++j) {
      mul2.emplace(j, multiplication_map_on(pz.at(j), 2));
      rho.emplace(j, reduction_map(pz.at(j), pz2.at(j)));
      if (j <= top + 1)
        beta.emplace(j, bockstein_map(pz2.at(j), pz.at(j + 1),
                                      c.boundary(j + 1).transposed()));
    }
    for (int j = -1; j <= top + 1 && exact_ok; ++j) {
      if (!exact_at(mul2.at(j), rho.at(j))) {
        exact_ok = false;
        exact_why << name << ": not exact at H^" << j << "(Z)";
      } else if (!exact_at(rho.at(j), beta.at(j))) {
        exact_ok = false;
        exact_why << name << ": not exact at H^" << j << "(Z2)";
      } else if (!exact_at(beta.at(j), mul2.at(j + 1))) {
        exact_ok = false;
        exact_why << name << ": not exact at H^" << j + 1 << "(Z) (after beta)";
      }
    }
    if (exact_ok)
      out.pass(kBocksteinExactness);
    else
      out.fail(kBocksteinExactness, exact_why.str());
    if (pres_ok)
      out.pass(kPresentationConsistency);
    else
      out.fail(kPresentationConsistency, pres_why.str());
  }

  if (auto split = recognize_splitting(s)) {
    ChainComplex ct = build_complex(*split);
    bool ok = cohomology(ct, Coefficients::integers()) == hc &&
              cohomology(ct, Coefficients::mod(2)) ==
                  cohomology(c, Coefficients::mod(2));
    if (ok)
      out.pass(kSplittingSoundness);
    else
      out.fail(kSplittingSoundness,
               name + ": cohomology differs from " + print_spec(*split));
  }

  Verdict v = p.real_family ? classify_stunted_real(p.m, p.n, p.k)
                            : classify_stunted_complex(p.m, p.n, p.k);

  if (p.n == p.m - 1) {
    int dim = p.real_family ? p.m + p.k : 2 * p.m + p.k;
    if (classify_sphere(dim).status == v.status)
      out.pass(kSphereRuleConsistency);
    else
      out.fail(kSphereRuleConsistency,
               name + ": verdict differs from S(" + std::to_string(dim) + ")");
  }

  {
    bool any_h4 = false;
    for (int j = 4; j <= top; j += 4)
      if (!closed.at(j).trivial()) any_h4 = true;
    if (!any_h4) {
      if (v.status == Triviality::PTrivial)
        out.pass(kVanishingSoundness);
      else
        out.fail(kVanishingSoundness,
                 name + ": all H^{4j} vanish but verdict is " +
                     to_string(v.status));
    }
  }

  auto cert = certify(s);
  if (cert) {
    if (v.status == Triviality::PTrivial)
      out.pass(kCertificateSoundness);
    else
      out.fail(kCertificateSoundness,
               name + ": certificate " + to_string(cert->kind) +
                   " but verdict is " + to_string(v.status));
  }

  if (p.real_family && p.n == 0 &&
      ((p.k == 2 && p.m >= 2) || (p.k == 4 && p.m >= 4))) {
    if (cert && cert->kind == CertificateKind::Rho2InjectiveSuspension)
      out.pass(kRho2CertificateExpected);
    else
      out.fail(kRho2CertificateExpected,
               name + ": expected a rho2-injective-suspension certificate");
  }

  if (p.real_family && p.k == 0 && p.n % 4 == 3) {
    if (v.status == Triviality::NotPTrivial)
      out.pass(kN3Mod4Rule);
    else
      out.fail(kN3Mod4Rule, name + ": expected not-P-trivial");
  }

  if (!p.real_family && p.k % 2 == 1) {
    if (v.status == Triviality::PTrivial)
      out.pass(kOddSuspensionRule);
    else
      out.fail(kOddSuspensionRule, name + ": expected P-trivial");
  }
}

int effective_threads(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("PTRIV_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(std::min(v, 64L));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
  std::vector<GridPoint> points;
  auto add_family = [&](bool real_family) {
    for (int m = 1; m <= opts.m_max; ++m) {
      int n_top = opts.n_max < 0 ? m - 1 : std::min(opts.n_max, m - 1);
      for (int n = 0; n <= n_top; ++n)
        for (int k = 0; k <= opts.k_max; ++k)
          points.push_back(GridPoint{real_family, m, n, k});
    }
  };
  if (opts.family != Family::Y) add_family(true);
  if (opts.family != Family::X) add_family(false);

  std::vector<PointOutcome> outcomes(points.size());
  const int threads = effective_threads(opts.threads);
  if (threads <= 1 || points.size() < 2) {
    for (std::size_t i = 0; i < points.size(); ++i)
      check_point(points[i], outcomes[i]);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (points.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(points.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i)
          check_point(points[i], outcomes[i]);
      });
    }
    for (auto& th : pool) th.join();
  }

  VerifyReport report;
  report.sections.resize(kSectionCount);
  for (std::size_t s = 0; s < kSectionCount; ++s)
    report.sections[s].name = kSectionNames[s];
  for (const PointOutcome& o : outcomes)
    for (std::size_t s = 0; s < kSectionCount; ++s) {
      report.sections[s].points += o.attempts[s];
      report.sections[s].failures += static_cast<long>(o.failures[s].size());
    }
  for (std::size_t s = 0; s < kSectionCount; ++s)
    for (const PointOutcome& o : outcomes)
      for (const std::string& f : o.failures[s]) report.failures.push_back(f);

  {
    auto& sec = report.sections[kPhiIdentities];
    for (int m = 0; m <= opts.m_max; ++m) {
      for (int n = 0; n <= m; ++n) {
        ++sec.points;
        if (phi(m, n) != phi(m, 0) - phi(n, 0)) {
          ++sec.failures;
          report.failures.push_back("phi(" + std::to_string(m) + "," +
                                    std::to_string(n) +
                                    ") != phi(m,0) - phi(n,0)");
        }
      }
      if (m > 0) {
        ++sec.points;
        if (phi(m, 0) < phi(m - 1, 0)) {
          ++sec.failures;
          report.failures.push_back("phi not monotone at m=" +
                                    std::to_string(m));
        }
      }
    }
  }

  if (opts.family != Family::Y)
    report.discrepancies =
        discrepancy_report(opts.m_max, opts.n_max, opts.k_max);
  return report;
}

}  // namespace ptriv
