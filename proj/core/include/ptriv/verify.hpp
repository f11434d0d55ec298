#pragma once

#include <string>
#include <vector>

#include "ptriv/classifier.hpp"

namespace ptriv {

enum class Family { X, Y, All };

struct VerifyOptions {
  int m_max = 10;
  int n_max = -1;  // negative: no bound beyond n < m
  int k_max = 6;
  Family family = Family::All;
  int threads = 0;  // 0: PTRIV_THREADS env var, then hardware count
};

struct CheckSection {
  std::string name;
  long points = 0;    // checks attempted
  long failures = 0;
};

struct VerifyReport {
  std::vector<CheckSection> sections;
  std::vector<std::string> failures;  // deterministic order
  std::vector<Discrepancy> discrepancies;

  long total_points() const;
  long total_failures() const;
  bool ok() const { return total_failures() == 0; }
};

// Sweeps the stunted-space grid (m <= m_max, n < m and <= n_max, k <= k_max)
// and checks, per point: the complex validates; SNF cohomology matches the
// closed form; SNF homology matches the closed form (real family);
// universal coefficients; Bockstein exactness with presentation/group
// consistency; splitting soundness; classifier consistency with the sphere
// rule; vanishing soundness; certificate soundness plus the expected rho_2
// certificates for X(m,0)^2 and X(m,0)^4; the n == 3 (mod 4) rule; the odd
// complex-suspension rule; and phi identities.  The coarse-vs-case
// discrepancy list rides along informationally and never counts as failure.
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace ptriv
