#include <array>
#include <vector>

#include "doctest.h"
#include "ptriv/classifier.hpp"
#include "ptriv/errors.hpp"
#include "ptriv/space_spec.hpp"

using ptriv::CertificateKind;
using ptriv::Triviality;
using ptriv::Verdict;

namespace {

Triviality status_of(const char* text) {
  return ptriv::classify(ptriv::parse_spec(text)).status;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("phi fixtures") {
  // Independent enumeration: s in (n, m] with s % 8 in {0, 1, 2, 4}.
  const std::vector<long> expected = {1, 2, 2, 3, 3, 3, 3, 4,
                                      5, 6, 6, 7, 7, 7, 7, 8};
  for (long n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(ptriv::phi(n, 0) == expected[static_cast<size_t>(n - 1)]);
  }
  CHECK(ptriv::phi(0, 0) == 0);
  CHECK(ptriv::phi(9, 9) == 0);
  CHECK(ptriv::phi(8, 0) == 4);
  CHECK(ptriv::phi(9, 4) == 2);
  for (long m = 0; m <= 30; ++m)
    for (long n = 0; n <= m; ++n)
      CHECK(ptriv::phi(m, n) == ptriv::phi(m, 0) - ptriv::phi(n, 0));
  for (long m = 1; m <= 30; ++m)
    CHECK(ptriv::phi(m, 0) >= ptriv::phi(m - 1, 0));
  CHECK_THROWS_AS(ptriv::phi(3, 5), ptriv::BadRangeError);
  CHECK_THROWS_AS(ptriv::phi(3, -1), ptriv::BadRangeError);
}

TEST_CASE("stunted real verdicts") {
  using ptriv::classify_stunted_real;
  CHECK(classify_stunted_real(4, 0, 0).status == Triviality::NotPTrivial);
  CHECK(classify_stunted_real(3, 0, 0).status == Triviality::PTrivial);
  CHECK(classify_stunted_real(3, 0, 1).status == Triviality::NotPTrivial);
  CHECK(classify_stunted_real(5, 0, 2).status == Triviality::PTrivial);
  CHECK(classify_stunted_real(7, 3, 0).status == Triviality::NotPTrivial);
  CHECK(classify_stunted_real(6, 2, 0).status == Triviality::PTrivial);
  CHECK(classify_stunted_real(3, 1, 2).status == Triviality::NotPTrivial);
  for (int m = 2; m <= 10; ++m) {
    CAPTURE(m);
    CHECK(classify_stunted_real(m, 1, 0).status ==
          (m <= 3 ? Triviality::PTrivial : Triviality::NotPTrivial));
  }
  CHECK(classify_stunted_real(4, 0, 0).rule_id == "rp");
  CHECK(classify_stunted_real(3, 0, 1).rule_id == "suspended_rp");
  CHECK(classify_stunted_real(7, 3, 0).rule_id == "stunted_n_3_mod_4");
  CHECK(classify_stunted_real(6, 2, 0).rule_id == "stunted_phi_bound");
  CHECK(classify_stunted_real(3, 1, 2).rule_id == "suspended_stunted");
  CHECK(!classify_stunted_real(4, 0, 0).citation.empty());
  CHECK_THROWS_AS(classify_stunted_real(3, 3, 0), ptriv::BadRangeError);
  CHECK_THROWS_AS(classify_stunted_real(3, 1, -1), ptriv::BadRangeError);
}

TEST_CASE("stunted complex verdicts") {
  using ptriv::classify_stunted_complex;
  CHECK(classify_stunted_complex(2, 0, 0).status == Triviality::NotPTrivial);
  CHECK(classify_stunted_complex(7, 3, 5).status == Triviality::PTrivial);
  CHECK(classify_stunted_complex(3, 2, 2).status == Triviality::NotPTrivial);
  CHECK(classify_stunted_complex(3, 2, 0).status == Triviality::PTrivial);
  for (int k = 0; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(classify_stunted_complex(2, 0, k).status ==
          (k % 2 == 1 ? Triviality::PTrivial : Triviality::NotPTrivial));
  }
  CHECK(classify_stunted_complex(7, 3, 5).rule_id == "complex_odd_suspension");
  CHECK(classify_stunted_complex(3, 2, 0).rule_id == "complex_sphere");
  CHECK(classify_stunted_complex(4, 1, 2).rule_id == "complex_deep_stunting");
  // The n = m-1 rule is the sphere rule in disguise.
  for (int m = 1; m <= 8; ++m)
    for (int k = 0; k <= 8; k += 2)
      CHECK(classify_stunted_complex(m, m - 1, k).status ==
            ptriv::classify_sphere(2 * m + k).status);
}

TEST_CASE("sphere, product, surface verdicts") {
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(ptriv::classify_sphere(n).status ==
          (n % 4 == 0 ? Triviality::NotPTrivial : Triviality::PTrivial));
  }
  CHECK_THROWS_AS(ptriv::classify_sphere(0), ptriv::BadRangeError);

  using ptriv::classify_sphere_product;
  CHECK(classify_sphere_product(2, 2).status == Triviality::NotPTrivial);
  CHECK(classify_sphere_product(2, 3).status == Triviality::PTrivial);
  CHECK(classify_sphere_product(4, 1).status == Triviality::NotPTrivial);
  CHECK(classify_sphere_product(1, 2).status == Triviality::PTrivial);
  CHECK(classify_sphere_product(3, 5).status == Triviality::NotPTrivial);
  CHECK_THROWS_AS(classify_sphere_product(0, 2), ptriv::BadRangeError);

  using ptriv::classify_surface_suspension;
  for (int g = 1; g <= 3; ++g) {
    CAPTURE(g);
    CHECK(classify_surface_suspension(g, 0).status == Triviality::PTrivial);
    CHECK(classify_surface_suspension(g, 1).status == Triviality::PTrivial);
    CHECK(classify_surface_suspension(g, 2).status == Triviality::NotPTrivial);
    CHECK(classify_surface_suspension(g, 3).status == Triviality::NotPTrivial);
    CHECK(classify_surface_suspension(g, 4).status == Triviality::NotCovered);
  }
  CHECK(classify_surface_suspension(3, 7).status == Triviality::NotCovered);
  CHECK_THROWS_AS(classify_surface_suspension(0, 1), ptriv::BadRangeError);
}

TEST_CASE("dispatcher folds suspensions into family parameters") {
  CHECK(ptriv::classify(ptriv::parse_spec("Susp[X(4,0)]^1")) ==
        ptriv::classify_stunted_real(4, 0, 1));
  CHECK(ptriv::classify(ptriv::parse_spec("Susp[X(5,0)^1]^1")) ==
        ptriv::classify_stunted_real(5, 0, 2));
  CHECK(ptriv::classify(ptriv::parse_spec("Susp[S(3)]^1")) ==
        ptriv::classify_sphere(4));
  CHECK(ptriv::classify(ptriv::parse_spec("Susp[Susp[S(2)]^1]^1")) ==
        ptriv::classify_sphere(4));
  CHECK(ptriv::classify(ptriv::parse_spec("Susp[Surf(2)^1]^1")) ==
        ptriv::classify_surface_suspension(2, 2));
  CHECK(ptriv::classify(ptriv::parse_spec("Susp[Y(3,1)]^3")) ==
        ptriv::classify_stunted_complex(3, 1, 3));
}

TEST_CASE("dispatcher certificate fallback for wedges") {
  const Verdict w1 = ptriv::classify(ptriv::parse_spec("W[S(3),S(5)]"));
  CHECK(w1.status == Triviality::PTrivial);
  CHECK(w1.rule_id == "cert_vanishing_h4j");
  const Verdict w2 = ptriv::classify(ptriv::parse_spec("W[S(4),S(2)]"));
  CHECK(w2.status == Triviality::NotCovered);
  CHECK(w2.rule_id == "uncovered");
  // H^4 of the suspension is free, so neither certificate applies.
  const Verdict w3 =
      ptriv::classify(ptriv::parse_spec("Susp[W[S(3),S(6)]]^1"));
  CHECK(w3.status == Triviality::NotCovered);
  CHECK(w3.rule_id == "uncovered");
  // Here H^4 = Z2 carried by the suspended projective summand, where the
  // mod-2 reduction is injective.
  const Verdict w4 =
      ptriv::classify(ptriv::parse_spec("Susp[W[X(5,0)^1,S(2)]]^1"));
  CHECK(w4.status == Triviality::PTrivial);
  CHECK(w4.rule_id == "cert_rho2_suspension");
  CHECK(status_of("Susp[SxS(2,2)]^1") == Triviality::PTrivial);
}

TEST_CASE("golden verdict sweep") {
  CHECK(status_of("X(4,0)") == Triviality::NotPTrivial);
  CHECK(status_of("X(3,0)") == Triviality::PTrivial);
  CHECK(status_of("X(3,0)^1") == Triviality::NotPTrivial);
  CHECK(status_of("X(5,0)^2") == Triviality::PTrivial);
  CHECK(status_of("X(7,3)") == Triviality::NotPTrivial);
  CHECK(status_of("SxS(2,2)") == Triviality::NotPTrivial);
  CHECK(status_of("SxS(2,3)") == Triviality::PTrivial);
  for (int k = 0; k <= 10; k += 2)
    CHECK(ptriv::classify_stunted_complex(2, 0, k).status ==
          Triviality::NotPTrivial);
  for (int k = 1; k <= 9; k += 2)
    CHECK(ptriv::classify_stunted_complex(2, 0, k).status ==
          Triviality::PTrivial);
}

TEST_CASE("certificates") {
  const auto c1 = ptriv::certify(ptriv::parse_spec("X(5,3)^1"));
  REQUIRE(c1.has_value());
  CHECK(c1->kind == CertificateKind::VanishingH4j);
  for (const auto& w : c1->witness) {
    CHECK(w.degree % 4 == 0);
    CHECK(w.group.trivial());
  }

  const auto c2 = ptriv::certify(ptriv::parse_spec("X(5,0)^2"));
  REQUIRE(c2.has_value());
  CHECK(c2->kind == CertificateKind::Rho2InjectiveSuspension);
  REQUIRE(c2->witness.size() == 1);
  CHECK(c2->witness[0].degree == 4);
  CHECK(c2->witness[0].group == ptriv::FinAbGroup(0, {ptriv::Int(2)}));
  CHECK(c2->witness[0].rho2_injective);

  CHECK(!ptriv::certify(ptriv::parse_spec("S(4)")).has_value());
  CHECK(!ptriv::certify(ptriv::parse_spec("X(4,0)")).has_value());
  CHECK(ptriv::to_string(CertificateKind::VanishingH4j) == "vanishing-h4j");
  CHECK(ptriv::to_string(CertificateKind::Rho2InjectiveSuspension) ==
        "rho2-injective-suspension");
}

TEST_CASE("certificates imply a P-trivial verdict") {
  for (const char* text :
       {"X(5,3)^1", "X(5,0)^2", "X(7,0)^4", "Y(7,3)^5", "W[S(3),S(5)]",
        "Susp[W[S(3),S(6)]]^1", "S(6)", "Surf(2)^1"}) {
    const ptriv::SpaceSpec s = ptriv::parse_spec(text);
    CAPTURE(text);
    if (ptriv::certify(s))
      CHECK(ptriv::classify(s).status == Triviality::PTrivial);
  }
}

TEST_CASE("verdict strings") {
  CHECK(ptriv::to_string(Triviality::PTrivial) == "P-trivial");
  CHECK(ptriv::to_string(Triviality::NotPTrivial) == "not-P-trivial");
  CHECK(ptriv::to_string(Triviality::NotCovered) == "not-covered");
}

TEST_CASE("coarse criterion and discrepancy report") {
  using ptriv::classify_stunted_real_coarse;
  CHECK(classify_stunted_real_coarse(4, 0, 0).status ==
        Triviality::NotPTrivial);
  CHECK(classify_stunted_real_coarse(2, 0, 2).status ==
        Triviality::NotPTrivial);
  CHECK(classify_stunted_real_coarse(7, 3, 0).status ==
        Triviality::NotPTrivial);
  CHECK(classify_stunted_real_coarse(3, 0, 1).status ==
        Triviality::NotPTrivial);
  CHECK(classify_stunted_real_coarse(2, 0, 2).rule_id == "coarse_criterion");

  const auto report = ptriv::discrepancy_report(10, -1, 6);
  const std::vector<std::array<int, 3>> expected = {
      {2, 0, 2}, {2, 0, 6}, {4, 0, 4},  {6, 0, 2},
      {6, 0, 6}, {8, 0, 4}, {10, 0, 2}, {10, 0, 6}};
  REQUIRE(report.size() == expected.size());
  for (size_t i = 0; i < report.size(); ++i) {
    CAPTURE(i);
    CHECK(report[i].m == expected[i][0]);
    CHECK(report[i].n == expected[i][1]);
    CHECK(report[i].k == expected[i][2]);
    CHECK(report[i].case_verdict.status == Triviality::PTrivial);
    CHECK(report[i].coarse_verdict.status == Triviality::NotPTrivial);
  }
  CHECK(ptriv::discrepancy_report(2, -1, 6).size() == 2);
  CHECK(ptriv::discrepancy_report(0, -1, 6).empty());
  // Away from the disputed set the two evaluators agree.
  for (const auto& d : ptriv::discrepancy_report(12, -1, 8)) {
    CHECK(d.n == 0);
    CHECK(d.m % 2 == 0);
    CHECK(d.k > 0);
    CHECK((d.m + d.k) % 4 == 0);
  }
}

}  // TEST_SUITE
