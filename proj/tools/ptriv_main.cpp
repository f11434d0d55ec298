// Command-line front end: classify, cohomology, verify, table, phi.
//
// Exit codes: classify maps its verdict to 0 (P-trivial), 1 (not),
// 2 (not covered); cohomology --both exits 1 on any MISMATCH; verify
// exits 1 when a check fails.  64 = bad usage or unparsable spec,
// 65 = closed form requested for an unsupported space, 74 = output file
// not writable, 70 = internal error.

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptriv/chain_complex.hpp"
#include "ptriv/classifier.hpp"
#include "ptriv/errors.hpp"
#include "ptriv/space_spec.hpp"
#include "ptriv/spaces.hpp"
#include "ptriv/table.hpp"
#include "ptriv/verify.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitUnsupported = 65;
constexpr int kExitInternal = 70;
constexpr int kExitIo = 74;

ptriv::Coefficients coefficients_of(const std::string& name) {
  if (name == "Z") return ptriv::Coefficients::integers();
  return ptriv::Coefficients::mod(name == "Z2" ? 2 : 4);
}

ptriv::Family family_of(const std::string& name) {
  if (name == "X") return ptriv::Family::X;
  if (name == "Y") return ptriv::Family::Y;
  return ptriv::Family::All;
}

// Mod-q groups assembled from the integral table by universal
// coefficients, so the closed form stays usable under --coeff Z2/Z4.
ptriv::GradedGroup reduce_graded(const ptriv::GradedGroup& integral, long q) {
  ptriv::GradedGroup out;
  std::set<int> degrees;
  for (const auto& [j, g] : integral.by_degree) {
    degrees.insert(j);
    degrees.insert(j - 1);
  }
  for (int j : degrees) {
    out.set(j, integral.at(j).tensor_mod(q).direct_sum(
                   integral.at(j + 1).tor_mod(q)));
  }
  return out;
}

int run_classify(const std::string& text) {
  const ptriv::SpaceSpec spec = ptriv::parse_spec(text);
  const ptriv::Verdict verdict = ptriv::classify(spec);
  std::cout << "space: " << ptriv::print_spec(spec) << "\n"
            << "status: " << ptriv::to_string(verdict.status) << "\n"
            << "rule: " << verdict.rule_id << "\n"
            << "citation: " << verdict.citation << "\n";
  if (auto certificate = ptriv::certify(spec)) {
    std::cout << "certificate: " << ptriv::to_string(certificate->kind)
              << "\n";
  }
  switch (verdict.status) {
    case ptriv::Triviality::PTrivial:
      return 0;
    case ptriv::Triviality::NotPTrivial:
      return 1;
    case ptriv::Triviality::NotCovered:
      return 2;
  }
  return kExitInternal;
}

int run_cohomology(const std::string& text, const std::string& coeff_name,
                   bool want_closed, bool want_both) {
  const ptriv::SpaceSpec spec = ptriv::parse_spec(text);
  const ptriv::Coefficients coeff = coefficients_of(coeff_name);

  auto closed_form = [&] {
    ptriv::GradedGroup g = ptriv::closed_form_cohomology(spec);
    return coeff.is_integers() ? g : reduce_graded(g, coeff.modulus);
  };
  auto from_complex = [&] {
    return ptriv::cohomology(ptriv::build_complex(spec), coeff);
  };

  if (!want_both) {
    const ptriv::GradedGroup groups =
        want_closed ? closed_form() : from_complex();
    for (const auto& [degree, group] : groups.by_degree) {
      std::cout << degree << ": " << group.to_string() << "\n";
    }
    return 0;
  }

  const ptriv::GradedGroup snf = from_complex();
  const ptriv::GradedGroup closed = closed_form();
  std::set<int> degrees;
  for (const auto& [j, g] : snf.by_degree) degrees.insert(j);
  for (const auto& [j, g] : closed.by_degree) degrees.insert(j);
  int mismatches = 0;
  for (int j : degrees) {
    const bool match = snf.at(j) == closed.at(j);
    mismatches += match ? 0 : 1;
    std::cout << j << ": snf=" << snf.at(j).to_string()
              << " closed=" << closed.at(j).to_string() << " "
              << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  if (mismatches == 0) {
    std::cout << "result: MATCH (" << degrees.size() << " degrees)\n";
    return 0;
  }
  std::cout << "result: MISMATCH (" << mismatches << " of " << degrees.size()
            << " degrees)\n";
  return 1;
}

int run_verify(const ptriv::VerifyOptions& opts) {
  const ptriv::VerifyReport report = ptriv::run_verification(opts);
  for (const auto& section : report.sections) {
    std::cout << section.name << ": " << section.points << " checks, "
              << section.failures << " failures\n";
  }
  if (!report.failures.empty()) {
    std::cout << "failures:\n";
    for (const auto& line : report.failures) std::cout << "  " << line << "\n";
  }
  std::cout << "coarse-criterion discrepancies (informational): "
            << report.discrepancies.size() << "\n";
  for (const auto& d : report.discrepancies) {
    std::cout << "  (" << d.m << "," << d.n << "," << d.k
              << ") case=" << ptriv::to_string(d.case_verdict.status)
              << " coarse=" << ptriv::to_string(d.coarse_verdict.status)
              << "\n";
  }
  if (report.ok()) {
    std::cout << "result: PASS (" << report.total_points() << " checks)\n";
    return 0;
  }
  std::cout << "result: FAIL (" << report.total_failures() << " of "
            << report.total_points() << " checks failed)\n";
  return 1;
}

int run_table(const std::string& family_name, int m_max, int n_max, int k_max,
              const std::string& format, const std::string& out_path) {
  const std::vector<ptriv::TableRow> rows =
      ptriv::make_table(family_of(family_name), m_max, n_max, k_max);
  const std::string payload =
      format == "json" ? ptriv::table_to_json(rows) : ptriv::table_to_csv(rows);
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kExitIo;
  }
  file << payload;
  file.flush();
  if (!file) {
    std::cerr << "error: write to " << out_path << " failed\n";
    return kExitIo;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"P-triviality classifier for suspended stunted projective "
               "spaces, with an exact chain-complex cross-checker"};
  app.require_subcommand(1);

  auto* classify_cmd =
      app.add_subcommand("classify", "Classify a space as P-trivial or not");
  std::string classify_text;
  classify_cmd->add_option("spec", classify_text, "Space, e.g. X(5,2)^1")
      ->required();

  auto* coh_cmd = app.add_subcommand(
      "cohomology", "Print reduced-cell cohomology by degree");
  std::string coh_text;
  std::string coh_coeff = "Z";
  bool coh_closed = false, coh_snf = false, coh_both = false;
  coh_cmd->add_option("spec", coh_text, "Space, e.g. X(5,2)^1")->required();
  coh_cmd->add_option("--coeff", coh_coeff, "Coefficients (default Z)")
      ->check(CLI::IsMember({"Z", "Z2", "Z4"}));
  auto* flag_closed = coh_cmd->add_flag("--closed-form", coh_closed,
                                        "Evaluate the closed-form tables");
  auto* flag_snf = coh_cmd->add_flag(
      "--snf", coh_snf, "Compute from the chain complex (default)");
  auto* flag_both =
      coh_cmd->add_flag("--both", coh_both, "Compute both and compare");
  flag_closed->excludes(flag_snf);
  flag_closed->excludes(flag_both);
  flag_snf->excludes(flag_both);

  auto* verify_cmd = app.add_subcommand(
      "verify", "Cross-check closed forms against the chain-complex engine "
                "over a parameter grid");
  ptriv::VerifyOptions verify_opts;
  std::string verify_family = "all";
  verify_cmd->add_option("--m-max", verify_opts.m_max, "Largest m (default 10)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--n-max", verify_opts.n_max,
                         "Largest n (default: only n < m)");
  verify_cmd->add_option("--k-max", verify_opts.k_max,
                         "Largest suspension count (default 6)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--family", verify_family, "X, Y or all (default)")
      ->check(CLI::IsMember({"X", "Y", "all"}));
  verify_cmd->add_option("--threads", verify_opts.threads,
                         "Worker threads (default: PTRIV_THREADS, then "
                         "hardware count)")
      ->check(CLI::NonNegativeNumber);

  auto* table_cmd =
      app.add_subcommand("table", "Emit the verdict table as CSV or JSON");
  std::string table_family = "all";
  int table_m_max = 10, table_n_max = -1, table_k_max = 6;
  std::string table_format = "csv";
  std::string table_out;
  table_cmd->add_option("--family", table_family, "X, Y or all (default)")
      ->check(CLI::IsMember({"X", "Y", "all"}));
  table_cmd->add_option("--m-max", table_m_max, "Largest m (default 10)")
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--n-max", table_n_max,
                        "Largest n (default: only n < m)");
  table_cmd->add_option("--k-max", table_k_max,
                        "Largest suspension count (default 6)")
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", table_format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--out", table_out, "Output file (default: stdout)");

  auto* phi_cmd = app.add_subcommand(
      "phi", "Count n < s <= m with s == 0,1,2,4 (mod 8)");
  long phi_m = 0, phi_n = 0;
  phi_cmd->add_option("m", phi_m, "Upper bound")->required();
  phi_cmd->add_option("n", phi_n, "Lower bound (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(classify_text);
    if (coh_cmd->parsed()) {
      return run_cohomology(coh_text, coh_coeff, coh_closed, coh_both);
    }
    if (verify_cmd->parsed()) {
      verify_opts.family = family_of(verify_family);
      return run_verify(verify_opts);
    }
    if (table_cmd->parsed()) {
      return run_table(table_family, table_m_max, table_n_max, table_k_max,
                       table_format, table_out);
    }
    if (phi_cmd->parsed()) {
      std::cout << ptriv::phi(phi_m, phi_n) << "\n";
      return 0;
    }
  } catch (const ptriv::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ptriv::InvalidSpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ptriv::BadRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ptriv::UnsupportedSpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
