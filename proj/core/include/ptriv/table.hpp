#pragma once

#include <string>
#include <vector>

#include "ptriv/verify.hpp"

namespace ptriv {

// One classification result in serializable form.  The spec text
// round-trips through parse_spec; certificate is the certificate kind
// ("vanishing-h4j" / "rho2-injective-suspension") or empty when the
// prover found none.
struct TableRow {
  std::string spec;
  std::string status;
  std::string rule;
  std::string citation;
  std::string certificate;
  bool operator==(const TableRow&) const = default;
};

// Classifies every grid point (m <= m_max, n < m and <= n_max if n_max >= 0,
// k <= k_max), real family first, each family ordered lexicographically by
// (m, n, k).  m_max = 0 yields an empty table.
std::vector<TableRow> make_table(Family family, int m_max, int n_max,
                                 int k_max);

// RFC 4180: fixed header line, fields quoted only when they contain a
// comma, quote or newline.  Byte-identical across runs.
std::string table_to_csv(const std::vector<TableRow>& rows);

// Array of objects with keys spec, status, rule, citation, certificate
// (in that order), two-space indent, trailing newline.
std::string table_to_json(const std::vector<TableRow>& rows);

}  // namespace ptriv
