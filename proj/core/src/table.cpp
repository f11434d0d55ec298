#include "ptriv/table.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "ptriv/classifier.hpp"
#include "ptriv/space_spec.hpp"

namespace ptriv {

namespace {

TableRow row_for(const SpaceSpec& spec) {
  TableRow row;
  row.spec = print_spec(spec);
  const Verdict v = classify(spec);
  row.status = to_string(v.status);
  row.rule = v.rule_id;
  row.citation = v.citation;
  if (auto cert = certify(spec)) row.certificate = to_string(cert->kind);
  return row;
}

void append_family(std::vector<TableRow>& rows, Family family, int m_max,
                   int n_max, int k_max) {
  for (int m = 1; m <= m_max; ++m) {
    const int n_cap = n_max < 0 ? m - 1 : std::min(n_max, m - 1);
    for (int n = 0; n <= n_cap; ++n) {
      for (int k = 0; k <= k_max; ++k) {
        rows.push_back(row_for(family == Family::X ? stunted_real(m, n, k)
                                                   : stunted_complex(m, n, k)));
      }
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::vector<TableRow> make_table(Family family, int m_max, int n_max,
                                 int k_max) {
  std::vector<TableRow> rows;
  if (family != Family::Y) append_family(rows, Family::X, m_max, n_max, k_max);
  if (family != Family::X) append_family(rows, Family::Y, m_max, n_max, k_max);
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "spec,status,rule,citation,certificate\n";
  for (const TableRow& r : rows) {
    out << csv_field(r.spec) << ',' << csv_field(r.status) << ','
        << csv_field(r.rule) << ',' << csv_field(r.citation) << ','
        << csv_field(r.certificate) << '\n';
  }
  return out.str();
}

std::string table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TableRow& r : rows) {
    arr.push_back({{"spec", r.spec},
                   {"status", r.status},
                   {"rule", r.rule},
                   {"citation", r.citation},
                   {"certificate", r.certificate}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace ptriv
