#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "acidzeta/core.hpp"

namespace acidzeta {

using ojson = nlohmann::ordered_json;

// every number is rounded to 12 significant digits before it enters a report, so a
// rerun with the same inputs serializes byte for byte
inline double report_num(double x) { return round12(x); }

// rows stay flat scalars so the JSON and CSV views carry identical columns
inline ojson to_json(const VerificationRecord& r) {
  ojson j;
  j["name"] = r.name;
  j["lhs_re"] = report_num(r.lhs.real());
  j["lhs_im"] = report_num(r.lhs.imag());
  j["rhs_re"] = report_num(r.rhs.real());
  j["rhs_im"] = report_num(r.rhs.imag());
  j["diff"] = report_num(r.diff);
  j["tol"] = report_num(r.tol);
  j["pass"] = r.pass;
  j["note"] = r.note;
  return j;
}

struct ReportEnvelope {
  std::string command;
  ojson inputs = ojson::object();
  ojson rows = ojson::array();
  ojson error_budget = ojson::object();

  ojson to_json() const {
    ojson j;
    j["schema_version"] = "1";
    j["command"] = command;
    j["inputs"] = inputs;
    j["rows"] = rows;
    j["error_budget"] = error_budget;
    return j;
  }

  void write_json(std::ostream& os) const { os << to_json().dump(2) << "\n"; }

  // the CSV view flattens the row objects; column order follows the first row
  void write_csv(std::ostream& os) const {
    if (rows.empty()) return;
    bool first = true;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
      if (!first) os << ",";
      os << it.key();
      first = false;
    }
    os << "\n";
    for (const auto& row : rows) {
      first = true;
      for (auto it = row.begin(); it != row.end(); ++it) {
        if (!first) os << ",";
        const auto& v = it.value();
        if (v.is_number_float())
          os << fmt12(v.get<double>());
        else if (v.is_string())
          os << v.get<std::string>();
        else
          os << v.dump();
        first = false;
      }
      os << "\n";
    }
  }
};

}  // namespace acidzeta
