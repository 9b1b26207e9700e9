#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "rcgen/verify.hpp"

namespace rcgen {

//! 17 significant digits: enough to round-trip a double, and stable across
//! runs for the byte-identical-report contract.
inline std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline nlohmann::json complex_to_json(Complex v) {
  return nlohmann::json{{"re", v.real()}, {"im", v.imag()}};
}

//! One newline-delimited record per check.
inline std::string render_checks_json(const std::vector<CheckResult>& checks) {
  std::string out;
  for (const auto& c : checks) {
    nlohmann::json j{{"check", c.name},
                     {"residual", c.residual},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

//! CSV alternative with flattened value fields.
inline std::string render_checks_csv(const std::vector<CheckResult>& checks) {
  std::string out = "check,residual,tolerance,pass\n";
  for (const auto& c : checks) {
    out += c.name + "," + format_double(c.residual) + "," + format_double(c.tolerance) + "," +
           (c.pass ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace rcgen
