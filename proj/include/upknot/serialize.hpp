#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "upknot/diagram.hpp"
#include "upknot/invariants.hpp"
#include "upknot/verify.hpp"

namespace upknot {

// Machine formats used by the command-line tool. Exponents are asserted
// integral and emitted as plain integers (the internal doubled representation
// never leaks). Coefficients are emitted as [num, den] with int64 payloads
// when they fit and decimal strings otherwise.

// [[e, num, den], ...] sorted by ascending exponent.
nlohmann::json terms_json(const Laurent1& p);

// [[e1, e2, num, den], ...] sorted lexicographically by (e1, e2).
nlohmann::json terms_json(const Laurent2& p);

// One computed result per input diagram. Absent invariants were not requested;
// absent timing means timing output is suppressed.
struct OutputDocument {
  std::string name;
  int crossings = 0;
  int writhe = 0;
  int total_rotation = 0;
  std::optional<Laurent1> delta;
  std::optional<Laurent1> rho1;
  std::optional<Laurent2> theta;
  std::optional<std::map<std::string, double>> timing_ms;
};

nlohmann::json document_json(const OutputDocument& doc);
std::string document_table(const OutputDocument& doc);

// {diagram, checks: [{name, pass, witness?}]}.
nlohmann::json report_json(const VerificationReport& rep);
std::string report_table(const VerificationReport& rep);

}  // namespace upknot
