#include "upknot/serialize.hpp"

#include <cstdint>
#include <sstream>

namespace upknot {

namespace {

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

}  // namespace

nlohmann::json terms_json(const Laurent1& p) {
  assert_integral_exponents(p);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({e / 2, integer_json(c.get_num()), integer_json(c.get_den())});
  return out;
}

nlohmann::json terms_json(const Laurent2& p) {
  assert_integral_exponents(p);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({e.a / 2, e.b / 2, integer_json(c.get_num()), integer_json(c.get_den())});
  return out;
}

nlohmann::json document_json(const OutputDocument& doc) {
  nlohmann::json j;
  j["name"] = doc.name;
  j["n"] = doc.crossings;
  j["w"] = doc.writhe;
  j["phi"] = doc.total_rotation;
  if (doc.delta) j["delta"] = terms_json(*doc.delta);
  if (doc.rho1) j["rho1"] = terms_json(*doc.rho1);
  if (doc.theta) j["theta"] = terms_json(*doc.theta);
  if (doc.timing_ms) j["timing_ms"] = *doc.timing_ms;
  return j;
}

std::string document_table(const OutputDocument& doc) {
  std::ostringstream os;
  os << doc.name << "  (n=" << doc.crossings << ", w=" << doc.writhe
     << ", phi=" << doc.total_rotation << ")\n";
  if (doc.delta) os << "  delta : " << doc.delta->str() << "\n";
  if (doc.rho1) os << "  rho1  : " << doc.rho1->str() << "\n";
  if (doc.theta) os << "  theta : " << doc.theta->str() << "\n";
  if (doc.timing_ms) {
    os << "  time  :";
    for (const auto& [k, ms] : *doc.timing_ms) os << " " << k << " " << ms << " ms;";
    os << "\n";
  }
  return os.str();
}

nlohmann::json report_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["diagram"] = rep.diagram;
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : rep.checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["checks"].push_back(e);
  }
  return j;
}

std::string report_table(const VerificationReport& rep) {
  std::ostringstream os;
  for (const CheckResult& c : rep.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << rep.diagram << " :: " << c.name;
    if (!c.witness.empty()) os << "  (" << c.witness << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace upknot
