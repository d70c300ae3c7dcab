#include "hopfgal/report.hpp"

#include <sstream>

namespace hopfgal {

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CheckResult& Report::add(std::string check, bool ok, std::string witness, Json params) {
  checks.push_back(CheckResult{std::move(check), ok, std::move(witness), std::move(params)});
  return checks.back();
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) {
    checks.push_back(c);
    if (!other.suite.empty() && other.suite != suite) checks.back().parameters["suite"] = other.suite;
    if (!other.preset.empty() && other.preset != preset) checks.back().parameters["preset"] = other.preset;
  }
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.check);
  return out;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = "report-v1";
  j["suite"] = suite;
  j["preset"] = preset;
  j["parameters"] = parameters;
  j["pass"] = pass();
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["check"] = c.check;
    e["preset"] = c.parameters.contains("preset") ? c.parameters["preset"] : Json(preset);
    e["parameters"] = c.parameters;
    e["pass"] = c.pass;
    e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << suite << " [" << preset << "]: " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) {
    out << "  " << (c.pass ? "ok   " : "FAIL ") << c.check;
    if (!c.parameters.empty()) out << " " << c.parameters.dump();
    if (!c.pass && !c.witness.empty()) out << "\n       " << c.witness;
    out << "\n";
  }
  return out.str();
}

}  // namespace hopfgal
