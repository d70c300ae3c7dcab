#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hopfgal {

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string check;
  bool pass = false;
  std::string witness;  // failing element, value or short explanation
  Json parameters = Json::object();
};

// Aggregated outcome of a verification suite; serializes to the report-v1 schema.
struct Report {
  std::string suite;
  std::string preset;
  Json parameters = Json::object();
  std::vector<CheckResult> checks;

  bool pass() const;
  CheckResult& add(std::string check, bool pass, std::string witness = {}, Json parameters = Json::object());
  void merge(const Report& other);
  // Names of failing checks.
  std::vector<std::string> failures() const;

  Json to_json() const;
  std::string to_text() const;
};

}  // namespace hopfgal
