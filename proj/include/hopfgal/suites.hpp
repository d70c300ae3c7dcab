#pragma once

#include <string>
#include <vector>

#include "hopfgal/chern.hpp"

namespace hopfgal {

// Bad configuration (unknown suite, suite not applicable to the preset, bad flag value).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::string preset = "super-s3";
  std::string suite = "all";
  int range = 3;
  size_t degree_bound = 6;
  size_t grid_theta = 32, grid_phi = 32;
  unsigned seed = 1;
  std::string form = "strong";  // connection suite: strong | nonstrong
  bool corrupt_witness = false;  // iso suite: zero one entry of L (negative control)
};

const std::vector<std::string>& suite_names();  // without "all"
bool suite_applies(const std::string& suite, const Preset& preset);

// Throws UsageError before any computation when the configuration is invalid.
void validate(const SuiteConfig& cfg);
Report run_suite(const SuiteConfig& cfg);

// "32x32" -> (32, 32); throws UsageError.
std::pair<size_t, size_t> parse_grid(const std::string& text);

}  // namespace hopfgal
