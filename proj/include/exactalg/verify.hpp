#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exactalg/document.hpp"

namespace exactalg {

struct Verdict {
  std::string suite;
  std::string law;
  std::string instance;
  bool pass = false;
  // Offending element or failed comparison; never empty on failure.
  std::string witness;
  double millis = 0;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  // Uses the seed (random instances over F_3 and Q).
  bool seeded = false;
};

const std::vector<SuiteInfo>& verify_suites();
bool is_suite(const std::string& name);

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t enum_bound = kDefaultEnumerationBound;
  // Run independent suites on separate threads.
  bool parallel = true;
};

// Throws std::invalid_argument on an unknown suite name.
std::vector<Verdict> run_suite(const std::string& name, const VerifyOptions& opts = {});
// Every suite, or one of them when name is not "all"; ordered by suite name.
std::vector<Verdict> run_verify(const std::string& name, const VerifyOptions& opts = {});

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);
bool all_pass(const std::vector<Verdict>& vs);

}  // namespace exactalg
