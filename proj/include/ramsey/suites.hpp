#ifndef RAMSEY_SUITES_HPP
#define RAMSEY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

struct SuiteFailure {
  std::string description;  // human-readable, replayable payload
};

struct SuiteReport {
  std::string name;
  std::string universe;
  uint64_t checks = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
  std::string to_json() const;
};

struct SuiteCaps {
  int max_vertices = 0;          // 0 = suite default
  uint64_t random_instances = 0; // 0 = suite default
  uint64_t seed = 2024;
};

// Suites: equivalence, sandwich, identity, exponents, goalJ, least_frequent,
// mpq, ratios, harris, janson, turan, arrow_reduction.
SuiteReport run_suite(const std::string& name, const SuiteCaps& caps = {});
std::vector<std::string> suite_names();

}  // namespace ramsey

#endif  // RAMSEY_SUITES_HPP
