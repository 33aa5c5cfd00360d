#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quademb/json_io.hpp"

namespace quademb {

struct CheckFailure {
  std::uint64_t seed;
  std::string witness;
};

struct CheckResult {
  std::string name;
  std::size_t samples;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// catalog, clifford, embedding, spin, suslin.
const std::vector<std::string>& suite_names();

/// Runs one suite; every random check draws sample k from seed + k.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t samples);

/// `name` is a suite or "all" (every suite, in name order).
std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed, std::size_t samples);

Json to_json(const SuiteReport& r);
/// {"seed", "samples", "suites": [...], "pass"}
Json report_json(const std::vector<SuiteReport>& reports, std::uint64_t seed, std::size_t samples);

}  // namespace quademb
