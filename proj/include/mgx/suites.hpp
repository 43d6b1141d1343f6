#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mgx {

struct SuiteCaps {
  std::optional<std::size_t> max_n;    // suite default when unset
  std::optional<std::size_t> samples;  // suite default when unset
  std::uint64_t seed = 1;
};

struct SuiteFailure {
  nlohmann::json graph;
  std::string expected;
  std::string actual;
};

struct SuiteResult {
  std::string suite;
  std::size_t checked = 0;
  std::vector<SuiteFailure> failures;
  std::size_t failures_dropped = 0;  // past the storage limit
  std::int64_t millis = 0;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const { return failures.empty(); }
  /// {"suite","checked","failures":[{"graph","expected","actual"}],"millis"},
  /// plus "notes" when there are any.
  [[nodiscard]] nlohmann::json to_json(bool with_timing = true) const;
};

inline constexpr std::size_t kStoredFailureLimit = 200;

const std::vector<std::string>& suite_names();

/// Runs one registered suite. Throws std::invalid_argument on an unknown
/// name.
SuiteResult run_suite(const std::string& name, const SuiteCaps& caps = {});

}  // namespace mgx
