#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flagval {

enum class RunMode { Exhaustive, Sampled };
std::string_view to_string(RunMode m);
RunMode parse_run_mode(std::string_view text);

struct SuiteConfig {
  std::string suite;
  std::optional<std::uint32_t> q;  // field order, or the prime p
  std::optional<RunMode> mode;     // suite default when absent
  std::optional<std::uint64_t> seed;
  std::optional<int> arena_degree;
  std::optional<std::uint64_t> samples;
  bool timing = false;  // adds elapsed_ms, which breaks byte-identity
};

// Key order: suite, version, config, cases_total, passes, violation_count,
// violations, witnesses, details, elapsed_ms.
struct Report {
  std::string suite;
  nlohmann::ordered_json config;
  std::uint64_t cases_total = 0;
  std::uint64_t passes = 0;
  std::uint64_t violation_count = 0;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();  // first kMaxListed
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::optional<std::int64_t> elapsed_ms;

  static constexpr std::size_t kMaxListed = 20;

  void add_violation(nlohmann::ordered_json witness);
  bool ok() const { return violation_count == 0; }
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws UnknownSuite, SizeBound, InvalidConfig.
Report run_suite(const SuiteConfig& config);

std::string_view library_version();

}  // namespace flagval
