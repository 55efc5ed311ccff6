#pragma once

// Orchestration: runs the exact suites and numeric sweeps for a RunConfig and
// collects the verdicts in a Report.

#include "oddzeta/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace oddzeta {

inline constexpr const char* kVersion = "1.0.0";

enum class Mode { verify_exact, decay_table, asymptotics, zeta_table, selftest, all };
enum class Format { json, csv, human };

std::string to_string(Mode m);
std::string to_string(Format f);
/// Throw ConfigError on unknown names.
Mode parse_mode(const std::string& name);
Format parse_format(const std::string& name);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Test hook: add 1/(d_n^s p) to a[i][k] of the table at index n, p the
/// least prime above n.
struct FaultSpec {
  int n = 1;
  int i = 1;
  int k = 0;
};

/// "n,i,k"; throws ConfigError.
FaultSpec parse_fault(const std::string& text);

struct ScanRange {
  int from = 7;
  int to = 41;
};

/// "a..b" with a, b odd; throws ConfigError.
ScanRange parse_scan(const std::string& text);

struct RunConfig {
  int s = 25;
  int n_min = 1;
  int n_max = 12;
  int precision = 40;  // decimal digits of relative accuracy
  Mode mode = Mode::verify_exact;
  Format format = Format::json;
  std::optional<ScanRange> scan_s;
  std::uint64_t seed = 1;
  long max_cutoff = 1L << 22;
  // decay-table evaluates the zeta-basis route as a cross-check up to this n;
  // the direct series is used throughout.
  int basis_n_max = 60;
  int samples = 10000;  // selftest: containment samples per operation class
  std::optional<FaultSpec> fault;

  /// Throws ConfigError when an invariant is violated.
  void validate() const;
};

nlohmann::ordered_json config_json(const RunConfig& c);

/// Validates, then runs. Throws ConfigError for an invalid config.
Report run(const RunConfig& config);

std::string render(const Report& r, Format f);

/// Per-class outcome of randomized enclosure containment sampling.
struct SoundnessClass {
  std::string op;
  int samples = 0;
  int violations = 0;
};

/// Random exact or tightly-enclosed inputs, each operation's output tested
/// against an exact rational result or a directly computed MPFR bracket at
/// much higher precision.
std::vector<SoundnessClass> enclosure_soundness(std::uint64_t seed, int samples_per_class);

}  // namespace oddzeta
