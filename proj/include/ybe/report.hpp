#pragma once

#include <string>
#include <vector>

#include "ybe/matrix.hpp"
#include "ybe/yang_baxter.hpp"

namespace ybe {

/// Shared configuration for verification suites and the CLI.
struct RunConfig {
  double tolerance = 1e-10;
  cxd nu{1.0, 0.0};
  int epsilon = +1;
  Convention convention = Convention::kPlus;
  std::uint64_t seed = 42;
  int samples = 1000;
  bool timing = false;  // include wall time in reports (breaks byte identity)
};

struct CheckRecord {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ReportDocument {
  std::string suite;
  RunConfig config;
  std::vector<CheckRecord> records;  // sorted by name before emission
  double wall_time_seconds = -1.0;   // < 0: omitted from output
  bool passed() const;
};

/// Valid suite names: braid, tla, ybe2d, ybe4d, reduction, optics2d,
/// optics4d, decomposition, all. Throws std::invalid_argument otherwise.
ReportDocument run_suite(const std::string& suite, const RunConfig& config);

std::string report_to_json(const ReportDocument& report);

std::string convention_name(Convention c);
Convention convention_from_name(const std::string& name);

}  // namespace ybe
