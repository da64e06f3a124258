#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopf/json_io.hpp"

namespace hopf::verify {

struct PropertyResult {
  std::string name;
  int samples = 0;
  double tolerance = 0.0;
  double max_residual = 0.0;
  bool pass = true;
  /// Input state of the worst sample, for replay.
  io::json counterexample;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  bool pass() const;
};

struct Options {
  int samples = 200;
  std::uint64_t seed = 0;
  /// Replaces every property tolerance when set.
  std::optional<double> tol;
};

const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const Options& opt);

io::json to_json(const SuiteReport& r);

}  // namespace hopf::verify
