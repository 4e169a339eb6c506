#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lune/sphere.hpp"

namespace lune {

struct SuiteReport {
  std::string theorem_id;
  std::size_t cases_run = 0;
  double worst_violation = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::vector<std::string> errors;  // geometry errors raised by individual cases
};

/// Generator controls shared by every suite. Zero or empty fields select the
/// suite's defaults.
struct GeneratorSpec {
  std::size_t cases = 0;
  std::vector<int> ngons;
  double lo = 0.0;  // parameter range, used when lo < hi
  double hi = 0.0;
  std::vector<double> values;  // explicit parameters, cycled; overrides the range
  double density = 1.0;        // multiplier on per-case sample counts
  bool invert = false;         // negate every assertion (mutation check)
};

/// Registered suite identifiers, in execution order.
const std::vector<std::string>& suite_ids();
bool is_suite_id(const std::string& id);

/// Runs one suite. Throws UnknownTheoremId for unregistered ids.
SuiteReport run_suite(const std::string& theorem_id, const GeneratorSpec& spec, std::uint64_t seed,
                      const Tolerance& tol = {});

/// One JSON object on one line.
std::string to_json_line(const SuiteReport& report);

struct FlaggedCase {
  std::size_t trial = 0;
  int n = 0;
  double jitter = 0.0;
  double diameter = 0.0;
  double width_deviation = 0.0;    // at base density
  double refined_deviation = 0.0;  // at doubled density
};

struct SearchReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t constant_diameter_candidates = 0;
  std::vector<FlaggedCase> flagged;
  std::string summary;
};

/// Looks for bodies of constant diameter w < pi/2 that are not of constant
/// width w among jittered Reuleaux vertex sets. Reports, never concludes.
SearchReport search_constant_diameter_counterexample(std::uint64_t seed, std::size_t trials,
                                                     double density = 1.0,
                                                     const Tolerance& tol = {});

std::string to_json_line(const SearchReport& report);

}  // namespace lune
