#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nil2/ccalc.hpp"
#include "nil2/random.hpp"

namespace nil2 {

struct Outcome {
  enum class Status { Pass, Skip, Fail };
  Status status = Status::Pass;
  // For failures: the inputs, written as R-words and scalar literals.
  std::string detail;

  static Outcome pass() { return {}; }
  static Outcome skip() { return {Status::Skip, {}}; }
  static Outcome fail(std::string detail) { return {Status::Fail, std::move(detail)}; }
};

struct Property {
  std::string suite;
  std::string name;
  std::function<Outcome(Sampler&, const CReductionStrategy&)> run;
};

// Suites: axioms, facts, hall-oracle, confluence.
const std::vector<Property>& all_properties();
std::vector<std::string> suite_names();

struct PropertyReport {
  std::string suite;
  std::string name;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  // Shortest failing input.
  std::string counterexample;
};

struct RunConfig {
  CReductionStrategy strategy;
  std::uint64_t seed = 1;
  long cases = 100;
  // 0: one worker per hardware thread.
  unsigned workers = 0;
};

// Case i of a property always draws from Sampler(seed, stream(property, i)),
// so reports do not depend on the number of workers.
PropertyReport run_property(const Property& p, const RunConfig& config);

// suite is one of suite_names() or "all". Throws std::invalid_argument for
// an unknown suite.
std::vector<PropertyReport> run_suite(std::string_view suite, const RunConfig& config);

std::string format_report(const std::vector<PropertyReport>& reports);

}  // namespace nil2
