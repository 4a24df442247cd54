#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bbsrsk/properties.hpp"
#include "bbsrsk/sampling.hpp"

namespace bbsrsk {

/// A randomized property: each case draws its inputs from its own generator.
struct Suite {
  std::string name;
  std::uint64_t stream = 0;  ///< suites sharing a stream see the same inputs
  std::size_t default_cases = 0;
  std::function<Failure(std::mt19937_64&, PassAudit&)> run_case;
};

/// The standard property suites, sampled within `bounds`.
std::vector<Suite> property_suites(const SamplerBounds& bounds = {});

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  PassAudit audit;
  std::vector<std::string> examples;  ///< first few failures, by case index

  bool passed() const noexcept { return failures == 0 && audit.inconsistent == 0; }
};

enum class Execution { serial, parallel };

/// Runs cases 0..cases-1. Case i uses case_rng(seed, suite.stream, i), so
/// serial and parallel runs report the same result. Exceptions count as
/// failures.
SuiteReport run_suite(const Suite& suite, std::uint64_t seed, std::size_t cases,
                      Execution execution = Execution::parallel);

}  // namespace bbsrsk
