#pragma once

// Seeded property-verification suites covering the library's invariants:
// algebra identities, motion equivariance, bundle round trips, conformal
// model checks, projective tensor calculus, geodesics, and convergence of
// the numerical kernels. Every suite draws its inputs from a splitmix64
// stream derived from (seed, suite name), so reports are reproducible byte
// for byte for a fixed seed.

#include <cstdint>
#include <string>
#include <vector>

#include "degenspace/numerics.hpp"

namespace degenspace {

struct SuiteResult {
  std::string name;
  long cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string worst_case;  // input that produced max_residual
};

struct VerifyReport {
  std::uint64_t seed = 0;
  long trials = 0;
  std::vector<SuiteResult> suites;
  bool all_pass = false;
};

// Names of all suites, in the (sorted) order run_verification uses.
std::vector<std::string> suite_names();

// Runs one suite. `trials` is the number of random cases for randomized
// suites; grid and fixed-case suites ignore it. Throws std::invalid_argument
// for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, long trials,
                      const Tolerances& tol = {});

VerifyReport run_verification(std::uint64_t seed, long trials, const Tolerances& tol = {});

}  // namespace degenspace
