#pragma once

// Named self-check suites over F_n, run by `ncchain verify`.

#include <cstddef>
#include <string>
#include <vector>

namespace ncchain {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few, with offending words
  std::vector<std::string> notes;     // observations that never fail a suite
  bool passed() const { return failed == 0; }
};

/// chains, moves, phi, inversions, hecke, weak, intervals, catalan, trees,
/// metrics, converse.
const std::vector<std::string>& suite_names();

/// Runs every suite, or only `only` if non-empty. Throws
/// std::invalid_argument for an unknown suite name or n outside 2..kMaxN.
std::vector<SuiteResult> run_verification(int n, const std::string& only = "", unsigned threads = 1);

}  // namespace ncchain
