#pragma once

// The fixed acceptance matrix run by `rankone suite`.

#include <string>
#include <vector>

#include "rankone/checks.hpp"

namespace rankone {

struct SuiteEntry {
  std::string check;  // a check name, or "enumeration"
  std::string ring;
  std::size_t n;
  int trials;
};

struct CheckSuiteResult {
  std::vector<StructureReport> reports;
  bool pass = false;
  std::uint64_t seed = 0;
  bool timing = false;
};

const std::vector<SuiteEntry>& suite_entries();

/// Runs one entry. "enumeration" entries report |count - image_count| as the
/// residual with a single trial.
StructureReport run_entry(const SuiteEntry& e, std::uint64_t seed, bool timing);

/// Calls on_report after each entry so reports can be streamed.
template <class OnReport>
CheckSuiteResult run_suite(std::uint64_t seed, bool timing, OnReport&& on_report) {
  CheckSuiteResult out;
  out.seed = seed;
  out.timing = timing;
  out.pass = true;
  for (const auto& e : suite_entries()) {
    auto rep = run_entry(e, seed, timing);
    out.pass = out.pass && rep.pass;
    on_report(rep);
    out.reports.push_back(std::move(rep));
  }
  return out;
}

}  // namespace rankone
