#pragma once

// Named structure checks over ring tags, shared by the CLI and the suite.
//
// Ring tags: rational (or q), gaussian-q, bicomplex, split, quaternion-q,
// machine-complex, fp:p (p prime), zmod:m. Checks: see check_names().

#include <cstdint>
#include <string>
#include <vector>

#include "rankone/harness.hpp"
#include "rankone/json_io.hpp"
#include "rankone/projspace.hpp"

namespace rankone {

const std::vector<std::string>& check_names();
bool is_check(const std::string& name);

/// Throws ParseError for tags that name no ring.
void validate_ring(const std::string& tag);
bool ring_is_exact(const std::string& tag);

/// Exact rings demand zero residuals; machine rings use per-check tolerances
/// on relative residuals.
double default_tolerance(const std::string& check, const std::string& ring);

/// Throws ParseError for unknown names, RingRefused when the ring lacks the
/// structure the check needs.
StructureReport run_check(const std::string& check, const TrialConfig& cfg);

struct EnumerationResult {
  std::string ring;
  std::size_t n = 0;
  std::uint64_t count = 0;
  double elapsed_ms = 0.0;
  std::vector<Json> points;  // filled when requested
};

/// Rank-1 projections over fp:p or zmod:m (2 <= m <= 32).
EnumerationResult run_enumeration(const std::string& ring, std::size_t n, const EnumerateOptions& opt = {},
                                  bool keep_points = false, bool timing = true);

/// Distinct products v u with u v = 1 over fp:p or zmod:m; counts rank-1
/// projections without the ideal generators.
std::uint64_t image_count(const std::string& ring, std::size_t n);

}  // namespace rankone
