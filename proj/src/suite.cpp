#include "rankone/suite.hpp"

#include <chrono>

namespace rankone {

namespace {

std::vector<SuiteEntry> build_entries() {
  std::vector<SuiteEntry> v;
  for (const char* ring : {"gaussian-q", "bicomplex", "split", "quaternion-q"})
    for (std::size_t n : {2, 3, 4}) v.push_back({"main-identity", ring, n, 100});
  for (std::size_t n : {2, 3}) {
    v.push_back({"closed-form", "gaussian-q", n, 100});
    v.push_back({"closed-form", "machine-complex", n, 100});
    v.push_back({"h-compat", "gaussian-q", n, 100});
    v.push_back({"cover-etale", "gaussian-q", n, 100});
    v.push_back({"i-square", "gaussian-q", n, 100});
    v.push_back({"quaternion-relations", "machine-complex", n, 100});
    v.push_back({"intertwine-bicomplex", "gaussian-q", n, 50});
    v.push_back({"intertwine-i", "gaussian-q", n, 50});
    v.push_back({"antisymplectic", "gaussian-q", n, 100});
    v.push_back({"polarization", "gaussian-q", n, 100});
  }
  for (const char* ring : {"fp:2", "fp:3", "fp:5", "zmod:6"}) v.push_back({"enumeration", ring, 2, 1});
  for (std::size_t n : {1, 2, 3, 4}) v.push_back({"embedding-pullback", "machine-complex", n, 50});
  for (std::size_t n : {2, 3}) {
    v.push_back({"variety", "machine-complex", n, 50});
    v.push_back({"variety-roundtrip", "machine-complex", n, 50});
    v.push_back({"potential", "machine-complex", n, 20});
    v.push_back({"nondegenerate", "gaussian-q", n, 50});
    v.push_back({"nondegenerate", "machine-complex", n, 50});
    v.push_back({"nijenhuis", "machine-complex", n, 20});
  }
  return v;
}

}  // namespace

const std::vector<SuiteEntry>& suite_entries() {
  static const std::vector<SuiteEntry> entries = build_entries();
  return entries;
}

StructureReport run_entry(const SuiteEntry& e, std::uint64_t seed, bool timing) {
  if (e.check == "enumeration") {
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_enumeration(e.ring, e.n, {}, false, false);
    const auto expected = image_count(e.ring, e.n);
    StructureReport rep;
    rep.check = e.check;
    rep.ring = e.ring;
    rep.n = e.n;
    rep.seed = seed;
    rep.trials = 1;
    rep.max_residual = result.count > expected ? double(result.count - expected) : double(expected - result.count);
    rep.pass = rep.max_residual == 0.0;
    if (timing) rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }
  TrialConfig cfg;
  cfg.seed = seed;
  cfg.trials = e.trials;
  cfg.ring = e.ring;
  cfg.n = e.n;
  cfg.tol = default_tolerance(e.check, e.ring);
  cfg.timing = timing;
  return run_check(e.check, cfg);
}

}  // namespace rankone
