#pragma once

// Seeded trial harness. Trial k draws from its own generator seeded by
// (seed, k), so reports do not depend on how trials are spread over workers.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "rankone/error.hpp"
#include "rankone/rings.hpp"

namespace rankone {

struct TrialConfig {
  std::uint64_t seed = 7;
  int trials = 100;
  double tol = 0.0;  // 0 demands exact zero residuals
  double fd_step = 1e-4;
  std::string ring = "gaussian-q";
  std::size_t n = 2;
  unsigned workers = 1;
  bool timing = true;

  void validate() const {
    if (trials < 1) throw DomainError("trials must be at least 1");
    if (tol < 0.0) throw DomainError("tolerance must be nonnegative");
    if (!(fd_step > 0.0)) throw DomainError("finite-difference step must be positive");
    if (n < 1) throw DomainError("n must be at least 1");
  }
};

struct StructureReport {
  std::string check;
  std::string ring;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  double max_residual = 0.0;
  bool pass = false;
  double elapsed_ms = 0.0;
};

inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

/// Runs cfg.trials independent trials and folds their residuals with max.
/// Passes iff the largest residual is <= cfg.tol.
template <class Trial>
StructureReport run_trials(const std::string& check, const TrialConfig& cfg, Trial&& trial) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<double> residuals(static_cast<std::size_t>(cfg.trials), 0.0);
  auto body = [&](int k) {
    Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
    residuals[static_cast<std::size_t>(k)] = trial(rng);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(cfg.trials)));
  if (workers == 1) {
    for (int k = 0; k < cfg.trials; ++k) body(k);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (int k = static_cast<int>(w); k < cfg.trials; k += static_cast<int>(workers)) body(k);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  StructureReport rep;
  rep.check = check;
  rep.ring = cfg.ring;
  rep.n = cfg.n;
  rep.seed = cfg.seed;
  rep.trials = cfg.trials;
  for (double r : residuals) rep.max_residual = std::isnan(r) ? INFINITY : std::max(rep.max_residual, r);
  rep.pass = rep.max_residual <= cfg.tol;
  if (cfg.timing)
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace rankone
