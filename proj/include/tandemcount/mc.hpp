#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "tandemcount/rng.hpp"
#include "tandemcount/walk.hpp"

namespace tandemcount {

/// One simulated free walk under the mu-step distributions: P walks start at
/// the origin with per-step weights z0^((dy-dx)/2); S walks start at (0,2)
/// and draw aggregated steps (SE plus a geometric number of weighted
/// face-steps). stayed_in_region tracks the quadrant (P) or the shifted
/// quadrant {x>=0, y>=1} (S); box_exited tracks leaving
/// [-n^(2/3), n^(2/3)]^2 at any visited point.
struct McSample {
  LatticePoint endpoint;
  bool stayed_in_region = false;
  bool box_exited = false;

  bool survived_to_11() const { return stayed_in_region && endpoint == LatticePoint{1, 1}; }
};

McSample mc_sample(Model model, int n, Xoshiro256pp& rng);

/// Seeded Monte Carlo aggregate. Deterministic for fixed (model, n, samples,
/// seed) regardless of worker count: samples are processed in fixed-size
/// chunks with jump-derived RNG substreams and merged in chunk order with
/// integer accumulators.
struct McReport {
  Model model = Model::P;
  int n = 0;
  long long samples = 0;
  std::uint64_t seed = 0;

  double survival_frequency = 0.0;
  double survival_radius = 0.0;  // 3 binomial standard errors
  /// Exact survival probability (DP count times the path weight); negative
  /// when n is too large to evaluate the DP cheaply.
  double survival_reference = -1.0;

  std::array<double, 2> endpoint_mean{};
  std::array<std::array<double, 2>, 2> endpoint_covariance_over_n{};
  /// CLT reference matrix entries (reference covariance divided by gamma_plus(1,1)).
  double clt_a = 0.0;
  double clt_b = 0.0;

  double box_exit_frequency = 0.0;
  double box_exit_radius = 0.0;

  std::string to_json() const;
};

McReport mc_estimate(Model model, int n, long long samples, std::uint64_t seed);

/// Worker cap: TANDEMCOUNT_THREADS when set, else hardware concurrency.
int mc_thread_cap();

}  // namespace tandemcount
