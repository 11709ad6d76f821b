#pragma once

// Sampling cross-check of the ground state through the uniformized chain
// P = I - H/(3L): each step applies one of the 3L generator terms
// (e_i twice as likely as b_i) chosen uniformly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brauer/diagram.hpp"
#include "brauer/kernel.hpp"

namespace brauer {

struct MonteCarloOptions {
  std::uint64_t burn_in = 10000;  // per stream
  std::size_t streams = 10;
  std::size_t batches_per_stream = 10;
  unsigned threads = 0;
};

struct OrbitEstimate {
  ChordDiagram representative;
  std::size_t size = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::optional<double> exact;
  std::optional<double> z;
};

struct MonteCarloReport {
  int length = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<OrbitEstimate> orbits;  // canonical representative order

  double max_abs_z() const;
  /// True when every orbit with an exact value lies within `sigmas` errors.
  bool within(double sigmas) const;
  std::string to_table() const;
  nlohmann::json to_json() const;
};

/// Runs `samples` uniformized steps split across independent streams; the
/// estimates depend only on (L, samples, seed, options), not on threads.
MonteCarloReport monte_carlo_crosscheck(int length, std::uint64_t samples, std::uint64_t seed,
                                        const GroundState* exact = nullptr,
                                        const MonteCarloOptions& options = {});

}  // namespace brauer
