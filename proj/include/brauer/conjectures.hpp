#pragma once

// Checks of ground-state weights against (partial) permutation structure and
// stored reference values. Failures are reported, never thrown.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "brauer/diagram.hpp"
#include "brauer/kernel.hpp"

namespace brauer {

/// Reference constants the computed weights are compared against.
struct ReferenceOracles {
  std::map<Permutation, mpz_class> s3_degrees;
  Permutation degree_2431_permutation{std::vector<int>{2, 4, 3, 1}};
  mpz_class degree_2431;
  /// Long-permutation weights for n = 1..8.
  std::vector<mpz_class> long_permutation_sequence;
  /// Class counts c_n for n = 1..5.
  std::vector<mpz_class> class_counts;

  static const ReferenceOracles& get();
  /// Canonical text rendering, used to pin the constants in tests.
  std::string fingerprint() const;
};

enum class CheckStatus { pass, fail, skip };
std::string to_string(CheckStatus status);

struct CheckRecord {
  std::string check;
  int length = 0;
  CheckStatus status = CheckStatus::skip;
  std::string details;

  bool ok() const noexcept { return status != CheckStatus::fail; }
};

nlohmann::json to_json(const std::vector<CheckRecord>& records);
std::string to_table(const std::vector<CheckRecord>& records);

using GroundStates = std::map<int, GroundState>;

/// Weight of every labelled diagram of the ground state's length.
std::map<DiagramLabel, mpz_class> permutation_weight_table(const GroundState& gs);

CheckRecord verify_integrality(const GroundState& gs);
/// Concatenation products over every pair of computed sizes whose sum was
/// also computed; one record per target length.
std::vector<CheckRecord> verify_factorization(const GroundStates& states);
CheckRecord verify_maximality(const GroundState& gs);
CheckRecord verify_sum_rule(const GroundState& gs);
/// Stored oracle comparisons available at this length (S3 table, the
/// (2,4,3,1) degree, long-permutation sequence entries).
std::vector<CheckRecord> verify_degrees(const GroundState& gs);

/// Long-permutation weights for n = 1..max_n; needs ground states at L = 2n.
std::vector<mpz_class> long_permutation_sequence(int max_n, const GroundStates& states);

}  // namespace brauer
