#pragma once

// Ground-state cache: one JSON document per system size.
//
//   {"checksum": "...", "generator": "reduced", "length": 6,
//    "normalization": "MIN_ENTRY_ONE",
//    "orbits": [{"representative": "2,1,4,3,6,5", "size": 2, "weight": "63"}, ...]}
//
// Weights are decimal strings. The checksum is the CRC-32 (hex) of the
// compact serialization of the document without its checksum field.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "brauer/kernel.hpp"

namespace brauer {

nlohmann::json to_json(const GroundState& gs);
/// Validates the checksum and contents; throws Errc::cache_corrupt.
GroundState ground_state_from_json(const nlohmann::json& doc);

std::string content_checksum(const nlohmann::json& doc);
/// Pretty-printed document with trailing newline, byte-stable for equal input.
std::string serialize(const GroundState& gs);

class GroundStateCache {
 public:
  explicit GroundStateCache(std::filesystem::path directory);

  /// Explicit flag, then $BRAUER_CACHE_DIR, then ".brauer-cache".
  static std::filesystem::path resolve_directory(const std::optional<std::string>& flag);

  const std::filesystem::path& directory() const noexcept { return directory_; }
  std::filesystem::path path_for(int length) const;

  std::optional<GroundState> load(int length) const;
  void store(const GroundState& gs) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace brauer
