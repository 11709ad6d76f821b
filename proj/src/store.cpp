#include "brauer/store.hpp"

#include <boost/crc.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

using nlohmann::json;

std::string content_checksum(const json& doc) {
  json body = doc;
  body.erase("checksum");
  const std::string bytes = body.dump();
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  char hex[9];
  std::snprintf(hex, sizeof hex, "%08x", static_cast<unsigned>(crc.checksum()));
  return hex;
}

json to_json(const GroundState& gs) {
  json orbits = json::array();
  for (const auto& o : gs.orbits()) {
    orbits.push_back({{"representative", o.representative.to_string()},
                      {"size", o.size},
                      {"weight", o.weight.get_str()}});
  }
  json doc = {{"length", gs.length()},
              {"normalization", gs.normalization()},
              {"generator", to_string(gs.generator())},
              {"orbits", std::move(orbits)}};
  doc["checksum"] = content_checksum(doc);
  return doc;
}

GroundState ground_state_from_json(const json& doc) {
  try {
    if (doc.at("checksum").get<std::string>() != content_checksum(doc)) {
      throw Error(Errc::cache_corrupt, "checksum mismatch");
    }
    const int length = doc.at("length").get<int>();
    const std::string generator = doc.at("generator").get<std::string>();
    if (generator != "full" && generator != "reduced") throw Error(Errc::cache_corrupt, "bad generator field");
    std::vector<OrbitWeight> orbits;
    for (const auto& o : doc.at("orbits")) {
      OrbitWeight entry;
      entry.representative = ChordDiagram::parse(o.at("representative").get<std::string>());
      entry.size = o.at("size").get<std::size_t>();
      if (entry.weight.set_str(o.at("weight").get<std::string>(), 10) != 0) {
        throw Error(Errc::cache_corrupt, "bad weight string");
      }
      orbits.push_back(std::move(entry));
    }
    GroundState gs(length, generator == "full" ? BasisKind::full : BasisKind::reduced, std::move(orbits));
    if (gs.normalization() != doc.at("normalization").get<std::string>()) {
      throw Error(Errc::cache_corrupt, "normalization tag disagrees with weights");
    }
    return gs;
  } catch (const Error& e) {
    if (e.code() == Errc::cache_corrupt) throw;
    throw Error(Errc::cache_corrupt, e.what());
  } catch (const json::exception& e) {
    throw Error(Errc::cache_corrupt, e.what());
  }
}

std::string serialize(const GroundState& gs) { return to_json(gs).dump(2) + "\n"; }

// ---------------------------------------------------------------------------

GroundStateCache::GroundStateCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path GroundStateCache::resolve_directory(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("BRAUER_CACHE_DIR"); env && *env) return env;
  return ".brauer-cache";
}

std::filesystem::path GroundStateCache::path_for(int length) const {
  return directory_ / ("groundstate_L" + std::to_string(length) + ".json");
}

std::optional<GroundState> GroundStateCache::load(int length) const {
  const auto path = path_for(length);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::exception& e) {
    throw Error(Errc::cache_corrupt, path.string() + ": " + e.what());
  }
  GroundState gs = ground_state_from_json(doc);
  if (gs.length() != length) throw Error(Errc::cache_corrupt, path.string() + ": length mismatch");
  return gs;
}

void GroundStateCache::store(const GroundState& gs) const {
  std::filesystem::create_directories(directory_);
  const auto path = path_for(gs.length());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize(gs);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace brauer
