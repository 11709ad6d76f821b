#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "brauer/store.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = brauer::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct CacheDir {
  fs::path path = fs::temp_directory_path() / "brauer-cli-test-cache";
  CacheDir() { fs::remove_all(path); }
  ~CacheDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--length", "2"}).out == "2,1\n");
  const auto six = run({"enumerate", "--length", "6"});
  CHECK(six.code == 0);
  CHECK(lines(six.out).size() == 15);
  const auto classes = lines(run({"enumerate", "--length", "4", "--classes", "--format", "csv"}).out);
  CHECK(classes == std::vector<std::string>{"representative,size", "\"2,1,4,3\",2", "\"3,4,1,2\",1"});
  const auto doc = nlohmann::json::parse(run({"enumerate", "-L", "5", "--classes", "--format", "json"}).out);
  CHECK(doc.size() == 3);
}

TEST_CASE("groundstate csv and json") {
  CacheDir cache;
  const auto csv = run({"groundstate", "--length", "6", "--format", "csv", "--cache-dir", cache.path.string()});
  CHECK(csv.code == 0);
  CHECK(lines(csv.out) == std::vector<std::string>{
                              "representative,size,weight,label",
                              "\"2,1,4,3,6,5\",2,63,",
                              "\"2,1,6,5,4,3\",3,31,\"(321)\"",
                              "\"2,1,5,6,3,4\",6,13,\"(231) (312)\"",
                              "\"3,5,1,6,2,4\",3,3,\"(132) (213)\"",
                              "\"4,5,6,1,2,3\",1,1,\"(123)\"",
                          });
  const auto json = run({"groundstate", "--length", "6", "--format", "json", "--cache-dir", cache.path.string()});
  std::ifstream stored(cache.path / "groundstate_L6.json");
  std::stringstream bytes;
  bytes << stored.rdbuf();
  CHECK(json.out == bytes.str());
  const auto again = run({"groundstate", "--length", "6", "--format", "json", "--cache-dir", cache.path.string()});
  CHECK(again.out == json.out);

  const auto five = run({"groundstate", "--length", "5", "--cache-dir", cache.path.string()});
  CHECK(five.out.find("MIN_ENTRY_ONE") != std::string::npos);
  const auto full = run({"groundstate", "--length", "7", "--no-reduction", "--solver", "bareiss", "--format", "json",
                         "--cache-dir", cache.path.string()});
  CHECK(nlohmann::json::parse(full.out)["generator"] == "full");
}

TEST_CASE("verify") {
  CacheDir cache;
  const auto all = run({"verify", "--max-length", "8", "--which", "all", "--cache-dir", cache.path.string()});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  const auto degrees = run({"verify", "--max-length", "6", "--which", "degrees", "--format", "json",
                            "--cache-dir", cache.path.string()});
  const auto doc = nlohmann::json::parse(degrees.out);
  bool saw_s3 = false;
  for (const auto& r : doc) saw_s3 = saw_s3 || (r["check"] == "degrees-S3" && r["status"] == "PASS");
  CHECK(saw_s3);
  const auto two = run({"verify", "--max-length", "2", "--which", "integrality", "--cache-dir", cache.path.string()});
  CHECK(two.code == 0);
  CHECK(two.out.find("PASS") != std::string::npos);
}

TEST_CASE("verify exit codes follow the cache contents") {
  CacheDir cache;
  const auto dir = cache.path.string();
  auto doc = nlohmann::json::parse(run({"groundstate", "-L", "4", "--format", "json", "--cache-dir", dir}).out);
  CHECK(run({"verify", "--max-length", "4", "--cache-dir", dir}).code == 0);

  doc["orbits"][0]["weight"] = "5";
  doc["checksum"] = brauer::content_checksum(doc);
  std::ofstream(cache.path / "groundstate_L4.json") << doc.dump(2);
  const auto wrong = run({"verify", "--max-length", "4", "--which", "sum-rule", "--cache-dir", dir});
  CHECK(wrong.code == 1);
  CHECK(wrong.out.find("FAIL") != std::string::npos);

  doc["orbits"][0]["weight"] = "7";
  std::ofstream(cache.path / "groundstate_L4.json") << doc.dump(2);
  const auto corrupt = run({"verify", "--max-length", "4", "--cache-dir", dir});
  CHECK(corrupt.code == 3);
  CHECK(corrupt.err.find("CACHE_CORRUPT") != std::string::npos);
}

TEST_CASE("sequence") {
  CacheDir cache;
  const auto four = run({"sequence", "--max-n", "4", "--format", "csv", "--cache-dir", cache.path.string()});
  CHECK(lines(four.out) == std::vector<std::string>{"n,weight,oracle", "1,1,match", "2,3,match", "3,31,match",
                                                    "4,1145,match"});
  const auto six = run({"sequence", "--max-n", "6", "--cache-dir", cache.path.string()});
  CHECK(six.code == 0);
  CHECK(six.out.find("77899563") != std::string::npos);
}

TEST_CASE("count-classes") {
  const auto r = run({"count-classes", "--max-n", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"n,formula,enumerated,match", "1,1,1,yes", "2,2,2,yes", "3,5,5,yes",
                                                 "4,17,17,yes", "5,79,79,yes"});
  const auto big = run({"count-classes", "--max-n", "9", "--format", "json"});
  const auto doc = nlohmann::json::parse(big.out);
  CHECK(doc[8]["formula"] == "966156");
  CHECK(doc[8]["enumerated"].is_null());
}

TEST_CASE("simulate") {
  CacheDir cache;
  const auto r = run({"simulate", "--length", "4", "--samples", "200000", "--seed", "9", "--format", "json",
                      "--cache-dir", cache.path.string()});
  CHECK(r.code == 0);
  const auto again = run({"simulate", "--length", "4", "--samples", "200000", "--seed", "9", "--format", "json",
                          "--cache-dir", cache.path.string()});
  CHECK(again.out == r.out);
  CHECK(nlohmann::json::parse(r.out)["orbits"].size() == 2);
}

TEST_CASE("usage errors exit 2") {
  CacheDir cache;
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"enumerate", "--length", "1"}).code == 2);
  CHECK(run({"enumerate", "--length", "4", "--bogus"}).code == 2);
  CHECK(run({"groundstate", "--length", "4", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--max-length", "4", "--which", "everything"}).code == 2);
  CHECK(run({"simulate", "--length", "4", "--samples", "10", "--cache-dir", cache.path.string()}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("groundstate") != std::string::npos);
}
