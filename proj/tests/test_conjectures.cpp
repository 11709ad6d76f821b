#include <doctest.h>

#include <boost/crc.hpp>

#include <cstdio>

#include "brauer/conjectures.hpp"
#include "brauer/error.hpp"

using namespace brauer;

namespace {

std::string crc32(const std::string& text) {
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  char hex[9];
  std::snprintf(hex, sizeof hex, "%08x", static_cast<unsigned>(crc.checksum()));
  return hex;
}

GroundStates states_up_to(int max_length) {
  GroundStates states;
  for (int length = 2; length <= max_length; ++length) states.emplace(length, groundstate(length));
  return states;
}

const GroundStates& small_states() {
  static const GroundStates states = states_up_to(9);
  return states;
}

}  // namespace

TEST_CASE("oracle constants are pinned") {
  const auto& o = ReferenceOracles::get();
  CHECK(o.s3_degrees.size() == 6);
  CHECK(o.s3_degrees.at(Permutation({3, 2, 1})) == 31);
  CHECK(o.degree_2431 == 173);
  CHECK(o.long_permutation_sequence.size() == 8);
  CHECK(o.long_permutation_sequence.back() == mpz_class("1053765855157617"));
  CHECK(o.class_counts.size() == 5);
  CHECK(o.fingerprint() ==
        "s3:(123)=1;(132)=3;(213)=3;(231)=13;(312)=13;(321)=31;|(2431)=173|seq:1,3,31,1145,154881,77899563,"
        "147226330175,1053765855157617,|c:1,2,5,17,79,");
  CHECK(crc32(o.fingerprint()) == "bce88a60");
}

TEST_CASE("weight table at L=6") {
  const auto table = permutation_weight_table(small_states().at(6));
  REQUIRE(table.size() == 6);
  for (const auto& [pi, degree] : ReferenceOracles::get().s3_degrees) CHECK(table.at(DiagramLabel(pi)) == degree);
}

TEST_CASE("weight table at odd L") {
  const auto table = permutation_weight_table(small_states().at(5));
  CHECK(table.size() == 6);
  mpz_class sum = 0;
  for (const auto& [label, w] : table) sum += w;
  CHECK(sum == 16);
}

TEST_CASE("all checks pass on computed sizes") {
  for (const auto& [length, gs] : small_states()) {
    CAPTURE(length);
    CHECK(verify_integrality(gs).status == CheckStatus::pass);
    CHECK(verify_sum_rule(gs).status == CheckStatus::pass);
    const auto max = verify_maximality(gs);
    CHECK(max.status == (length % 2 ? CheckStatus::skip : CheckStatus::pass));
    for (const auto& r : verify_degrees(gs)) CHECK(r.status == CheckStatus::pass);
  }
  const auto fact = verify_factorization(small_states());
  CHECK(fact.size() == 6);  // targets 4..9
  for (const auto& r : fact) {
    CAPTURE(r.details);
    CHECK(r.status == CheckStatus::pass);
  }
}

TEST_CASE("checks report failures with the offending values") {
  auto orbits = small_states().at(6).orbits();
  for (auto& o : orbits) {
    if (o.weight == 31) o.weight = 64;
  }
  const GroundState bad(6, BasisKind::reduced, orbits);

  const auto sum = verify_sum_rule(bad);
  CHECK(sum.status == CheckStatus::fail);
  CHECK(sum.details.find("97") != std::string::npos);

  const auto max = verify_maximality(bad);
  CHECK(max.status == CheckStatus::pass);

  const auto degrees = verify_degrees(bad);
  REQUIRE(degrees.size() == 2);
  CHECK(degrees[0].status == CheckStatus::fail);
  CHECK(degrees[0].details.find("(expected 31)") != std::string::npos);

  GroundStates states = small_states();
  states.erase(6);
  states.emplace(6, bad);
  bool failed = false;
  for (const auto& r : verify_factorization(states)) {
    if (r.status == CheckStatus::fail && r.details.find("(3214)") != std::string::npos) failed = true;
  }
  CHECK(failed);
}

TEST_CASE("maximality detects ties") {
  auto orbits = small_states().at(6).orbits();
  for (auto& o : orbits) {
    if (o.weight == 13) o.weight = 31;
  }
  const auto r = verify_maximality(GroundState(6, BasisKind::reduced, orbits));
  CHECK(r.status == CheckStatus::fail);
  CHECK(r.details.find("tied") != std::string::npos);
}

TEST_CASE("gcd-only normalization fails integrality") {
  const auto rep = ChordDiagram::parse("2,1,4,3");
  const auto rep2 = ChordDiagram::parse("3,4,1,2");
  const GroundState gs(4, BasisKind::reduced, {{rep, 2, 2}, {rep2, 1, 3}});
  CHECK(verify_integrality(gs).status == CheckStatus::fail);
}

TEST_CASE("long permutation sequence") {
  const auto seq = long_permutation_sequence(4, small_states());
  CHECK(seq == std::vector<mpz_class>{1, 3, 31, 1145});
  CHECK(long_permutation_sequence(1, small_states()) == std::vector<mpz_class>{1});
  CHECK_THROWS_AS(long_permutation_sequence(5, small_states()), Error);
}

TEST_CASE("report formats") {
  const std::vector<CheckRecord> records{{"sum-rule", 4, CheckStatus::pass, "ok"},
                                         {"maximality", 5, CheckStatus::skip, "odd"}};
  const auto doc = to_json(records);
  REQUIRE(doc.is_array());
  CHECK(doc[0]["check"] == "sum-rule");
  CHECK(doc[0]["L"] == 4);
  CHECK(doc[0]["status"] == "PASS");
  CHECK(doc[1]["status"] == "SKIP");
  CHECK(doc[1]["details"] == "odd");
  const std::string table = to_table(records);
  CHECK(table.find("maximality") != std::string::npos);
  CHECK(table.find("SKIP") != std::string::npos);
}
