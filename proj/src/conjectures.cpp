#include "brauer/conjectures.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

const ReferenceOracles& ReferenceOracles::get() {
  static const ReferenceOracles oracles = [] {
    ReferenceOracles o;
    o.s3_degrees = {
        {Permutation({1, 2, 3}), 1},  {Permutation({1, 3, 2}), 3},  {Permutation({2, 1, 3}), 3},
        {Permutation({2, 3, 1}), 13}, {Permutation({3, 1, 2}), 13}, {Permutation({3, 2, 1}), 31},
    };
    o.degree_2431 = 173;
    for (const char* term : {"1", "3", "31", "1145", "154881", "77899563", "147226330175", "1053765855157617"}) {
      o.long_permutation_sequence.emplace_back(term);
    }
    for (unsigned long c : {1ul, 2ul, 5ul, 17ul, 79ul}) o.class_counts.emplace_back(c);
    return o;
  }();
  return oracles;
}

std::string ReferenceOracles::fingerprint() const {
  std::ostringstream out;
  out << "s3:";
  for (const auto& [pi, d] : s3_degrees) out << pi.to_string() << '=' << d.get_str() << ';';
  out << "|" << degree_2431_permutation.to_string() << '=' << degree_2431.get_str();
  out << "|seq:";
  for (const auto& t : long_permutation_sequence) out << t.get_str() << ',';
  out << "|c:";
  for (const auto& c : class_counts) out << c.get_str() << ',';
  return out.str();
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "SKIP";
}

nlohmann::json to_json(const std::vector<CheckRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) {
    out.push_back({{"check", r.check}, {"L", r.length}, {"status", to_string(r.status)}, {"details", r.details}});
  }
  return out;
}

std::string to_table(const std::vector<CheckRecord>& records) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "check" << std::setw(5) << "L" << std::setw(7) << "status"
      << "details\n";
  for (const auto& r : records) {
    out << std::left << std::setw(16) << r.check << std::setw(5) << r.length << std::setw(7)
        << to_string(r.status) << r.details << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

std::map<DiagramLabel, mpz_class> permutation_weight_table(const GroundState& gs) {
  std::map<DiagramLabel, mpz_class> table;
  for (auto& label : all_labels(gs.length())) {
    const mpz_class& w = gs.weight_of(diagram_of(label));
    table.emplace(std::move(label), w);
  }
  return table;
}

namespace {

CheckRecord record(std::string check, int length, bool passed, std::string details) {
  return {std::move(check), length, passed ? CheckStatus::pass : CheckStatus::fail, std::move(details)};
}

}  // namespace

CheckRecord verify_integrality(const GroundState& gs) {
  const auto smallest = std::min_element(gs.orbits().begin(), gs.orbits().end(),
                                         [](const auto& a, const auto& b) { return a.weight < b.weight; });
  return record("integrality", gs.length(), gs.min_is_one(),
                "min weight " + smallest->weight.get_str() + " after gcd normalization");
}

std::vector<CheckRecord> verify_factorization(const GroundStates& states) {
  std::map<int, std::vector<std::pair<DiagramLabel, mpz_class>>> tables;
  for (const auto& [length, gs] : states) {
    auto table = permutation_weight_table(gs);
    tables[length].assign(table.begin(), table.end());
  }

  std::vector<CheckRecord> records;
  for (const auto& [target, target_gs] : states) {
    std::size_t products = 0;
    std::ostringstream failures;
    std::size_t failed = 0;
    for (const auto& [first_length, first] : tables) {
      const int second_length = target - first_length;
      if (first_length % 2 && second_length % 2) continue;
      const auto second = tables.find(second_length);
      if (second == tables.end()) continue;
      for (const auto& [a, wa] : first) {
        for (const auto& [b, wb] : second->second) {
          const DiagramLabel joined = concatenate(a, b);
          const mpz_class& w = target_gs.weight_of(diagram_of(joined));
          ++products;
          if (w != wa * wb) {
            if (failed++ < 3) {
              failures << label_to_string(a) << "+" << label_to_string(b) << "=" << label_to_string(joined)
                       << ": " << w.get_str() << " != " << wa.get_str() << "*" << wb.get_str() << "; ";
            }
          }
        }
      }
    }
    if (products == 0) continue;
    std::string details = std::to_string(products) + " concatenations";
    if (failed) details += ", " + std::to_string(failed) + " mismatches: " + failures.str();
    records.push_back(record("factorization", target, failed == 0, details));
  }
  return records;
}

CheckRecord verify_maximality(const GroundState& gs) {
  const int length = gs.length();
  if (length % 2) return {"maximality", length, CheckStatus::skip, "no permutation labels at odd L"};
  const int n = length / 2;
  const auto table = permutation_weight_table(gs);
  const mpz_class& longest = table.at(DiagramLabel(Permutation::longest(n)));
  std::size_t ties = 0;
  std::string beaten;
  for (const auto& [label, w] : table) {
    if (label == DiagramLabel(Permutation::longest(n))) continue;
    if (w > longest) beaten = label_to_string(label) + " has " + w.get_str();
    if (w == longest) ++ties;
  }
  if (!beaten.empty()) return record("maximality", length, false, "long permutation weight " + longest.get_str() + " < " + beaten);
  if (ties) return record("maximality", length, false, "long permutation weight " + longest.get_str() + " tied " + std::to_string(ties) + " time(s)");
  return record("maximality", length, true, "long permutation weight " + longest.get_str() + " is the strict maximum");
}

CheckRecord verify_sum_rule(const GroundState& gs) {
  const int length = gs.length();
  const unsigned long n = static_cast<unsigned long>(length / 2);
  mpz_class sum = 0;
  std::size_t count = 0;
  for (const auto& [label, w] : permutation_weight_table(gs)) {
    sum += w;
    ++count;
  }
  mpz_class expected;
  const unsigned long exponent = length % 2 ? n * n : n * n - n;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, exponent);
  return record("sum-rule", length, sum == expected,
                "sum over " + std::to_string(count) + " labelled diagrams = " + sum.get_str() + ", 2^" +
                    std::to_string(exponent) + " = " + expected.get_str());
}

std::vector<CheckRecord> verify_degrees(const GroundState& gs) {
  const auto& oracles = ReferenceOracles::get();
  const int length = gs.length();
  std::vector<CheckRecord> records;
  if (length == 6) {
    std::ostringstream details;
    bool ok = true;
    for (const auto& [pi, degree] : oracles.s3_degrees) {
      const mpz_class& w = gs.weight_of(diagram_of(pi));
      details << pi.to_string() << "=" << w.get_str() << (w == degree ? "" : " (expected " + degree.get_str() + ")") << " ";
      ok = ok && w == degree;
    }
    records.push_back(record("degrees-S3", length, ok, details.str()));
  }
  if (length == 8) {
    const mpz_class& w = gs.weight_of(diagram_of(oracles.degree_2431_permutation));
    records.push_back(record("degree-2431", length, w == oracles.degree_2431,
                             oracles.degree_2431_permutation.to_string() + " weight " + w.get_str() +
                                 ", expected " + oracles.degree_2431.get_str()));
  }
  if (length % 2 == 0) {
    const auto n = static_cast<std::size_t>(length / 2);
    if (n <= oracles.long_permutation_sequence.size()) {
      const mpz_class& w = gs.weight_of(diagram_of(Permutation::longest(static_cast<int>(n))));
      const mpz_class& expected = oracles.long_permutation_sequence[n - 1];
      records.push_back(record("long-sequence", length, w == expected,
                               "weight " + w.get_str() + ", expected " + expected.get_str()));
    }
  }
  return records;
}

std::vector<mpz_class> long_permutation_sequence(int max_n, const GroundStates& states) {
  std::vector<mpz_class> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto it = states.find(2 * n);
    if (it == states.end()) {
      throw Error(Errc::invalid_argument, "missing ground state for L=" + std::to_string(2 * n));
    }
    out.push_back(it->second.weight_of(diagram_of(Permutation::longest(n))));
  }
  return out;
}

}  // namespace brauer
