#include "brauer/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

namespace {

// Partner table with one extra slot for the virtual centre, so the defect
// strand can be rewired like any other chord.
struct Extended {
  std::array<int, kMaxSites + 1> partner{};
  int length = 0;

  explicit Extended(const ChordDiagram& d) : length(d.length()) {
    for (int i = 0; i < length; ++i) {
      const int p = d.partner(i);
      partner[static_cast<std::size_t>(i)] = p;
      if (p == kDefect) {
        partner[static_cast<std::size_t>(i)] = length;
        partner[static_cast<std::size_t>(length)] = i;
      }
    }
  }

  int& operator[](int site) { return partner[static_cast<std::size_t>(site)]; }

  void join(int a, int b) {
    (*this)[a] = b;
    (*this)[b] = a;
  }

  ChordDiagram to_diagram() const {
    ChordDiagram out = detail::DiagramAccess::blank(length);
    auto& raw = detail::DiagramAccess::raw(out);
    for (int i = 0; i < length; ++i) {
      const int p = partner[static_cast<std::size_t>(i)];
      raw[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(p == length ? kDefect : p);
    }
    return out;
  }
};

int next_site(int i, const ChordDiagram& d) {
  if (i < 0 || i >= d.length()) {
    throw Error(Errc::index_out_of_range, "generator index " + std::to_string(i) +
                                              " outside [0, " + std::to_string(d.length()) + ")");
  }
  return (i + 1) % d.length();
}

}  // namespace

ChordDiagram apply_monoid(int i, const ChordDiagram& d) {
  const int j = next_site(i, d);
  if (d.partner(i) == j) return d;
  Extended p(d);
  const int a = p[i];
  const int b = p[j];
  p.join(i, j);
  p.join(a, b);
  return p.to_diagram();
}

ChordDiagram apply_braid(int i, const ChordDiagram& d) {
  const int j = next_site(i, d);
  if (d.partner(i) == j) return d;
  Extended p(d);
  const int a = p[i];
  const int b = p[j];
  p.join(i, b);
  p.join(j, a);
  return p.to_diagram();
}

int cyclic_distance(int i, int j, int length) {
  const int diff = ((i - j) % length + length) % length;
  return std::min(diff, length - diff);
}

// ---------------------------------------------------------------------------

bool RelationReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

std::string RelationReport::to_table() const {
  std::ostringstream out;
  out << "relations on L=" << length << (exhaustive ? " (exhaustive)" : " (sampled)") << '\n';
  for (const auto& r : results) {
    out << (r.passed() ? "PASS  " : "FAIL  ") << r.relation << "  cases=" << r.cases;
    if (r.counterexample) {
      out << "  counterexample d=" << r.counterexample->diagram.to_string()
          << " i=" << r.counterexample->i + 1 << " j=" << r.counterexample->j + 1;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

using Map = std::function<ChordDiagram(const ChordDiagram&)>;

Map e(int i) {
  return [i](const ChordDiagram& d) { return apply_monoid(i, d); };
}
Map b(int i) {
  return [i](const ChordDiagram& d) { return apply_braid(i, d); };
}
Map identity() {
  return [](const ChordDiagram& d) { return d; };
}
/// Operator product, rightmost factor applied first.
Map product(std::vector<Map> factors) {
  return [factors = std::move(factors)](const ChordDiagram& d) {
    ChordDiagram x = d;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) x = (*it)(x);
    return x;
  };
}

enum class Pairs { single, adjacent, distant, shifted };

struct Relation {
  std::string name;
  Pairs pairs;
  std::function<std::pair<Map, Map>(int, int, int)> sides;  // (i, j, L)
};

std::vector<Relation> relations() {
  return {
      {"e_i e_i = e_i", Pairs::single,
       [](int i, int, int) { return std::pair{product({e(i), e(i)}), e(i)}; }},
      {"b_i b_i = 1", Pairs::single,
       [](int i, int, int) { return std::pair{product({b(i), b(i)}), identity()}; }},
      {"b_i e_i = e_i", Pairs::single,
       [](int i, int, int) { return std::pair{product({b(i), e(i)}), e(i)}; }},
      {"e_i b_i = e_i", Pairs::single,
       [](int i, int, int) { return std::pair{product({e(i), b(i)}), e(i)}; }},
      {"e_i e_j e_i = e_i, |i-j|=1", Pairs::adjacent,
       [](int i, int j, int) { return std::pair{product({e(i), e(j), e(i)}), e(i)}; }},
      {"b_i b_j b_i = b_j b_i b_j, |i-j|=1", Pairs::adjacent,
       [](int i, int j, int) {
         return std::pair{product({b(i), b(j), b(i)}), product({b(j), b(i), b(j)})};
       }},
      {"b_i b_j e_i = e_j e_i, |i-j|=1", Pairs::adjacent,
       [](int i, int j, int) { return std::pair{product({b(i), b(j), e(i)}), product({e(j), e(i)})}; }},
      {"e_j b_i b_j = e_j e_i, |i-j|=1", Pairs::adjacent,
       [](int i, int j, int) { return std::pair{product({e(j), b(i), b(j)}), product({e(j), e(i)})}; }},
      {"e_i e_j = e_j e_i, |i-j|>1", Pairs::distant,
       [](int i, int j, int) { return std::pair{product({e(i), e(j)}), product({e(j), e(i)})}; }},
      {"b_i b_j = b_j b_i, |i-j|>1", Pairs::distant,
       [](int i, int j, int) { return std::pair{product({b(i), b(j)}), product({b(j), b(i)})}; }},
      {"e_i b_j = b_j e_i, |i-j|>1", Pairs::distant,
       [](int i, int j, int) { return std::pair{product({e(i), b(j)}), product({b(j), e(i)})}; }},
      // Periodic boundary: translating by one site carries e_i to e_{i+1},
      // including e_L to e_{L+1} = e_1.
      {"periodicity: e_{i+1} r = r e_i", Pairs::shifted,
       [](int i, int, int L) {
         Map r = [](const ChordDiagram& d) { return rotate(d, 1); };
         return std::pair{product({e((i + 1) % L), r}), product({r, e(i)})};
       }},
      {"periodicity: b_{i+1} r = r b_i", Pairs::shifted,
       [](int i, int, int L) {
         Map r = [](const ChordDiagram& d) { return rotate(d, 1); };
         return std::pair{product({b((i + 1) % L), r}), product({r, b(i)})};
       }},
  };
}

std::vector<std::pair<int, int>> index_pairs(Pairs kind, int length) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < length; ++i) {
    if (kind == Pairs::single || kind == Pairs::shifted) {
      out.emplace_back(i, i);
      continue;
    }
    for (int j = 0; j < length; ++j) {
      if (i == j) continue;
      const int dist = cyclic_distance(i, j, length);
      if ((kind == Pairs::adjacent && dist == 1) || (kind == Pairs::distant && dist > 1)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

}  // namespace

RelationReport check_relations(int length, bool exhaustive, std::size_t sample_size,
                               std::uint64_t seed) {
  if (length < 3) throw Error(Errc::invalid_argument, "relation checks need L >= 3");
  const DiagramBasis basis = enumerate_diagrams(length);
  std::vector<ChordDiagram> diagrams = basis.diagrams();
  if (!exhaustive && sample_size < diagrams.size()) {
    std::mt19937_64 rng(seed);
    std::vector<ChordDiagram> sample;
    std::sample(diagrams.begin(), diagrams.end(), std::back_inserter(sample), sample_size, rng);
    diagrams = std::move(sample);
  }

  RelationReport report{length, exhaustive || sample_size >= basis.size(), {}};
  for (const auto& rel : relations()) {
    RelationResult result{rel.name, 0, std::nullopt};
    for (const auto& [i, j] : index_pairs(rel.pairs, length)) {
      const auto [lhs, rhs] = rel.sides(i, j, length);
      for (const auto& d : diagrams) {
        ++result.cases;
        if (lhs(d) != rhs(d)) {
          result.counterexample = RelationCounterexample{d, i, j};
          break;
        }
      }
      if (result.counterexample) break;
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace brauer
