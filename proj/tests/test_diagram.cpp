#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "brauer/class_counting.hpp"
#include "brauer/diagram.hpp"
#include "brauer/error.hpp"

using namespace brauer;

namespace {

// Brute force: filter all permutations of the sites down to fixed-point-free
// involutions (one fixed point, the defect, for odd L).
std::set<std::vector<int>> matchings_by_filter(int length) {
  std::vector<int> p(static_cast<std::size_t>(length));
  std::iota(p.begin(), p.end(), 0);
  std::set<std::vector<int>> out;
  do {
    int fixed = 0;
    bool involution = true;
    for (int i = 0; i < length; ++i) {
      if (p[i] == i) ++fixed;
      if (p[p[i]] != i) involution = false;
    }
    if (involution && fixed == length % 2) {
      std::vector<int> partners(p);
      for (int i = 0; i < length; ++i) {
        if (partners[i] == i) partners[i] = kDefect;
      }
      out.insert(partners);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> partners_of(const ChordDiagram& d) { return {d.partners().begin(), d.partners().end()}; }

}  // namespace

TEST_CASE("text encoding round trip") {
  const auto d = ChordDiagram::parse("2,1,4,3");
  CHECK(d.length() == 4);
  CHECK(d.partner(0) == 1);
  CHECK(d.adjacent_pair_count() == 2);
  CHECK(d.to_string() == "2,1,4,3");

  const auto odd = ChordDiagram::parse("5,.,4,3,1");
  CHECK(odd.defect_site() == 1);
  CHECK(ChordDiagram::parse("2,1,.").defect_site() == 2);
  CHECK(odd.to_string() == "5,.,4,3,1");
  CHECK(odd.adjacent_pair(2));
  CHECK(odd.adjacent_pair(4));  // 5-1 wraps around
}

TEST_CASE("malformed diagrams are rejected") {
  for (std::string bad : {"2,3,1", "1,2", ".,.,4,3", "2,1,4", "x,1", "", "3,4,1,2,", "2,1,5,3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ChordDiagram::parse(bad), Error);
  }
}

TEST_CASE("enumeration matches a permutation filter") {
  for (int length = 2; length <= 8; ++length) {
    CAPTURE(length);
    const DiagramBasis basis = enumerate_diagrams(length);
    CHECK(basis.size() == basis_size(length));
    const auto expected = matchings_by_filter(length);
    REQUIRE(basis.size() == expected.size());
    std::set<std::vector<int>> got;
    for (const auto& d : basis) got.insert(partners_of(d));
    CHECK(got == expected);
    CHECK(std::is_sorted(basis.begin(), basis.end()));
  }
}

TEST_CASE("basis sizes") {
  CHECK(basis_size(2) == 1);
  CHECK(basis_size(4) == 3);
  CHECK(basis_size(5) == 15);
  CHECK(basis_size(6) == 15);
  CHECK(basis_size(8) == 105);
  CHECK(basis_size(12) == 10395);
  CHECK(basis_size(13) == 135135);
}

TEST_CASE("index lookup") {
  const DiagramBasis basis = enumerate_diagrams(6);
  for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis.index_of(basis[i]) == i);
  CHECK_FALSE(basis.find(ChordDiagram::parse("2,1,4,3")).has_value());
  CHECK_THROWS_AS(basis.index_of(ChordDiagram::parse("2,1,4,3")), Error);
}

TEST_CASE("dihedral action") {
  const auto d = ChordDiagram::parse("2,1,4,3,6,5");
  CHECK(rotate(d, 1).to_string() == "6,3,2,5,4,1");
  CHECK(rotate(d, 6) == d);
  CHECK(rotate(rotate(d, 2), 4) == d);
  const auto e = ChordDiagram::parse("3,5,1,6,2,4");
  CHECK(reflect(reflect(e)) == e);
  CHECK(dihedral_images(d).size() == 12);
  const auto odd = ChordDiagram::parse("5,.,4,3,1");
  CHECK(rotate(odd, 1).defect_site() == 2);
  CHECK(canonical_representative(rotate(odd, 3)) == canonical_representative(odd));
}

TEST_CASE("orbit fixtures") {
  const DiagramBasis b4 = enumerate_diagrams(4);
  const OrbitPartition o4 = compute_orbits(b4);
  REQUIRE(o4.size() == 2);
  CHECK(o4[0].representative.to_string() == "2,1,4,3");
  CHECK(o4[0].size() == 2);
  CHECK(o4[1].size() == 1);

  const OrbitPartition o5 = compute_orbits(enumerate_diagrams(5));
  REQUIRE(o5.size() == 3);
  for (const auto& o : o5) CHECK(o.size() == 5);

  std::multiset<std::size_t> sizes6;
  for (const auto& o : compute_orbits(enumerate_diagrams(6))) sizes6.insert(o.size());
  CHECK(sizes6 == std::multiset<std::size_t>{1, 2, 3, 3, 6});
}

TEST_CASE("orbits partition the basis and agree with the closed-form count") {
  for (int length = 2; length <= 10; ++length) {
    CAPTURE(length);
    const DiagramBasis basis = enumerate_diagrams(length);
    const OrbitPartition orbits = compute_orbits(basis, 2);
    std::size_t total = 0;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      total += orbits[k].size();
      CHECK(2 * static_cast<std::size_t>(length) % orbits[k].size() == 0);
      for (std::size_t m : orbits[k].members) {
        CHECK(orbits.orbit_of(m) == k);
        CHECK(canonical_representative(basis[m]) == orbits[k].representative);
      }
    }
    CHECK(total == basis.size());
    if (length % 2 == 0) CHECK(class_count(static_cast<unsigned long>(length / 2)) == orbits.size());
  }
}

TEST_CASE("orbit computation is independent of the thread count") {
  const DiagramBasis basis = enumerate_diagrams(9);
  const auto a = compute_orbits(basis, 1);
  const auto b = compute_orbits(basis, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].representative == b[k].representative);
    CHECK(a[k].members == b[k].members);
  }
}

TEST_CASE("permutation labels") {
  const Permutation pi({3, 1, 2});
  CHECK(pi.to_string() == "(312)");
  const ChordDiagram d = diagram_of(pi);
  CHECK(d.to_string() == "6,4,5,2,3,1");
  CHECK(permutation_label(d) == pi);
  CHECK_FALSE(permutation_label(ChordDiagram::parse("2,1,4,3,6,5")).has_value());
  CHECK(Permutation::longest(4).to_string() == "(4321)");
  CHECK_THROWS_AS(Permutation({1, 1, 2}), Error);

  std::vector<int> ten(10);
  std::iota(ten.begin(), ten.end(), 1);
  CHECK(Permutation(ten).to_string() == "(1,2,3,4,5,6,7,8,9,10)");
}

TEST_CASE("partial permutation labels") {
  const PartialPermutation pi({2, PartialPermutation::kUndefined, 1});
  CHECK(pi.rank() == 2);
  CHECK(pi.to_string() == "(2.1)");
  CHECK(pi.undefined_point() == 2);
  CHECK(pi.reverse() == std::vector<int>{3, 1});
  const ChordDiagram d = diagram_of(pi);
  CHECK(d.length() == 5);
  CHECK(d.defect_site() == 1);
  CHECK(partial_permutation_label(d) == pi);
  CHECK_THROWS_AS(PartialPermutation({1, 2}), Error);
}

TEST_CASE("label counts and round trips") {
  for (int length = 2; length <= 9; ++length) {
    const auto labels = all_labels(length);
    const int n = length / 2;
    std::size_t expected = 1;
    for (int k = 2; k <= n; ++k) expected *= static_cast<std::size_t>(k);
    if (length % 2) expected *= static_cast<std::size_t>(n + 1);
    CHECK(labels.size() == expected);
    CHECK(std::is_sorted(labels.begin(), labels.end()));
    for (const auto& label : labels) {
      CHECK(label_length(label) == length);
      CHECK(label_of(diagram_of(label)) == label);
    }
  }
}

TEST_CASE("concatenation") {
  const DiagramLabel a = Permutation({2, 1});
  const DiagramLabel b = Permutation({1});
  CHECK(label_to_string(concatenate(a, b)) == "(213)");
  CHECK(label_to_string(concatenate(b, a)) == "(132)");
  const DiagramLabel p = PartialPermutation({1, PartialPermutation::kUndefined});
  CHECK(label_to_string(concatenate(a, p)) == "(213.)");
  CHECK(label_to_string(concatenate(p, a)) == "(1.32)");
  CHECK_THROWS_AS(concatenate(p, p), Error);
}
