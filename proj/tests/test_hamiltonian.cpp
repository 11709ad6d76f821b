#include <doctest.h>

#include <sstream>

#include "brauer/diagram.hpp"
#include "brauer/error.hpp"
#include "brauer/hamiltonian.hpp"

using namespace brauer;

TEST_CASE("full matrix is an intensity matrix") {
  for (int length = 2; length <= 9; ++length) {
    CAPTURE(length);
    const DiagramBasis basis = enumerate_diagrams(length);
    const IntensityMatrix h = build_full(basis);
    CHECK(h.dimension() == basis.size());
    CHECK(h.zero_column_sums());
    CHECK(h.nonpositive_off_diagonal());
    CHECK(connectivity_check(h));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      CHECK(h.at(c, c) == 3 * length - 3 * basis[c].adjacent_pair_count());
    }
  }
}

TEST_CASE("L=4 full matrix") {
  const DiagramBasis basis = enumerate_diagrams(4);  // 2,1,4,3  3,4,1,2  4,3,2,1
  const IntensityMatrix h = build_full(basis);
  CHECK(h.at(0, 0) == 6);
  CHECK(h.at(1, 0) == -2);
  CHECK(h.at(2, 0) == -4);
  CHECK(h.at(0, 1) == -6);
  CHECK(h.at(1, 1) == 12);
  CHECK(h.at(2, 1) == -6);
}

TEST_CASE("L=4 reduced matrix") {
  const DiagramBasis basis = enumerate_diagrams(4);
  const IntensityMatrix r = build_reduced(basis, compute_orbits(basis));
  REQUIRE(r.dimension() == 2);
  CHECK(r.kind() == BasisKind::reduced);
  CHECK(r.at(0, 0) == 2);
  CHECK(r.at(1, 0) == -2);
  CHECK(r.at(0, 1) == -12);
  CHECK(r.at(1, 1) == 12);
  CHECK(r.zero_column_sums());
}

TEST_CASE("reduced matrix is lumped from the full one") {
  for (int length = 3; length <= 9; ++length) {
    CAPTURE(length);
    const DiagramBasis basis = enumerate_diagrams(length);
    const OrbitPartition orbits = compute_orbits(basis);
    const IntensityMatrix h = build_full(basis);
    const IntensityMatrix r = build_reduced(basis, orbits, 3);
    CHECK(r.zero_column_sums());
    CHECK(connectivity_check(r));
    for (std::size_t d = 0; d < orbits.size(); ++d) {
      for (std::size_t member : orbits[d].members) {
        for (std::size_t c = 0; c < orbits.size(); ++c) {
          std::int64_t lumped = 0;
          for (std::size_t row : orbits[c].members) lumped += h.at(row, member);
          CHECK(lumped == r.at(c, d));
        }
      }
    }
  }
}

TEST_CASE("triplet export") {
  const DiagramBasis basis = enumerate_diagrams(4);
  std::ostringstream out;
  build_reduced(basis, compute_orbits(basis)).write_triplets(out);
  CHECK(out.str() == "4 reduced 2\n1 1 2\n2 1 -2\n1 2 -12\n2 2 12\n");
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(IntensityMatrix(2, BasisKind::full, {{{0, 1}, {5, -1}}}), Error);
  const IntensityMatrix split(2, BasisKind::full, {{{0, 0}}, {{1, 0}}});
  CHECK_FALSE(connectivity_check(split));
  CHECK(to_string(BasisKind::full) == "full");
}
