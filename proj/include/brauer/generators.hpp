#pragma once

// Brauer algebra generators acting on chord diagrams with periodic boundary:
// generator i acts on sites i and i+1 (mod L), 0 <= i < L.
//
// For odd L the defect is treated as a strand to a fixed virtual centre
// point, which behaves like an ordinary (immovable) partner.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauer/diagram.hpp"

namespace brauer {

/// Monoid e_i: joins i and i+1, and joins their former partners.
ChordDiagram apply_monoid(int i, const ChordDiagram& d);
/// Braid b_i: swaps the partners of i and i+1.
ChordDiagram apply_braid(int i, const ChordDiagram& d);

/// Cyclic distance between generator positions i and j on L sites.
int cyclic_distance(int i, int j, int length);

struct RelationCounterexample {
  ChordDiagram diagram;
  int i = 0;
  int j = 0;
};

struct RelationResult {
  std::string relation;
  std::uint64_t cases = 0;
  std::optional<RelationCounterexample> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

struct RelationReport {
  int length = 0;
  bool exhaustive = true;
  std::vector<RelationResult> results;

  bool all_passed() const;
  std::string to_table() const;
};

/// Checks every algebra relation as an equality of maps on diagrams. With
/// exhaustive = false only `sample_size` diagrams drawn with `seed` are used.
RelationReport check_relations(int length, bool exhaustive = true, std::size_t sample_size = 64,
                               std::uint64_t seed = 1);

}  // namespace brauer
