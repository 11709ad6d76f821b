#pragma once

// Chord diagrams on L circle sites, their dihedral symmetry classes, and the
// (partial) permutation labels of diagrams joining the two half-circles.
//
// Sites are 0-based here. The text encoding used in files and on the command
// line is 1-based: "2,1,4,3" is {1-2, 3-4} and "5,.,4,3,1" has a defect at 2.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace brauer {

inline constexpr int kMaxSites = 24;
/// Largest L that enumerate_diagrams accepts (17!! is about 3.4e7 diagrams).
inline constexpr int kMaxEnumerationLength = 18;
inline constexpr int kDefect = -1;

namespace detail {
struct DiagramAccess;
}

class ChordDiagram {
 public:
  ChordDiagram() = default;

  /// Validates the involution and defect-count invariants; kDefect marks the
  /// unpaired site of an odd-length diagram.
  static ChordDiagram from_partners(std::span<const int> partners);
  static ChordDiagram parse(std::string_view text);

  int length() const noexcept { return length_; }
  int partner(int site) const { return partner_.at(static_cast<std::size_t>(site)); }
  bool is_defect(int site) const { return partner(site) == kDefect; }
  std::optional<int> defect_site() const;

  /// True when sites i and i+1 (mod L) are joined by a chord.
  bool adjacent_pair(int site) const;
  /// Number of i with partner(i) = i+1 cyclically.
  int adjacent_pair_count() const;

  std::span<const std::int8_t> partners() const noexcept {
    return {partner_.data(), static_cast<std::size_t>(length_)};
  }

  std::string to_string() const;

  // Lexicographic on the partner array, the defect sorting first.
  friend std::strong_ordering operator<=>(const ChordDiagram& a, const ChordDiagram& b) noexcept;
  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) noexcept;

 private:
  friend struct detail::DiagramAccess;

  std::array<std::int8_t, kMaxSites> partner_{};
  std::uint8_t length_ = 0;
};

namespace detail {
/// Unchecked construction for code that preserves the invariants itself.
struct DiagramAccess {
  static std::array<std::int8_t, kMaxSites>& raw(ChordDiagram& d) noexcept { return d.partner_; }
  static ChordDiagram blank(int length) noexcept {
    ChordDiagram d;
    d.length_ = static_cast<std::uint8_t>(length);
    return d;
  }
};
}  // namespace detail

/// All chord diagrams of one length, in increasing lexicographic order.
class DiagramBasis {
 public:
  DiagramBasis(int length, std::vector<ChordDiagram> sorted_diagrams);

  int length() const noexcept { return length_; }
  std::size_t size() const noexcept { return diagrams_.size(); }
  const ChordDiagram& operator[](std::size_t i) const { return diagrams_[i]; }
  const std::vector<ChordDiagram>& diagrams() const noexcept { return diagrams_; }
  auto begin() const noexcept { return diagrams_.begin(); }
  auto end() const noexcept { return diagrams_.end(); }

  std::optional<std::size_t> find(const ChordDiagram& d) const;
  /// Like find, but throws when d is not in the basis.
  std::size_t index_of(const ChordDiagram& d) const;

 private:
  int length_;
  std::vector<ChordDiagram> diagrams_;
};

/// Expected basis size: (L-1)!! for even L, L*(L-2)!! for odd L.
std::uint64_t basis_size(int length);

DiagramBasis enumerate_diagrams(int length);

ChordDiagram rotate(const ChordDiagram& d, int k);
ChordDiagram reflect(const ChordDiagram& d);
/// Lexicographically smallest of the 2L dihedral images.
ChordDiagram canonical_representative(const ChordDiagram& d);
/// All 2L dihedral images: rotations 0..L-1, then rotations of the reflection.
std::vector<ChordDiagram> dihedral_images(const ChordDiagram& d);

struct SymmetryOrbit {
  ChordDiagram representative;
  std::vector<std::size_t> members;  // sorted basis indices

  std::size_t size() const noexcept { return members.size(); }
};

/// Partition of a basis into dihedral orbits, ordered by representative.
class OrbitPartition {
 public:
  OrbitPartition(std::vector<SymmetryOrbit> orbits, std::vector<std::size_t> orbit_of);

  std::size_t size() const noexcept { return orbits_.size(); }
  const SymmetryOrbit& operator[](std::size_t i) const { return orbits_[i]; }
  const std::vector<SymmetryOrbit>& orbits() const noexcept { return orbits_; }
  auto begin() const noexcept { return orbits_.begin(); }
  auto end() const noexcept { return orbits_.end(); }

  /// Orbit index of basis element i.
  std::size_t orbit_of(std::size_t basis_index) const { return orbit_of_[basis_index]; }

 private:
  std::vector<SymmetryOrbit> orbits_;
  std::vector<std::size_t> orbit_of_;
};

OrbitPartition compute_orbits(const DiagramBasis& basis, unsigned threads = 0);

/// pi(i) for i = 1..n, stored 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  int rank() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& image() const noexcept { return image_; }

  static Permutation identity(int n);
  /// w = (n, n-1, ..., 1)
  static Permutation longest(int n);

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Rank-n partial permutation on n+1 points; kUndefined marks the one point
/// without an image.
class PartialPermutation {
 public:
  static constexpr int kUndefined = 0;

  explicit PartialPermutation(std::vector<int> image);

  int rank() const noexcept { return static_cast<int>(image_.size()) - 1; }
  int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& image() const noexcept { return image_; }
  int undefined_point() const;

  /// The reverse map pi' (right site n+1+j connects to left site pi'(j)).
  std::vector<int> reverse() const;

  std::string to_string() const;

  friend auto operator<=>(const PartialPermutation&, const PartialPermutation&) = default;

 private:
  std::vector<int> image_;
};

using DiagramLabel = std::variant<Permutation, PartialPermutation>;

std::string label_to_string(const DiagramLabel& label);

/// Even L = 2n: pi with site i joined to site n + pi(i) (1-based) when every
/// left site pairs into the right half.
std::optional<Permutation> permutation_label(const ChordDiagram& d);
/// Odd L = 2n+1: left block is sites 1..n+1, right block n+2..2n+1.
std::optional<PartialPermutation> partial_permutation_label(const ChordDiagram& d);
std::optional<DiagramLabel> label_of(const ChordDiagram& d);

ChordDiagram diagram_of(const Permutation& pi);
ChordDiagram diagram_of(const PartialPermutation& pi);
ChordDiagram diagram_of(const DiagramLabel& label);

/// Every labelled diagram of length L, in label order.
std::vector<DiagramLabel> all_labels(int length);

/// Concatenation: the second label's values are shifted by the first rank.
/// At most one operand may be partial.
DiagramLabel concatenate(const DiagramLabel& first, const DiagramLabel& second);

/// System size whose diagrams carry labels of this shape.
int label_length(const DiagramLabel& label);

}  // namespace brauer
