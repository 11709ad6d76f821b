#pragma once

// The Brauer loop Hamiltonian H = sum_i (3 - 2 e_i - b_i) as a sparse integer
// matrix. Columns are input states, so H is an intensity matrix: off-diagonal
// entries are <= 0 and every column sums to zero.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "brauer/diagram.hpp"

namespace brauer {

enum class BasisKind { full, reduced };

std::string to_string(BasisKind kind);

struct MatrixEntry {
  std::uint32_t row;
  std::int64_t value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

using SparseColumn = std::vector<MatrixEntry>;

class IntensityMatrix {
 public:
  /// Columns must be sorted by row with no explicit zeros.
  IntensityMatrix(int length, BasisKind kind, std::vector<SparseColumn> columns);

  int length() const noexcept { return length_; }
  BasisKind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return columns_.size(); }
  std::span<const MatrixEntry> column(std::size_t c) const { return columns_[c]; }
  std::int64_t at(std::size_t row, std::size_t col) const;
  std::size_t nonzeros() const;

  std::int64_t column_sum(std::size_t c) const;
  bool zero_column_sums() const;
  bool nonpositive_off_diagonal() const;

  /// "L kind dimension" header, then "row col value" with 1-based indices.
  void write_triplets(std::ostream& out) const;

 private:
  int length_;
  BasisKind kind_;
  std::vector<SparseColumn> columns_;
};

/// Column of H for basis element `col`, indexed by the full basis.
SparseColumn hamiltonian_column(const DiagramBasis& basis, std::size_t col);

IntensityMatrix build_full(const DiagramBasis& basis, unsigned threads = 0);

/// Orbit-lumped matrix R(C, D) = sum over c in C of H(c, d) for d in D.
/// Every member of D is checked to give the same column; throws
/// Errc::symmetry_broken otherwise. The kernel of R holds orbit masses
/// |D| * psi_d rather than per-diagram weights.
IntensityMatrix build_reduced(const DiagramBasis& basis, const OrbitPartition& orbits,
                              unsigned threads = 0);

/// True iff the directed graph of nonzero off-diagonal entries is strongly
/// connected.
bool connectivity_check(const IntensityMatrix& m);

}  // namespace brauer
