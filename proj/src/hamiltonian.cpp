#include "brauer/hamiltonian.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "brauer/error.hpp"
#include "brauer/generators.hpp"
#include "brauer/parallel.hpp"

namespace brauer {

std::string to_string(BasisKind kind) { return kind == BasisKind::full ? "full" : "reduced"; }

IntensityMatrix::IntensityMatrix(int length, BasisKind kind, std::vector<SparseColumn> columns)
    : length_(length), kind_(kind), columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].row >= columns_.size() || (k && c[k].row <= c[k - 1].row)) {
        throw Error(Errc::invalid_argument, "column rows must be increasing and inside the matrix");
      }
    }
  }
}

std::int64_t IntensityMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  const auto it = std::lower_bound(c.begin(), c.end(), row,
                                   [](const MatrixEntry& e, std::size_t r) { return e.row < r; });
  return it != c.end() && it->row == row ? it->value : 0;
}

std::size_t IntensityMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::int64_t IntensityMatrix::column_sum(std::size_t c) const {
  std::int64_t sum = 0;
  for (const auto& e : columns_.at(c)) sum += e.value;
  return sum;
}

bool IntensityMatrix::zero_column_sums() const {
  for (std::size_t c = 0; c < dimension(); ++c) {
    if (column_sum(c) != 0) return false;
  }
  return true;
}

bool IntensityMatrix::nonpositive_off_diagonal() const {
  for (std::size_t c = 0; c < dimension(); ++c) {
    for (const auto& e : columns_[c]) {
      if (e.row != c && e.value > 0) return false;
    }
  }
  return true;
}

void IntensityMatrix::write_triplets(std::ostream& out) const {
  out << length_ << ' ' << to_string(kind_) << ' ' << dimension() << '\n';
  for (std::size_t c = 0; c < dimension(); ++c) {
    for (const auto& e : columns_[c]) out << e.row + 1 << ' ' << c + 1 << ' ' << e.value << '\n';
  }
}

// ---------------------------------------------------------------------------

namespace {

SparseColumn compress(std::map<std::uint32_t, std::int64_t>& acc) {
  SparseColumn column;
  column.reserve(acc.size());
  for (const auto& [row, value] : acc) {
    if (value != 0) column.push_back({row, value});
  }
  return column;
}

}  // namespace

SparseColumn hamiltonian_column(const DiagramBasis& basis, std::size_t col) {
  const ChordDiagram& d = basis[col];
  const int length = basis.length();
  std::map<std::uint32_t, std::int64_t> acc;
  acc[static_cast<std::uint32_t>(col)] += 3 * length;
  for (int i = 0; i < length; ++i) {
    acc[static_cast<std::uint32_t>(basis.index_of(apply_monoid(i, d)))] -= 2;
    acc[static_cast<std::uint32_t>(basis.index_of(apply_braid(i, d)))] -= 1;
  }
  return compress(acc);
}

IntensityMatrix build_full(const DiagramBasis& basis, unsigned threads) {
  std::vector<SparseColumn> columns(basis.size());
  parallel_for(basis.size(), threads, [&](std::size_t c) { columns[c] = hamiltonian_column(basis, c); });
  return IntensityMatrix(basis.length(), BasisKind::full, std::move(columns));
}

IntensityMatrix build_reduced(const DiagramBasis& basis, const OrbitPartition& orbits,
                              unsigned threads) {
  auto lumped = [&](std::size_t basis_col) {
    std::map<std::uint32_t, std::int64_t> acc;
    for (const auto& e : hamiltonian_column(basis, basis_col)) {
      acc[static_cast<std::uint32_t>(orbits.orbit_of(e.row))] += e.value;
    }
    return compress(acc);
  };

  std::vector<SparseColumn> columns(orbits.size());
  parallel_for(orbits.size(), threads, [&](std::size_t o) {
    const auto& members = orbits[o].members;
    columns[o] = lumped(members.front());
    for (std::size_t k = 1; k < members.size(); ++k) {
      if (lumped(members[k]) != columns[o]) {
        throw Error(Errc::symmetry_broken, "lumped column of " + basis[members[k]].to_string() +
                                               " differs from its orbit representative");
      }
    }
  });
  return IntensityMatrix(basis.length(), BasisKind::reduced, std::move(columns));
}

bool connectivity_check(const IntensityMatrix& m) {
  const std::size_t n = m.dimension();
  if (n <= 1) return true;
  std::vector<std::vector<std::uint32_t>> forward(n);
  std::vector<std::vector<std::uint32_t>> backward(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& e : m.column(c)) {
      if (e.row == c) continue;
      // Transition c -> row.
      forward[c].push_back(e.row);
      backward[e.row].push_back(static_cast<std::uint32_t>(c));
    }
  }
  auto reaches_all = [n](const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(forward) && reaches_all(backward);
}

}  // namespace brauer
