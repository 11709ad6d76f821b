#pragma once

// Exact one-dimensional kernel of an intensity matrix and the normalized
// integer ground state built from it.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/hamiltonian.hpp"

namespace brauer {

enum class KernelMethod {
  automatic,  // fraction-free up to kBareissLimit, modular above
  bareiss,
  modular,
};

inline constexpr std::size_t kBareissLimit = 100;
/// Above this dimension the modular path switches from dense elimination to
/// Wiedemann's method on the sparse matrix.
inline constexpr std::size_t kDenseModularLimit = 1500;

std::string to_string(KernelMethod method);
KernelMethod parse_kernel_method(const std::string& name);

/// Fraction-free elimination with Markowitz pivoting (ties: lowest row, then
/// lowest column). Returns an integral kernel vector.
std::vector<mpz_class> kernel_bareiss(const IntensityMatrix& m);

struct ModularStats {
  std::size_t primes_used = 0;
  std::size_t primes_rejected = 0;
};

/// Solves modulo successive word-size primes and reconstructs the rational
/// kernel; the result is confirmed by an exact product M v = 0.
std::vector<mpq_class> kernel_modular(const IntensityMatrix& m, unsigned threads = 0,
                                      ModularStats* stats = nullptr);

/// Nonzero v with M v = 0 exactly. Throws Errc::disconnected when M is not
/// strongly connected and Errc::kernel_dimension when the kernel is not one
/// dimensional.
std::vector<mpq_class> kernel_vector(const IntensityMatrix& m,
                                     KernelMethod method = KernelMethod::automatic,
                                     unsigned threads = 0);

struct NormalizedVector {
  std::vector<mpz_class> values;  // coprime, all positive
  bool min_is_one = false;
};

/// Clears denominators and divides by the gcd. A vector of negative entries
/// is negated first; mixed signs (or zeros) throw Errc::mixed_signs.
NormalizedVector normalize_integer(std::span<const mpq_class> v);

bool exact_null(const IntensityMatrix& m, std::span<const mpz_class> v);

// ---------------------------------------------------------------------------

struct OrbitWeight {
  ChordDiagram representative;
  std::size_t size = 0;
  mpz_class weight;
};

/// Ground state weights per dihedral orbit, ordered by representative.
class GroundState {
 public:
  /// Checks weights are positive with gcd 1.
  GroundState(int length, BasisKind generator, std::vector<OrbitWeight> orbits);

  int length() const noexcept { return length_; }
  BasisKind generator() const noexcept { return generator_; }
  const std::vector<OrbitWeight>& orbits() const noexcept { return orbits_; }

  bool min_is_one() const;
  /// "MIN_ENTRY_ONE" when the smallest weight is 1, otherwise "GCD_ONE".
  std::string normalization() const;
  /// Sum of size * weight over orbits.
  mpz_class total() const;

  const OrbitWeight& orbit_of(const ChordDiagram& d) const;
  const mpz_class& weight_of(const ChordDiagram& d) const { return orbit_of(d).weight; }

  friend bool operator==(const GroundState& a, const GroundState& b);

 private:
  int length_;
  BasisKind generator_;
  std::vector<OrbitWeight> orbits_;
};

/// Exact check that H psi = 0 over the full diagram basis.
bool verify_on_full_basis(const GroundState& gs, const DiagramBasis& basis);

struct SolveOptions {
  bool use_reduction = true;
  KernelMethod method = KernelMethod::automatic;
  unsigned threads = 0;
};

class GroundStateCache;

/// Enumerate, build, solve, normalize and verify on the full basis. With a
/// cache, a checksum-valid stored result is returned as is and fresh results
/// are written back.
GroundState groundstate(int length, const SolveOptions& options = {},
                        const GroundStateCache* cache = nullptr);

}  // namespace brauer
