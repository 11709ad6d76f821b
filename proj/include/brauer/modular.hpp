#pragma once

// Word-size modular arithmetic used by the accelerated kernel solver.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "brauer/hamiltonian.hpp"

namespace brauer::modular {

/// The 24 largest primes below 2^31, in decreasing order.
std::span<const std::uint32_t> primes();

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint32_t p);
std::uint32_t reduce(std::int64_t v, std::uint32_t p);

/// Shortest linear recurrence of s over GF(p). Returns (c_1..c_L) with
/// s_j + c_1 s_{j-1} + ... + c_L s_{j-L} = 0 for all j >= L.
std::vector<std::uint32_t> berlekamp_massey(std::span<const std::uint32_t> s, std::uint32_t p);

enum class Backend { dense, wiedemann };

/// Kernel of m mod p scaled so that coordinate `ref` is 1. Empty when the
/// rank mod p is below dimension-1 or the kernel vanishes at `ref` (an
/// unlucky prime). Dense elimination certifies rank exactly; Wiedemann solves
/// the principal minor without `ref`, whose invertibility mod p implies the
/// same rank bound.
std::optional<std::vector<std::uint32_t>> kernel_mod(const IntensityMatrix& m, std::uint32_t p,
                                                     std::size_t ref, Backend backend,
                                                     std::uint64_t seed = 0);

/// Incremental Chinese remaindering of a residue vector.
class CrtVector {
 public:
  explicit CrtVector(std::size_t size) : residues_(size), modulus_(1) {}

  void add(std::span<const std::uint32_t> residues, std::uint32_t p);
  const mpz_class& modulus() const noexcept { return modulus_; }
  const std::vector<mpz_class>& residues() const noexcept { return residues_; }

 private:
  std::vector<mpz_class> residues_;
  mpz_class modulus_;
};

/// n/d with |n|, d <= sqrt(m/2) and n = a d (mod m), if one exists.
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m);

}  // namespace brauer::modular
