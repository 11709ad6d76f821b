#include "brauer/kernel.hpp"

#include <algorithm>
#include <limits>

#include "brauer/error.hpp"
#include "brauer/modular.hpp"
#include "brauer/parallel.hpp"
#include "brauer/store.hpp"

namespace brauer {

std::string to_string(KernelMethod method) {
  switch (method) {
    case KernelMethod::automatic: return "auto";
    case KernelMethod::bareiss: return "bareiss";
    case KernelMethod::modular: return "modular";
  }
  return "auto";
}

KernelMethod parse_kernel_method(const std::string& name) {
  if (name == "auto") return KernelMethod::automatic;
  if (name == "bareiss") return KernelMethod::bareiss;
  if (name == "modular") return KernelMethod::modular;
  throw Error(Errc::invalid_argument, "unknown solver '" + name + "'");
}

// ---------------------------------------------------------------------------

std::vector<mpz_class> kernel_bareiss(const IntensityMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 1) {
    if (m.at(0, 0) != 0) throw Error(Errc::kernel_dimension, "1x1 matrix is nonsingular");
    return {mpz_class(1)};
  }
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& e : m.column(c)) a[e.row][c] = static_cast<long>(e.value);
  }

  std::vector<bool> row_active(n, true);
  std::vector<bool> col_active(n, true);
  struct Pivot {
    std::size_t row;
    std::size_t col;
  };
  std::vector<Pivot> pivots;
  pivots.reserve(n - 1);
  mpz_class previous = 1;
  std::vector<std::size_t> row_count(n);
  std::vector<std::size_t> col_count(n);
  mpz_class t;

  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::fill(row_count.begin(), row_count.end(), 0);
    std::fill(col_count.begin(), col_count.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!row_active[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (col_active[j] && sgn(a[i][j]) != 0) {
          ++row_count[i];
          ++col_count[j];
        }
      }
    }
    std::optional<Pivot> best;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < n; ++i) {
      if (!row_active[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!col_active[j] || sgn(a[i][j]) == 0) continue;
        const std::size_t cost = (row_count[i] - 1) * (col_count[j] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best = Pivot{i, j};
        }
      }
    }
    if (!best) {
      throw Error(Errc::kernel_dimension,
                  "rank " + std::to_string(step) + " < dimension - 1 = " + std::to_string(n - 1));
    }
    const auto [r, c] = *best;
    const mpz_class pivot = a[r][c];
    for (std::size_t i = 0; i < n; ++i) {
      if (!row_active[i] || i == r) continue;
      const mpz_class factor = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        if (!col_active[j] || j == c) continue;
        auto& x = a[i][j];
        if (sgn(factor) == 0) {
          if (sgn(x) == 0) continue;
          x *= pivot;
        } else {
          t = factor * a[r][j];
          x *= pivot;
          x -= t;
        }
        if (previous != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    row_active[r] = false;
    col_active[c] = false;
    pivots.push_back({r, c});
    previous = pivot;
  }

  const auto last_row = static_cast<std::size_t>(std::find(row_active.begin(), row_active.end(), true) - row_active.begin());
  const auto free_col = static_cast<std::size_t>(std::find(col_active.begin(), col_active.end(), true) - col_active.begin());
  if (sgn(a[last_row][free_col]) != 0) throw Error(Errc::kernel_dimension, "matrix is nonsingular");

  // Cramer: with x_free equal to the last pivot (the determinant of the
  // pivoted minor) every other coordinate is an integer minor, so each
  // back-substitution division is exact.
  std::vector<mpz_class> x(n);
  std::vector<bool> known(n, false);
  x[free_col] = previous;
  known[free_col] = true;
  mpz_class sum;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const auto [r, c] = pivots[k];
    sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != c && known[j] && sgn(a[r][j]) != 0) sum += a[r][j] * x[j];
    }
    sum = -sum;
    if (!mpz_divisible_p(sum.get_mpz_t(), a[r][c].get_mpz_t())) {
      throw Error(Errc::kernel_dimension, "inexact back substitution");
    }
    mpz_divexact(x[c].get_mpz_t(), sum.get_mpz_t(), a[r][c].get_mpz_t());
    known[c] = true;
  }
  return x;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<mpz_class> clear_denominators(std::span<const mpq_class> v) {
  mpz_class lcm = 1;
  for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_num() * (lcm / q.get_den()));
  return out;
}

}  // namespace

bool exact_null(const IntensityMatrix& m, std::span<const mpz_class> v) {
  std::vector<mpz_class> y(m.dimension());
  for (std::size_t c = 0; c < m.dimension(); ++c) {
    if (sgn(v[c]) == 0) continue;
    for (const auto& e : m.column(c)) y[e.row] += v[c] * static_cast<long>(e.value);
  }
  return std::all_of(y.begin(), y.end(), [](const mpz_class& z) { return sgn(z) == 0; });
}

std::vector<mpq_class> kernel_modular(const IntensityMatrix& m, unsigned threads, ModularStats* stats) {
  const std::size_t n = m.dimension();
  const std::size_t ref = n - 1;
  const auto backend = n <= kDenseModularLimit ? modular::Backend::dense : modular::Backend::wiedemann;
  const auto primes = modular::primes();
  const std::size_t batch = std::min<std::size_t>(resolve_threads(threads), primes.size());

  ModularStats local;
  modular::CrtVector crt(n);
  std::optional<std::vector<mpq_class>> previous;
  for (std::size_t next = 0; next < primes.size();) {
    const std::size_t count = std::min(batch, primes.size() - next);
    std::vector<std::optional<std::vector<std::uint32_t>>> residues(count);
    parallel_for(count, static_cast<unsigned>(count), [&](std::size_t k) {
      residues[k] = modular::kernel_mod(m, primes[next + k], ref, backend, /*seed=*/next + k);
    });
    for (std::size_t k = 0; k < count; ++k) {
      if (!residues[k]) {
        ++local.primes_rejected;
        continue;
      }
      ++local.primes_used;
      crt.add(*residues[k], primes[next + k]);

      std::vector<mpq_class> candidate;
      candidate.reserve(n);
      for (const auto& r : crt.residues()) {
        auto q = modular::rational_reconstruct(r, crt.modulus());
        if (!q) break;
        candidate.push_back(std::move(*q));
      }
      if (candidate.size() != n) {
        previous.reset();
        continue;
      }
      if (previous && *previous == candidate && exact_null(m, clear_denominators(candidate))) {
        if (stats) *stats = local;
        return candidate;
      }
      previous = std::move(candidate);
    }
    next += count;
  }
  if (stats) *stats = local;
  if (local.primes_used == 0) {
    throw Error(Errc::kernel_dimension, "rank below dimension - 1 modulo every prime");
  }
  throw Error(Errc::reconstruction_failed, "rational reconstruction did not stabilize");
}

std::vector<mpq_class> kernel_vector(const IntensityMatrix& m, KernelMethod method, unsigned threads) {
  if (m.dimension() == 0) throw Error(Errc::invalid_argument, "empty matrix");
  if (!m.zero_column_sums()) throw Error(Errc::invalid_argument, "column sums are not zero");
  if (!connectivity_check(m)) throw Error(Errc::disconnected, "transition graph is not strongly connected");

  if (method == KernelMethod::automatic) {
    method = m.dimension() <= kBareissLimit ? KernelMethod::bareiss : KernelMethod::modular;
  }
  if (method == KernelMethod::modular) return kernel_modular(m, threads);

  const std::vector<mpz_class> x = kernel_bareiss(m);
  if (!exact_null(m, x)) throw Error(Errc::verification_failed, "fraction-free kernel fails M v = 0");
  return std::vector<mpq_class>(x.begin(), x.end());
}

NormalizedVector normalize_integer(std::span<const mpq_class> v) {
  if (v.empty()) throw Error(Errc::invalid_argument, "empty vector");
  const bool negative = sgn(v.front()) < 0;
  for (const auto& q : v) {
    if (sgn(q) == 0 || (sgn(q) < 0) != negative) {
      throw Error(Errc::mixed_signs, "entries are not all of one strict sign");
    }
  }
  NormalizedVector out;
  out.values = clear_denominators(v);
  mpz_class g = 0;
  for (const auto& z : out.values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  for (auto& z : out.values) {
    mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    if (negative) z = -z;
  }
  out.min_is_one = *std::min_element(out.values.begin(), out.values.end()) == 1;
  return out;
}

// ---------------------------------------------------------------------------

GroundState::GroundState(int length, BasisKind generator, std::vector<OrbitWeight> orbits)
    : length_(length), generator_(generator), orbits_(std::move(orbits)) {
  if (orbits_.empty()) throw Error(Errc::invalid_argument, "ground state without orbits");
  mpz_class g = 0;
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    const auto& o = orbits_[k];
    if (sgn(o.weight) <= 0) throw Error(Errc::invalid_argument, "weights must be positive");
    if (o.representative.length() != length_) throw Error(Errc::invalid_argument, "representative length mismatch");
    if (k && !(orbits_[k - 1].representative < o.representative)) {
      throw Error(Errc::invalid_argument, "orbits must be ordered by representative");
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), o.weight.get_mpz_t());
  }
  if (g != 1) throw Error(Errc::invalid_argument, "weights are not coprime");
}

bool GroundState::min_is_one() const {
  return std::any_of(orbits_.begin(), orbits_.end(), [](const auto& o) { return o.weight == 1; });
}

std::string GroundState::normalization() const { return min_is_one() ? "MIN_ENTRY_ONE" : "GCD_ONE"; }

mpz_class GroundState::total() const {
  mpz_class sum = 0;
  for (const auto& o : orbits_) sum += o.weight * static_cast<unsigned long>(o.size);
  return sum;
}

const OrbitWeight& GroundState::orbit_of(const ChordDiagram& d) const {
  const ChordDiagram rep = canonical_representative(d);
  const auto it = std::lower_bound(orbits_.begin(), orbits_.end(), rep,
                                   [](const OrbitWeight& o, const ChordDiagram& x) { return o.representative < x; });
  if (it == orbits_.end() || it->representative != rep) {
    throw Error(Errc::invalid_argument, "no orbit for diagram " + d.to_string());
  }
  return *it;
}

bool operator==(const GroundState& a, const GroundState& b) {
  if (a.length_ != b.length_ || a.orbits_.size() != b.orbits_.size()) return false;
  for (std::size_t k = 0; k < a.orbits_.size(); ++k) {
    const auto& x = a.orbits_[k];
    const auto& y = b.orbits_[k];
    if (x.representative != y.representative || x.size != y.size || x.weight != y.weight) return false;
  }
  return true;
}

bool verify_on_full_basis(const GroundState& gs, const DiagramBasis& basis) {
  if (basis.length() != gs.length()) return false;
  std::vector<mpz_class> psi(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) psi[i] = gs.weight_of(basis[i]);
  std::vector<mpz_class> y(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (const auto& e : hamiltonian_column(basis, c)) y[e.row] += psi[c] * static_cast<long>(e.value);
  }
  return std::all_of(y.begin(), y.end(), [](const mpz_class& z) { return sgn(z) == 0; });
}

GroundState groundstate(int length, const SolveOptions& options, const GroundStateCache* cache) {
  if (cache) {
    if (auto hit = cache->load(length)) return std::move(*hit);
  }
  const DiagramBasis basis = enumerate_diagrams(length);
  const OrbitPartition orbits = compute_orbits(basis, options.threads);

  std::vector<mpq_class> weights(orbits.size());
  if (options.use_reduction) {
    const IntensityMatrix reduced = build_reduced(basis, orbits, options.threads);
    const auto mass = kernel_vector(reduced, options.method, options.threads);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      weights[o] = mass[o] / static_cast<unsigned long>(orbits[o].size());
    }
  } else {
    const IntensityMatrix full = build_full(basis, options.threads);
    const auto psi = kernel_vector(full, options.method, options.threads);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      const auto& members = orbits[o].members;
      weights[o] = psi[members.front()];
      for (auto i : members) {
        if (psi[i] != weights[o]) {
          throw Error(Errc::symmetry_broken, "ground state is not constant on the orbit of " +
                                                 orbits[o].representative.to_string());
        }
      }
    }
  }

  NormalizedVector normalized = normalize_integer(weights);
  std::vector<OrbitWeight> entries;
  entries.reserve(orbits.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    entries.push_back({orbits[o].representative, orbits[o].size(), std::move(normalized.values[o])});
  }
  GroundState gs(length, options.use_reduction ? BasisKind::reduced : BasisKind::full, std::move(entries));
  if (!verify_on_full_basis(gs, basis)) {
    throw Error(Errc::verification_failed, "H psi != 0 on the full basis for L=" + std::to_string(length));
  }
  if (cache) cache->store(gs);
  return gs;
}

}  // namespace brauer
