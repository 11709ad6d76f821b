#include "brauer/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "brauer/error.hpp"
#include "brauer/generators.hpp"
#include "brauer/parallel.hpp"

namespace brauer {

double MonteCarloReport::max_abs_z() const {
  double worst = 0.0;
  for (const auto& o : orbits) {
    if (o.z) worst = std::max(worst, std::abs(*o.z));
  }
  return worst;
}

bool MonteCarloReport::within(double sigmas) const { return max_abs_z() <= sigmas; }

std::string MonteCarloReport::to_table() const {
  std::ostringstream out;
  out << "L=" << length << " samples=" << samples << " seed=" << seed << '\n';
  out << std::left << std::setw(3 * length + 4) << "representative" << std::setw(6) << "size" << std::setw(12)
      << "estimate" << std::setw(12) << "stderr" << std::setw(12) << "exact" << "z\n";
  out << std::setprecision(6) << std::fixed;
  for (const auto& o : orbits) {
    out << std::left << std::setw(3 * length + 4) << o.representative.to_string() << std::setw(6) << o.size
        << std::setw(12) << o.estimate << std::setw(12) << o.std_error;
    if (o.exact) {
      out << std::setw(12) << *o.exact << std::setprecision(2) << *o.z << std::setprecision(6);
    } else {
      out << std::setw(12) << "-" << "-";
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json MonteCarloReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& o : orbits) {
    nlohmann::json row = {{"representative", o.representative.to_string()},
                          {"size", o.size},
                          {"estimate", o.estimate},
                          {"std_error", o.std_error}};
    row["exact"] = o.exact ? nlohmann::json(*o.exact) : nlohmann::json(nullptr);
    row["z"] = o.z ? nlohmann::json(*o.z) : nlohmann::json(nullptr);
    rows.push_back(std::move(row));
  }
  return {{"length", length}, {"samples", samples}, {"seed", seed}, {"orbits", std::move(rows)}};
}

MonteCarloReport monte_carlo_crosscheck(int length, std::uint64_t samples, std::uint64_t seed,
                                        const GroundState* exact, const MonteCarloOptions& options) {
  if (length < 2 || length > kMaxEnumerationLength) {
    throw Error(Errc::invalid_argument, "monte carlo needs 2 <= L <= " + std::to_string(kMaxEnumerationLength));
  }
  if (exact && exact->length() != length) throw Error(Errc::invalid_argument, "exact ground state has wrong length");
  const std::size_t streams = std::max<std::size_t>(1, options.streams);
  const std::size_t batches_per_stream = std::max<std::size_t>(1, options.batches_per_stream);
  const std::size_t batches = streams * batches_per_stream;
  if (samples < batches) {
    throw Error(Errc::invalid_argument, "need at least " + std::to_string(batches) + " samples");
  }

  const DiagramBasis basis = enumerate_diagrams(length);
  const OrbitPartition partition = compute_orbits(basis, options.threads);
  const std::size_t dim = basis.size();
  const std::size_t moves = 3 * static_cast<std::size_t>(length);

  std::vector<std::uint32_t> next(dim * moves);
  parallel_for(dim, options.threads, [&](std::size_t s) {
    for (int i = 0; i < length; ++i) {
      const ChordDiagram e = apply_monoid(i, basis[s]);
      next[s * moves + 2 * i] = next[s * moves + 2 * i + 1] = static_cast<std::uint32_t>(basis.index_of(e));
      next[s * moves + 2 * length + i] = static_cast<std::uint32_t>(basis.index_of(apply_braid(i, basis[s])));
    }
  });

  // counts[batch][orbit]
  std::vector<std::vector<std::uint64_t>> counts(batches, std::vector<std::uint64_t>(partition.size(), 0));
  std::vector<std::uint64_t> batch_steps(batches, 0);
  parallel_for(streams, options.threads, [&](std::size_t stream) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(stream)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> pick(0, moves - 1);
    std::size_t state = 0;
    for (std::uint64_t t = 0; t < options.burn_in; ++t) state = next[state * moves + pick(rng)];
    for (std::size_t b = 0; b < batches_per_stream; ++b) {
      const std::size_t batch = stream * batches_per_stream + b;
      const std::uint64_t steps = samples * (batch + 1) / batches - samples * batch / batches;
      auto& row = counts[batch];
      for (std::uint64_t t = 0; t < steps; ++t) {
        state = next[state * moves + pick(rng)];
        ++row[partition.orbit_of(state)];
      }
      batch_steps[batch] = steps;
    }
  });

  MonteCarloReport report;
  report.length = length;
  report.samples = samples;
  report.seed = seed;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    OrbitEstimate o;
    o.representative = partition[k].representative;
    o.size = partition[k].size();
    std::uint64_t hits = 0;
    for (std::size_t b = 0; b < batches; ++b) hits += counts[b][k];
    o.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    double var = 0.0;
    for (std::size_t b = 0; b < batches; ++b) {
      const double f = static_cast<double>(counts[b][k]) / static_cast<double>(batch_steps[b]);
      var += (f - o.estimate) * (f - o.estimate);
    }
    o.std_error = batches > 1 ? std::sqrt(var / static_cast<double>(batches - 1) / static_cast<double>(batches)) : 0.0;
    if (exact) {
      const OrbitWeight& w = exact->orbit_of(o.representative);
      const mpq_class p(w.weight * static_cast<unsigned long>(w.size), exact->total());
      o.exact = p.get_d();
      const double diff = o.estimate - *o.exact;
      if (o.std_error > 0.0) {
        o.z = diff / o.std_error;
      } else {
        o.z = std::abs(diff) < 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
      }
    }
    report.orbits.push_back(std::move(o));
  }
  std::sort(report.orbits.begin(), report.orbits.end(),
            [](const OrbitEstimate& a, const OrbitEstimate& b) { return a.representative < b.representative; });
  return report;
}

}  // namespace brauer
