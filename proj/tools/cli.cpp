#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "brauer/class_counting.hpp"
#include "brauer/conjectures.hpp"
#include "brauer/diagram.hpp"
#include "brauer/error.hpp"
#include "brauer/kernel.hpp"
#include "brauer/monte_carlo.hpp"
#include "brauer/store.hpp"

namespace brauer::cli {

namespace {

/// Largest L at which count-classes still enumerates orbits.
constexpr int kClassEnumerationCeiling = 16;
/// Largest L at which simulate solves for the exact vector to compare with.
constexpr int kSimulateExactCeiling = 12;

struct RunConfig {
  int length = 0;
  int max_length = 0;
  int max_n = 0;
  bool classes = false;
  std::string format = "table";
  std::optional<std::string> cache_dir;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000000;
  std::string which = "all";
  std::string solver = "auto";
  bool no_reduction = false;
};

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions options;
  options.use_reduction = !cfg.no_reduction;
  options.method = parse_kernel_method(cfg.solver);
  options.threads = cfg.threads;
  return options;
}

GroundStateCache make_cache(const RunConfig& cfg) {
  return GroundStateCache(GroundStateCache::resolve_directory(cfg.cache_dir));
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const DiagramBasis basis = enumerate_diagrams(cfg.length);
  if (!cfg.classes) {
    if (cfg.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& d : basis) rows.push_back(d.to_string());
      out << rows.dump(2) << '\n';
      return kOk;
    }
    if (cfg.format == "csv") out << "diagram\n";
    for (const auto& d : basis) out << (cfg.format == "csv" ? csv_quote(d.to_string()) : d.to_string()) << '\n';
    return kOk;
  }
  const OrbitPartition orbits = compute_orbits(basis, cfg.threads);
  if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& o : orbits) rows.push_back({{"representative", o.representative.to_string()}, {"size", o.size()}});
    out << rows.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "representative,size\n";
    for (const auto& o : orbits) out << csv_quote(o.representative.to_string()) << ',' << o.size() << '\n';
  } else {
    const int width = std::max(16, 3 * cfg.length);
    out << std::left << std::setw(width) << "representative" << "size\n";
    for (const auto& o : orbits) out << std::left << std::setw(width) << o.representative.to_string() << o.size() << '\n';
  }
  return kOk;
}

int cmd_groundstate(const RunConfig& cfg, std::ostream& out) {
  const GroundStateCache cache = make_cache(cfg);
  const GroundState gs = groundstate(cfg.length, solve_options(cfg), &cache);
  if (cfg.format == "json") {
    out << serialize(gs);
    return kOk;
  }

  std::map<ChordDiagram, std::string> labels;
  for (const auto& label : all_labels(gs.length())) {
    std::string& slot = labels[gs.orbit_of(diagram_of(label)).representative];
    if (!slot.empty()) slot += ' ';
    slot += label_to_string(label);
  }
  std::vector<const OrbitWeight*> rows;
  for (const auto& o : gs.orbits()) rows.push_back(&o);
  std::stable_sort(rows.begin(), rows.end(), [](const OrbitWeight* a, const OrbitWeight* b) { return a->weight > b->weight; });

  if (cfg.format == "csv") {
    out << "representative,size,weight,label\n";
    for (const auto* o : rows) {
      const auto label = labels.find(o->representative);
      out << csv_quote(o->representative.to_string()) << ',' << o->size << ',' << o->weight.get_str() << ','
          << (label == labels.end() ? std::string() : csv_quote(label->second)) << '\n';
    }
    return kOk;
  }
  const int width = std::max(16, 3 * cfg.length);
  out << std::left << std::setw(width) << "representative" << std::setw(8) << "size" << std::setw(20) << "weight"
      << "label\n";
  for (const auto* o : rows) {
    const auto label = labels.find(o->representative);
    out << std::left << std::setw(width) << o->representative.to_string() << std::setw(8) << o->size
        << std::setw(20) << o->weight.get_str() << (label == labels.end() ? "" : label->second) << '\n';
  }
  out << "normalization " << gs.normalization() << ", total " << gs.total().get_str() << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const GroundStateCache cache = make_cache(cfg);
  const SolveOptions options = solve_options(cfg);
  GroundStates states;
  for (int length = 2; length <= cfg.max_length; ++length) {
    states.emplace(length, groundstate(length, options, &cache));
  }
  const auto wanted = [&](const char* name) { return cfg.which == "all" || cfg.which == name; };
  std::vector<CheckRecord> records;
  for (const auto& [length, gs] : states) {
    if (wanted("integrality")) records.push_back(verify_integrality(gs));
    if (wanted("maximality")) records.push_back(verify_maximality(gs));
    if (wanted("sum-rule")) records.push_back(verify_sum_rule(gs));
    if (wanted("degrees")) {
      for (auto& r : verify_degrees(gs)) records.push_back(std::move(r));
    }
  }
  if (wanted("factorization")) {
    for (auto& r : verify_factorization(states)) records.push_back(std::move(r));
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.length < b.length; });

  if (cfg.format == "json") {
    out << to_json(records).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "check,L,status,details\n";
    for (const auto& r : records) {
      out << r.check << ',' << r.length << ',' << to_string(r.status) << ',' << csv_quote(r.details) << '\n';
    }
  } else {
    out << to_table(records);
  }
  const bool ok = std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.ok(); });
  return ok ? kOk : kCheckFailed;
}

int cmd_sequence(const RunConfig& cfg, std::ostream& out) {
  const GroundStateCache cache = make_cache(cfg);
  const SolveOptions options = solve_options(cfg);
  GroundStates states;
  for (int n = 1; n <= cfg.max_n; ++n) states.emplace(2 * n, groundstate(2 * n, options, &cache));
  const auto terms = long_permutation_sequence(cfg.max_n, states);
  const auto& oracle = ReferenceOracles::get().long_permutation_sequence;

  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  if (cfg.format == "csv") out << "n,weight,oracle\n";
  if (cfg.format == "table") out << std::left << std::setw(4) << "n" << std::setw(24) << "weight" << "oracle\n";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string status = "none";
    if (i < oracle.size()) {
      status = terms[i] == oracle[i] ? "match" : "MISMATCH " + oracle[i].get_str();
      ok = ok && terms[i] == oracle[i];
    }
    if (cfg.format == "json") {
      rows.push_back({{"n", i + 1}, {"weight", terms[i].get_str()}, {"oracle", status}});
    } else if (cfg.format == "csv") {
      out << i + 1 << ',' << terms[i].get_str() << ',' << status << '\n';
    } else {
      out << std::left << std::setw(4) << i + 1 << std::setw(24) << terms[i].get_str() << status << '\n';
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

int cmd_count_classes(const RunConfig& cfg, std::ostream& out) {
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  if (cfg.format == "csv") out << "n,formula,enumerated,match\n";
  if (cfg.format == "table") {
    out << std::left << std::setw(4) << "n" << std::setw(20) << "formula" << std::setw(12) << "enumerated"
        << "match\n";
  }
  for (int n = 1; n <= cfg.max_n; ++n) {
    const mpz_class formula = class_count(static_cast<unsigned long>(n));
    std::optional<std::size_t> enumerated;
    if (2 * n <= kClassEnumerationCeiling) {
      enumerated = compute_orbits(enumerate_diagrams(2 * n), cfg.threads).size();
    }
    const bool match = !enumerated || formula == static_cast<unsigned long>(*enumerated);
    ok = ok && match;
    const std::string enum_text = enumerated ? std::to_string(*enumerated) : "-";
    const std::string match_text = enumerated ? (match ? "yes" : "NO") : "-";
    if (cfg.format == "json") {
      nlohmann::json row = {{"n", n}, {"formula", formula.get_str()}};
      row["enumerated"] = enumerated ? nlohmann::json(*enumerated) : nlohmann::json(nullptr);
      row["match"] = enumerated ? nlohmann::json(match) : nlohmann::json(nullptr);
      rows.push_back(std::move(row));
    } else if (cfg.format == "csv") {
      out << n << ',' << formula.get_str() << ',' << enum_text << ',' << match_text << '\n';
    } else {
      out << std::left << std::setw(4) << n << std::setw(20) << formula.get_str() << std::setw(12) << enum_text
          << match_text << '\n';
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  std::optional<GroundState> exact;
  if (cfg.length <= kSimulateExactCeiling) {
    const GroundStateCache cache = make_cache(cfg);
    exact = groundstate(cfg.length, solve_options(cfg), &cache);
  }
  MonteCarloOptions options;
  options.threads = cfg.threads;
  const MonteCarloReport report =
      monte_carlo_crosscheck(cfg.length, cfg.samples, cfg.seed, exact ? &*exact : nullptr, options);
  if (cfg.format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "representative,size,estimate,std_error,exact,z\n";
    for (const auto& o : report.orbits) {
      out << csv_quote(o.representative.to_string()) << ',' << o.size << ',' << o.estimate << ',' << o.std_error
          << ',' << (o.exact ? std::to_string(*o.exact) : "") << ',' << (o.z ? std::to_string(*o.z) : "") << '\n';
    }
  } else {
    out << report.to_table();
  }
  return report.within(5.0) ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact ground states of the Brauer loop model on a periodic chain"};
  app.name("brauer");
  app.require_subcommand(1);

  const auto formats = CLI::IsMember({"csv", "json", "table"});
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv | json | table")->check(formats);
  };
  const auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cfg.cache_dir, "ground-state cache (default $BRAUER_CACHE_DIR, .brauer-cache)");
    sub->add_option("--solver", cfg.solver, "auto | bareiss | modular")->check(CLI::IsMember({"auto", "bareiss", "modular"}));
    sub->add_flag("--no-reduction", cfg.no_reduction, "solve on the full basis");
  };
  const auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  };
  const std::string length_help = "system size L";
  const auto length_range = CLI::Range(2, kMaxEnumerationLength);

  auto* enumerate = app.add_subcommand("enumerate", "list diagrams or symmetry classes");
  enumerate->add_option("--length,-L", cfg.length, length_help)->required()->check(length_range);
  enumerate->add_flag("--classes", cfg.classes, "orbit representatives with sizes");
  add_format(enumerate);
  add_threads(enumerate);

  auto* ground = app.add_subcommand("groundstate", "exact ground state by orbit");
  ground->add_option("--length,-L", cfg.length, length_help)->required()->check(length_range);
  add_format(ground);
  add_solver(ground);
  add_threads(ground);

  auto* verify = app.add_subcommand("verify", "run conjecture checks for L = 2..max-length");
  verify->add_option("--max-length", cfg.max_length, "largest L")->required()->check(CLI::Range(2, kMaxEnumerationLength));
  verify->add_option("--which", cfg.which, "integrality | factorization | maximality | sum-rule | degrees | all")
      ->check(CLI::IsMember({"integrality", "factorization", "maximality", "sum-rule", "degrees", "all"}));
  add_format(verify);
  add_solver(verify);
  add_threads(verify);

  auto* sequence = app.add_subcommand("sequence", "long-permutation weights");
  sequence->add_option("--max-n", cfg.max_n, "largest n")->required()->check(CLI::Range(1, kMaxEnumerationLength / 2));
  add_format(sequence);
  add_solver(sequence);
  add_threads(sequence);

  auto* count = app.add_subcommand("count-classes", "closed-form class counts against enumeration");
  count->add_option("--max-n", cfg.max_n, "largest n")->required()->check(CLI::Range(1, 64));
  add_format(count);
  add_threads(count);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the orbit distribution");
  simulate->add_option("--length,-L", cfg.length, length_help)->required()->check(length_range);
  simulate->add_option("--samples", cfg.samples, "uniformized steps")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", cfg.seed, "random seed");
  add_format(simulate);
  add_solver(simulate);
  add_threads(simulate);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("brauer");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*ground) return cmd_groundstate(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*sequence) return cmd_sequence(cfg, out);
    if (*count) return cmd_count_classes(cfg, out);
    if (*simulate) return cmd_simulate(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::invalid_argument ? kUsage : kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace brauer::cli
