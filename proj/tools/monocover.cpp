#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monocover/config.hpp"
#include "monocover/cover.hpp"
#include "monocover/examples.hpp"
#include "monocover/perm.hpp"
#include "monocover/report.hpp"
#include "monocover/search.hpp"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct VerifyOptions {
  std::string alpha;
  std::string beta;
  int degree = 0;
  bool force_stable = false;
  bool force_unstable = false;
  bool json = false;
};

struct SearchOptions {
  std::optional<int> degree;
  std::optional<std::string> transpositions;
  std::optional<std::string> alpha_type;
  std::optional<long long> max_results;
  std::optional<std::string> dedup;
  std::optional<int> workers;
  bool non_deterministic = false;
  bool near_misses = false;
  std::string config_path;
  std::string output_path;
  bool quiet = false;
};

struct ExamplesOptions {
  std::string name;
  bool json = false;
};

struct BoundsOptions {
  std::int64_t g = 0;
  std::int64_t chi = 0;
  std::int64_t k2 = 0;
  std::int64_t c2 = 0;
  bool stable = false;
  bool json = false;
};

void parse_transposition_range(const std::string& text, monocover::SearchConfig& cfg) {
  const auto parse_int = [&text](const std::string& piece) {
    std::size_t used = 0;
    const int value = std::stoi(piece, &used);
    if (used != piece.size()) {
      throw monocover::parse_error("bad transposition count '" + text + "'");
    }
    return value;
  };
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      cfg.min_transpositions = parse_int(text);
      cfg.max_transpositions = cfg.min_transpositions;
    } else {
      cfg.min_transpositions = parse_int(text.substr(0, dots));
      cfg.max_transpositions = parse_int(text.substr(dots + 2));
    }
  } catch (const std::logic_error&) {
    throw monocover::parse_error("bad transposition count '" + text + "'");
  }
}

std::vector<int> parse_cycle_type_list(const std::string& text, int degree) {
  std::vector<int> type;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    try {
      std::size_t used = 0;
      const int part = std::stoi(piece, &used);
      if (used != piece.size() || part < 1) {
        throw monocover::parse_error("bad cycle type entry '" + piece + "'");
      }
      type.push_back(part);
    } catch (const std::logic_error&) {
      throw monocover::parse_error("bad cycle type entry '" + piece + "'");
    }
  }
  if (type.empty()) {
    throw monocover::parse_error("empty cycle type");
  }
  long long sum = 0;
  for (int part : type) {
    sum += part;
  }
  if (sum > degree) {
    throw monocover::parse_error("cycle type sums to " + std::to_string(sum) +
                                 ", above the degree " +
                                 std::to_string(degree));
  }
  while (sum < degree) {
    type.push_back(1);
    ++sum;
  }
  return type;
}

int run_verify(const VerifyOptions& opt) {
  const monocover::Permutation alpha =
      monocover::parse_cycles(opt.alpha, opt.degree);
  const monocover::Permutation beta =
      monocover::parse_cycles(opt.beta, opt.degree);
  const monocover::MonodromyPair pair(alpha, beta);
  const monocover::CoverInvariants inv = monocover::analyze(pair);

  std::optional<monocover::BoundsReport> bounds;
  if (inv.fibre_genus && inv.chi && inv.k_squared && inv.c2) {
    bool stable = inv.valid;
    if (opt.force_stable) {
      stable = true;
    }
    if (opt.force_unstable) {
      stable = false;
    }
    bounds = monocover::bounds_report(*inv.fibre_genus, *inv.chi,
                                      *inv.k_squared, *inv.c2, stable);
  }

  const monocover::BoundsReport* bounds_ptr = bounds ? &*bounds : nullptr;
  if (opt.json) {
    std::cout << monocover::verify_json(pair, inv, bounds_ptr);
  } else {
    std::cout << monocover::verify_text(pair, inv, bounds_ptr);
  }
  return inv.valid ? kExitValid : kExitInvalid;
}

int run_search(const SearchOptions& opt) {
  monocover::SearchConfig cfg;
  cfg.worker_count = monocover::default_worker_count();
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) {
      throw monocover::parse_error("cannot read config file '" +
                                   opt.config_path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    cfg = monocover::parse_search_config(buffer.str());
  }

  if (opt.degree) {
    cfg.degree = *opt.degree;
  }
  if (cfg.degree < 1) {
    throw monocover::parse_error("a positive degree is required");
  }
  if (opt.transpositions) {
    parse_transposition_range(*opt.transpositions, cfg);
  }
  if (opt.alpha_type) {
    cfg.alpha_cycle_type = parse_cycle_type_list(*opt.alpha_type, cfg.degree);
  }
  if (opt.max_results) {
    if (*opt.max_results < 0) {
      throw monocover::parse_error("max results must be nonnegative");
    }
    cfg.max_results = static_cast<std::size_t>(*opt.max_results);
  }
  if (opt.dedup) {
    if (*opt.dedup == "off") {
      cfg.dedup = monocover::DedupMode::off;
    } else if (*opt.dedup == "centralizer") {
      cfg.dedup = monocover::DedupMode::centralizer;
    } else if (*opt.dedup == "full") {
      cfg.dedup = monocover::DedupMode::full;
    } else {
      throw monocover::parse_error(
          "dedup must be off, centralizer or full, got '" + *opt.dedup + "'");
    }
  }
  if (opt.workers) {
    if (*opt.workers < 1) {
      throw monocover::parse_error("worker count must be positive");
    }
    cfg.worker_count = *opt.workers;
  }
  if (opt.non_deterministic) {
    cfg.deterministic_order = false;
  }
  if (opt.near_misses) {
    cfg.collect_near_misses = true;
  }

  const monocover::SearchResult result = monocover::search(cfg);

  std::ofstream file;
  std::ostream* lines = &std::cout;
  if (!opt.output_path.empty()) {
    file.open(opt.output_path);
    if (!file) {
      throw monocover::parse_error("cannot write output file '" +
                                   opt.output_path + "'");
    }
    lines = &file;
  }
  for (const monocover::Certificate& c : result.certificates) {
    *lines << monocover::certificate_json_line(c) << '\n';
  }

  if (!opt.quiet) {
    std::cerr << monocover::search_summary_text(result.stats,
                                                result.certificates.size());
    for (const monocover::MonodromyPair& near : result.near_misses) {
      std::cerr << "near miss: " << monocover::format_cycles(near.alpha)
                << " | " << monocover::format_cycles(near.beta) << '\n';
    }
  }
  return kExitValid;
}

int run_examples(const ExamplesOptions& opt) {
  std::vector<monocover::ExampleRecord> records =
      monocover::builtin_examples();
  if (!opt.name.empty()) {
    std::erase_if(records, [&opt](const monocover::ExampleRecord& r) {
      return r.name != opt.name;
    });
    if (records.empty()) {
      throw monocover::parse_error("no example named '" + opt.name + "'");
    }
  }
  bool all_passed = true;
  for (const monocover::ExampleRecord& record : records) {
    const monocover::ExampleOutcome outcome = monocover::run_example(record);
    all_passed = all_passed && outcome.passed;
    if (opt.json) {
      std::cout << monocover::example_json(outcome) << '\n';
    } else {
      std::cout << monocover::example_text(outcome);
    }
  }
  return all_passed ? kExitValid : kExitInvalid;
}

int run_bounds(const BoundsOptions& opt) {
  if (opt.g < 2) {
    throw monocover::parse_error("fibre genus must be at least 2, got " +
                                 std::to_string(opt.g));
  }
  const monocover::BoundsReport report =
      monocover::bounds_report(opt.g, opt.chi, opt.k2, opt.c2, opt.stable);
  if (opt.json) {
    std::cout << monocover::bounds_json(report);
  } else {
    std::cout << monocover::bounds_text(report);
  }
  return report.all_pass ? kExitValid : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verify and search monodromy data of one-branch-point covers of an "
      "elliptic curve, with the invariants of the induced fibration"};
  app.require_subcommand(1);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Analyze one pair of permutations given as cycle text");
  verify->add_option("alpha", verify_opt.alpha, "First permutation")
      ->required();
  verify->add_option("beta", verify_opt.beta, "Second permutation")
      ->required();
  verify->add_option("-d,--degree", verify_opt.degree, "Degree of the cover")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_flag("--stable", verify_opt.force_stable,
                   "Check the stable-only bounds even for an invalid pair");
  verify->add_flag("--no-stable", verify_opt.force_unstable,
                   "Skip the stable-only bounds");
  verify->add_flag("--json", verify_opt.json, "Emit JSON instead of text");

  SearchOptions search_opt;
  CLI::App* search = app.add_subcommand(
      "search", "Enumerate valid pairs at a given degree");
  search->add_option("-d,--degree", search_opt.degree, "Degree to search");
  search->add_option("-k,--transpositions", search_opt.transpositions,
                     "Commutator transposition count, e.g. 2 or 2..4");
  search->add_option("--alpha-type", search_opt.alpha_type,
                     "Restrict alpha to one cycle type, e.g. 3,1");
  search->add_option("--max-results", search_opt.max_results,
                     "Emit at most this many certificates");
  search->add_option("--dedup", search_opt.dedup,
                     "Deduplication: off, centralizer or full");
  search->add_option("-w,--workers", search_opt.workers,
                     "Parallel worker count");
  search->add_flag("--non-deterministic", search_opt.non_deterministic,
                   "Do not sort output by canonical form");
  search->add_flag("--near-misses", search_opt.near_misses,
                   "Log transitive but imprimitive pairs to stderr");
  search->add_option("-c,--config", search_opt.config_path,
                     "Key = value config file");
  search->add_option("-o,--output", search_opt.output_path,
                     "Write certificate lines to a file instead of stdout");
  search->add_flag("-q,--quiet", search_opt.quiet,
                   "Suppress all stderr logging (summary and near-miss lines)");

  ExamplesOptions examples_opt;
  CLI::App* examples = app.add_subcommand(
      "examples", "Run the built-in example corpus");
  examples->add_option("--name", examples_opt.name, "Run a single example");
  examples->add_flag("--json", examples_opt.json,
                     "Emit one JSON object per example");

  BoundsOptions bounds_opt;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Check the inequality suite for given invariants");
  bounds->add_option("g", bounds_opt.g, "Fibre genus")->required();
  bounds->add_option("chi", bounds_opt.chi, "Euler characteristic chi(O)")
      ->required();
  bounds->add_option("k2", bounds_opt.k2, "Self-intersection K^2")
      ->required();
  bounds->add_option("c2", bounds_opt.c2, "Second Chern number c_2")
      ->required();
  bounds->add_flag("--stable", bounds_opt.stable,
                   "Include the stable-only entries");
  bounds->add_flag("--json", bounds_opt.json, "Emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      return run_verify(verify_opt);
    }
    if (search->parsed()) {
      return run_search(search_opt);
    }
    if (examples->parsed()) {
      return run_examples(examples_opt);
    }
    if (bounds->parsed()) {
      return run_bounds(bounds_opt);
    }
  } catch (const monocover::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
