#include "monocover/config.hpp"

#include <charconv>
#include <cstdlib>
#include <set>
#include <string>

#include "monocover/perm.hpp"

namespace monocover {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

long long parse_integer(std::string_view value, const std::string& key) {
  long long out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || value.empty()) {
    throw parse_error(key + ": expected an integer, got '" +
                      std::string(value) + "'");
  }
  return out;
}

bool parse_boolean(std::string_view value, const std::string& key) {
  if (value == "true") {
    return true;
  }
  if (value == "false") {
    return false;
  }
  throw parse_error(key + ": expected true or false, got '" +
                    std::string(value) + "'");
}

}  // namespace

int default_worker_count() {
  const char* env = std::getenv("MONOCOVER_WORKERS");
  if (env == nullptr || *env == '\0') {
    return 1;
  }
  long long workers = 0;
  try {
    workers = parse_integer(env, "MONOCOVER_WORKERS");
  } catch (const parse_error&) {
    throw parse_error("MONOCOVER_WORKERS must be a positive integer, got '" +
                      std::string(env) + "'");
  }
  if (workers < 1 || workers > 1024) {
    throw parse_error("MONOCOVER_WORKERS must be between 1 and 1024, got " +
                      std::to_string(workers));
  }
  return static_cast<int>(workers);
}

SearchConfig parse_search_config(std::string_view text) {
  SearchConfig cfg;
  cfg.worker_count = default_worker_count();
  bool saw_degree = false;
  std::vector<int> alpha_type;
  bool saw_alpha_type = false;
  std::set<std::string> seen;

  std::size_t pos = 0;
  int line_number = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_number;

    line = trim(line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw parse_error("line " + std::to_string(line_number) +
                        ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw parse_error("line " + std::to_string(line_number) +
                        ": empty key");
    }
    if (!seen.insert(key).second) {
      throw parse_error("line " + std::to_string(line_number) +
                        ": repeated key '" + key + "'");
    }

    if (key == "degree") {
      cfg.degree = static_cast<int>(parse_integer(value, key));
      saw_degree = true;
    } else if (key == "transpositions") {
      const std::size_t dots = value.find("..");
      if (dots == std::string_view::npos) {
        const int k = static_cast<int>(parse_integer(value, key));
        cfg.min_transpositions = k;
        cfg.max_transpositions = k;
      } else {
        cfg.min_transpositions =
            static_cast<int>(parse_integer(trim(value.substr(0, dots)), key));
        cfg.max_transpositions = static_cast<int>(
            parse_integer(trim(value.substr(dots + 2)), key));
      }
    } else if (key == "alpha_cycle_type") {
      std::string_view rest = value;
      while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        std::string_view piece =
            trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{}
                                               : rest.substr(comma + 1);
        alpha_type.push_back(static_cast<int>(parse_integer(piece, key)));
      }
      if (alpha_type.empty()) {
        throw parse_error("alpha_cycle_type: expected cycle lengths");
      }
      saw_alpha_type = true;
    } else if (key == "max_results") {
      const long long cap = parse_integer(value, key);
      if (cap < 0) {
        throw parse_error("max_results must be nonnegative, got " +
                          std::to_string(cap));
      }
      cfg.max_results = static_cast<std::size_t>(cap);
    } else if (key == "dedup") {
      if (value == "off") {
        cfg.dedup = DedupMode::off;
      } else if (value == "centralizer") {
        cfg.dedup = DedupMode::centralizer;
      } else if (value == "full") {
        cfg.dedup = DedupMode::full;
      } else {
        throw parse_error("dedup: expected off, centralizer or full, got '" +
                          std::string(value) + "'");
      }
    } else if (key == "workers") {
      cfg.worker_count = static_cast<int>(parse_integer(value, key));
    } else if (key == "deterministic") {
      cfg.deterministic_order = parse_boolean(value, key);
    } else if (key == "near_misses") {
      cfg.collect_near_misses = parse_boolean(value, key);
    } else {
      throw parse_error("unknown key '" + key + "'");
    }
  }

  if (!saw_degree) {
    throw parse_error("missing required key 'degree'");
  }
  if (saw_alpha_type) {
    long long sum = 0;
    for (int part : alpha_type) {
      if (part < 1) {
        throw parse_error("alpha_cycle_type entries must be positive");
      }
      sum += part;
    }
    if (sum > cfg.degree) {
      throw parse_error("alpha_cycle_type sums to " + std::to_string(sum) +
                        ", above the degree " + std::to_string(cfg.degree));
    }
    while (sum < cfg.degree) {
      alpha_type.push_back(1);
      ++sum;
    }
    cfg.alpha_cycle_type = std::move(alpha_type);
  }
  return cfg;
}

}  // namespace monocover
