#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "monocover/config.hpp"
#include "monocover/perm.hpp"

using namespace monocover;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value == nullptr) {
      unsetenv("MONOCOVER_WORKERS");
    } else {
      setenv("MONOCOVER_WORKERS", value, 1);
    }
  }
  ~EnvGuard() { unsetenv("MONOCOVER_WORKERS"); }
};

}  // namespace

TEST_CASE("a full config file parses") {
  const SearchConfig cfg = parse_search_config(
      "# search setup\n"
      "degree = 6\n"
      "transpositions = 2..4\n"
      "alpha_cycle_type = 3, 2\n"
      "max_results = 10\n"
      "dedup = full\n"
      "workers = 3\n"
      "deterministic = false\n"
      "near_misses = true\n");
  CHECK(cfg.degree == 6);
  CHECK(cfg.min_transpositions == 2);
  CHECK(cfg.max_transpositions == 4);
  REQUIRE(cfg.alpha_cycle_type.has_value());
  CHECK(*cfg.alpha_cycle_type == std::vector<int>{3, 2, 1});
  CHECK(cfg.max_results == 10);
  CHECK(cfg.dedup == DedupMode::full);
  CHECK(cfg.worker_count == 3);
  CHECK_FALSE(cfg.deterministic_order);
  CHECK(cfg.collect_near_misses);
}

TEST_CASE("omitted keys keep their defaults") {
  const EnvGuard env(nullptr);
  const SearchConfig cfg = parse_search_config("degree = 4\n");
  CHECK(cfg.degree == 4);
  CHECK(cfg.min_transpositions == 2);
  CHECK(cfg.max_transpositions == 2);
  CHECK_FALSE(cfg.alpha_cycle_type.has_value());
  CHECK_FALSE(cfg.max_results.has_value());
  CHECK(cfg.dedup == DedupMode::centralizer);
  CHECK(cfg.worker_count == 1);
  CHECK(cfg.deterministic_order);
  CHECK_FALSE(cfg.collect_near_misses);
}

TEST_CASE("single transposition counts and zero caps parse") {
  const SearchConfig cfg =
      parse_search_config("degree = 5\ntranspositions = 2\nmax_results = 0\n");
  CHECK(cfg.min_transpositions == 2);
  CHECK(cfg.max_transpositions == 2);
  REQUIRE(cfg.max_results.has_value());
  CHECK(*cfg.max_results == 0);
}

TEST_CASE("range sanity is deferred to the search") {
  // An inverted range is structurally fine here; search() rejects it.
  const SearchConfig cfg =
      parse_search_config("degree = 4\ntranspositions = 4..2\n");
  CHECK(cfg.min_transpositions == 4);
  CHECK(cfg.max_transpositions == 2);
  CHECK_THROWS_AS(search(cfg), std::invalid_argument);
}

TEST_CASE("malformed config files are rejected") {
  CHECK_THROWS_AS(parse_search_config("transpositions = 2\n"), parse_error);
  CHECK_THROWS_AS(parse_search_config("degree = 4\ncolour = red\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_search_config("degree = 4\ndegree = 5\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_search_config("degree = zero\n"), parse_error);
  CHECK_THROWS_AS(parse_search_config("degree = 4\ndeterministic = yes\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_search_config("degree = 4\nmax_results = -1\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_search_config("degree = 4\ndedup = fast\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_search_config("degree = 4\nno equals sign\n"),
                  parse_error);
  CHECK_THROWS_AS(
      parse_search_config("degree = 4\nalpha_cycle_type = 3, 0\n"),
      parse_error);
  CHECK_THROWS_AS(
      parse_search_config("degree = 4\nalpha_cycle_type = 3, 2\n"),
      parse_error);  // sums past the degree
}

TEST_CASE("the worker environment variable feeds the default") {
  {
    const EnvGuard env("7");
    CHECK(default_worker_count() == 7);
    CHECK(parse_search_config("degree = 4\n").worker_count == 7);
    // An explicit key still wins.
    CHECK(parse_search_config("degree = 4\nworkers = 2\n").worker_count == 2);
  }
  {
    const EnvGuard env(nullptr);
    CHECK(default_worker_count() == 1);
  }
  {
    const EnvGuard env("");
    CHECK(default_worker_count() == 1);
  }
  {
    const EnvGuard env("eight");
    CHECK_THROWS_AS(default_worker_count(), parse_error);
  }
  {
    const EnvGuard env("0");
    CHECK_THROWS_AS(default_worker_count(), parse_error);
  }
  {
    const EnvGuard env("2000");
    CHECK_THROWS_AS(default_worker_count(), parse_error);
  }
}
