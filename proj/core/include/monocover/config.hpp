#ifndef MONOCOVER_CONFIG_HPP
#define MONOCOVER_CONFIG_HPP

#include <string_view>

#include "monocover/search.hpp"

namespace monocover {

/// Worker count to use when none is configured: the MONOCOVER_WORKERS
/// environment variable when set (must be a positive integer, else
/// parse_error), 1 otherwise.
int default_worker_count();

/// Parses a flat key = value config file into a SearchConfig. Lines are
/// `key = value`, blank, or # comments. Keys:
///   degree           positive integer (required)
///   transpositions   single count "2" or inclusive range "2..4"
///   alpha_cycle_type comma-separated cycle lengths; padded with 1s up to
///                    the degree (so "3" at degree 4 means 3,1)
///   max_results      nonnegative integer
///   dedup            off | centralizer | full
///   workers          positive integer
///   deterministic    true | false
///   near_misses      true | false
/// Unknown keys, repeated keys, and malformed values are parse_errors.
/// Defaults match SearchConfig; workers defaults to default_worker_count().
SearchConfig parse_search_config(std::string_view text);

}  // namespace monocover

#endif  // MONOCOVER_CONFIG_HPP
