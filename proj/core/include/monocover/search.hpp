#ifndef MONOCOVER_SEARCH_HPP
#define MONOCOVER_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocover/cover.hpp"
#include "monocover/perm.hpp"

namespace monocover {

/// How search output is folded into equivalence classes.
///   off         keep every hit literally.
///   centralizer alpha is pinned to its class representative; beta is
///               minimized over the representative's centralizer. Default.
///   full        minimize the whole pair over simultaneous conjugation by
///               S_d. Exact but factorial-cost; allowed only for d <= 8.
enum class DedupMode { off, centralizer, full };

struct SearchConfig {
  int degree = 0;
  int min_transpositions = 2;  // commutator transposition count, inclusive
  int max_transpositions = 2;
  std::optional<std::vector<int>> alpha_cycle_type;
  std::optional<std::size_t> max_results;
  DedupMode dedup = DedupMode::centralizer;
  int worker_count = 1;
  bool deterministic_order = true;
  bool collect_near_misses = false;
};

/// A found pair plus everything needed to check it independently. The pair
/// always revalidates: analyze(pair) reproduces `invariants` exactly and
/// invariants.valid is true.
struct Certificate {
  MonodromyPair pair;
  CoverInvariants invariants;
  std::string canonical_form;
};

struct SearchStats {
  std::uint64_t pairs_scanned = 0;       // (alpha-class, beta) pairs examined
  std::uint64_t commutator_matches = 0;  // survived the cycle-type filter
  std::uint64_t transitive_matches = 0;
  std::uint64_t raw_certificates = 0;    // valid pairs before deduplication
  std::uint64_t classes = 0;             // after deduplication, before cap
};

struct SearchResult {
  std::vector<Certificate> certificates;
  std::vector<MonodromyPair> near_misses;  // failed only primitivity
  SearchStats stats;
};

/// All integer partitions of d in descending lexicographic order, each
/// written largest part first. These index the conjugacy classes of S_d.
std::vector<std::vector<int>> cycle_types_of_degree(int d);

/// The canonical class representative with the given cycle type: cycles fill
/// {1,...,d} left to right, longest first. Throws std::invalid_argument when
/// the entries are not a partition (some entry < 1).
Permutation representative_of_cycle_type(const std::vector<int>& type);

/// Bit-exact class label of a pair under the given equivalence; equal labels
/// mean equivalent pairs. Throws std::invalid_argument for full mode above
/// degree 8.
std::string canonical_form(const MonodromyPair& pair, DedupMode mode);

/// True iff re-running the analysis on c.pair reproduces c.invariants
/// field-for-field and the pair is valid.
bool validate_certificate(const Certificate& c);

/// Enumerates pairs (alpha, beta) with alpha one representative per
/// conjugacy class (conjugation maps solutions to solutions, so this loses
/// nothing), beta over all of S_d, keeping pairs whose commutator is a
/// product of k disjoint transpositions for a feasible k in the configured
/// range and whose group is transitive and primitive. Work is split into
/// independent (class, beta-range) chunks; with deterministic_order the
/// output is byte-identical for every worker_count.
/// Throws std::invalid_argument when the configuration is infeasible: no
/// even k with 2k <= d in range, degree above 9 without an alpha filter, or
/// full deduplication above degree 8.
SearchResult search(const SearchConfig& cfg);

}  // namespace monocover

#endif  // MONOCOVER_SEARCH_HPP
