#ifndef MONOCOVER_COVER_HPP
#define MONOCOVER_COVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocover/perm.hpp"

namespace monocover {

/// Candidate monodromy datum for a degree-d cover of an elliptic curve
/// branched over one point: the two loop images (alpha, beta) in S_d.
struct MonodromyPair {
  int degree = 0;
  Permutation alpha;
  Permutation beta;

  MonodromyPair(Permutation a, Permutation b);
};

/// Branch behavior over the single branch point: the multiset of nontrivial
/// cycle lengths of [alpha, beta], sorted descending. Each length is a
/// ramification index of the cover; the number of entries is the number of
/// ramification points.
struct RamificationProfile {
  int degree = 0;
  std::vector<int> lengths;
};

RamificationProfile ramification_profile(const MonodromyPair& m);

/// True iff the profile is nonempty and every index equals 2 (simple
/// ramification; the ramification divisor is reduced). Empty profiles are
/// etale and excluded.
bool is_reduced_ramification(const RamificationProfile& p);

/// Genus of the covering curve over a genus-1 base: 2g_C - 2 = sum(l_i - 1).
/// Throws std::invalid_argument when the ramification sum is odd (such a
/// profile cannot come from a commutator).
int curve_genus(const RamificationProfile& p);

/// Genus of the general fibre of the difference fibration on C x C:
/// g(F) = 2(g_C - 1)d + 1. Requires g_C >= 2 and d >= 2.
std::int64_t fibre_genus(int curve_genus, int degree);

/// chi(O), K^2 and c_2 of the product surface C x C for g_C >= 2:
/// ((g_C-1)^2, 8(g_C-1)^2, 4(g_C-1)^2). Always satisfies 12*chi = K^2 + c_2.
struct SurfaceInvariants {
  std::int64_t chi = 0;
  std::int64_t k_squared = 0;
  std::int64_t c2 = 0;

  bool operator==(const SurfaceInvariants&) const = default;
};

SurfaceInvariants surface_invariants(int curve_genus);

/// Data of the unique singular fibre F_0 = diagonal + residual for a cover
/// with reduced ramification: r = 2g_C - 2 ramification points give r^2
/// nodes, and the two components meet in diagonal . residual = r points.
struct SingularFibreStats {
  std::int64_t node_count = 0;
  std::int64_t delta_gamma = 0;

  bool operator==(const SingularFibreStats&) const = default;
};

SingularFibreStats singular_fibre_stats(int curve_genus);

/// Inputs to the node-count formula n = g - g(N) + c - 1 for a reducible
/// semistable fibre: general-fibre genus, normalization genus, component
/// count.
struct BeauvilleInput {
  std::int64_t fibre_genus = 0;
  std::int64_t normalization_genus = 0;
  std::int64_t component_count = 1;
};

/// n = g - g(N) + c - 1. Throws std::invalid_argument on a negative result
/// (inconsistent input) or component_count < 1.
std::int64_t beauville_node_count(const BeauvilleInput& b);

/// One checked inequality of the invariant bounds suite. `applicable` is
/// false for stable-only entries when the fibration is not assumed stable,
/// and for the conditional entry (v) unless its hypothesis holds;
/// non-applicable entries never fail.
struct BoundsEntry {
  std::string id;          // "i" ... "vi", "g>=4"
  std::string statement;   // e.g. "K^2 < 2g-2"
  std::string detail;      // instantiated integers, e.g. "8 < 16"
  bool applicable = true;
  bool informational = false;  // entry records a conclusion, not a check
  bool pass = true;
};

/// Result of checking the numeric constraints a semistable fibration over an
/// elliptic curve with a unique singular fibre must satisfy.
struct BoundsReport {
  std::vector<BoundsEntry> entries;
  std::vector<std::string> notes;
  bool all_pass = true;  // over applicable, non-informational entries
};

/// Checks, in exact integer arithmetic:
///   (i)   K^2 < 2g - 2
///   (ii)  chi < g/2            (as 2*chi < g)
///   (iii) c_2 < 4g + 2
///   (iv)  c_2 <= 3g - 3                     [stable only]
///   (v)   c_2 = 3g - 3 forces q = 1 and the Albanese map   [note]
///   (vi)  2 < 12*chi/5 < g - 1 (as 10 < 12*chi < 5(g-1))   [stable only]
///   plus g >= 4                              [stable only]
/// Requires g >= 2.
BoundsReport bounds_report(std::int64_t g, std::int64_t chi, std::int64_t k2,
                           std::int64_t c2, bool stable);

/// Everything derived from a monodromy pair. Numeric fields whose formulas
/// do not apply (g_C < 2, or non-reduced ramification for the fibre stats)
/// are absent; flags record which hypotheses hold. `valid` means the pair
/// certifies a semistable fibration with a unique singular fibre.
struct CoverInvariants {
  int degree = 0;
  bool transitive = false;
  bool primitive = false;
  bool reduced_ramification = false;
  bool valid = false;
  int curve_genus = 0;
  int ramification_point_count = 0;
  std::optional<std::uint64_t> group_order;  // absent when it exceeds 2^64-1
  std::optional<std::int64_t> fibre_genus;
  std::optional<std::int64_t> chi;
  std::optional<std::int64_t> k_squared;
  std::optional<std::int64_t> c2;
  std::optional<std::int64_t> node_count;
  std::optional<std::int64_t> delta_gamma;

  bool operator==(const CoverInvariants&) const = default;
};

/// Runs the full pipeline: ramification, genus, transitivity, primitivity,
/// group order, surface and singular-fibre numbers. Never throws on
/// mathematically meaningful input; failures are flags.
CoverInvariants analyze(const MonodromyPair& m);

}  // namespace monocover

#endif  // MONOCOVER_COVER_HPP
