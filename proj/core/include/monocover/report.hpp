#ifndef MONOCOVER_REPORT_HPP
#define MONOCOVER_REPORT_HPP

#include <cstddef>
#include <string>

#include "monocover/cover.hpp"
#include "monocover/examples.hpp"
#include "monocover/search.hpp"

namespace monocover {

/// One certificate as a single JSON object on one line, fields in a fixed
/// order: degree, alpha, beta, commutator, curve_genus, fibre_genus, chi,
/// k_squared, c2, nodes, delta_gamma, group_order, transitive, primitive,
/// reduced, valid. Permutations are cycle text; absent numbers are null.
std::string certificate_json_line(const Certificate& c);

/// Inverse of certificate_json_line. The stored commutator text must match
/// the pair, else parse_error. The canonical_form of the result is the
/// literal pair text (the deduplication mode is not persisted).
Certificate certificate_from_json_line(const std::string& line);

/// Human-readable analysis of one pair; `bounds` may be null when the
/// invariants do not reach the bounds checker (curve genus below 2).
std::string verify_text(const MonodromyPair& pair, const CoverInvariants& inv,
                        const BoundsReport* bounds);

/// The same analysis as a single JSON document (certificate fields plus a
/// "bounds" object, null when not computed).
std::string verify_json(const MonodromyPair& pair, const CoverInvariants& inv,
                        const BoundsReport* bounds);

std::string bounds_text(const BoundsReport& r);
std::string bounds_json(const BoundsReport& r);

std::string example_text(const ExampleOutcome& o);
std::string example_json(const ExampleOutcome& o);

std::string search_summary_text(const SearchStats& stats,
                                std::size_t emitted);
std::string search_summary_json(const SearchStats& stats,
                                std::size_t emitted);

}  // namespace monocover

#endif  // MONOCOVER_REPORT_HPP
