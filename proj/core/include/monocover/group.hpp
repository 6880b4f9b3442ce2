#ifndef MONOCOVER_GROUP_HPP
#define MONOCOVER_GROUP_HPP

#include <cstdint>
#include <vector>

#include "monocover/perm.hpp"

namespace monocover {

/// A permutation group given by generators, G = <g1, ..., gm> in S_d. An
/// empty generator list is the trivial group. Throws std::invalid_argument
/// for a degree below 1 or a generator of mismatched degree.
struct GeneratedGroup {
  int degree = 0;
  std::vector<Permutation> generators;

  GeneratedGroup(int degree, std::vector<Permutation> gens);
};

/// Orbit of a point under the group: closure of {point} under all
/// generators and their inverses. Sorted ascending.
/// Throws std::invalid_argument when the point is out of range.
std::vector<int> orbit(const GeneratedGroup& g, int point);

/// True iff the orbit of 1 is all of {1,...,d}.
bool is_transitive(const GeneratedGroup& g);

/// Smallest block of a G-invariant block system containing both points, for
/// transitive G. Returns {1,...,d} when the only such block is everything.
/// Sorted ascending. Throws std::invalid_argument when g is not transitive
/// or the points are not distinct.
std::vector<int> minimal_block_containing(const GeneratedGroup& g, int a, int b);

/// True iff g is transitive and preserves no nontrivial block system.
/// Transitive groups of prime degree are primitive; degree 1 is primitive by
/// convention; intransitive groups return false.
bool is_primitive(const GeneratedGroup& g);

/// |G| via a deterministic stabilizer chain with base points 1, 2, ....
/// Throws std::overflow_error if the order exceeds the range of uint64.
std::uint64_t group_order(const GeneratedGroup& g);

/// Full closure of the generators under composition, as a testing oracle.
/// Always contains the identity. Throws std::overflow_error when the closure
/// exceeds cap elements.
std::vector<Permutation> enumerate_elements(const GeneratedGroup& g,
                                            std::size_t cap = 1000000);

}  // namespace monocover

#endif  // MONOCOVER_GROUP_HPP
