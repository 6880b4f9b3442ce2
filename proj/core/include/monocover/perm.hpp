#ifndef MONOCOVER_PERM_HPP
#define MONOCOVER_PERM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monocover {

/// Raised when cycle text cannot be parsed into a permutation.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bijection of {1,...,d}, stored as a full image table for O(1) application.
///
/// Points are 1-based everywhere in the public interface; the degree is
/// explicit and never inferred from the largest moved point, so trailing
/// fixed points are representable. Values are immutable after construction
/// and safe to share across threads.
class Permutation {
public:
  /// Identity permutation of the given degree (>= 1).
  explicit Permutation(int degree);

  /// Builds a permutation from a 1-based image table: images[i-1] is the
  /// image of point i. Throws std::invalid_argument unless the table is a
  /// bijection of {1,...,d}.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of a 1-based point.
  int operator()(int point) const { return images_[point - 1]; }

  /// The underlying 1-based image table.
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Smallest point moved by this permutation, or 0 for the identity.
  int min_moved_point() const;

  bool operator==(const Permutation& other) const = default;
  /// Lexicographic order on image tables; degrees compare first.
  bool operator<(const Permutation& other) const;

private:
  struct raw_tag {};
  Permutation(raw_tag, std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// p ∘ q: the map x -> p(q(x)) (composition is right to left; q acts first).
/// Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// [a, b] = a b a⁻¹ b⁻¹ under the right-to-left convention.
Permutation commutator(const Permutation& a, const Permutation& b);

/// s p s⁻¹: relabels p along s, mapping s(i) -> s(p(i)).
Permutation conjugate(const Permutation& s, const Permutation& p);

/// p^n for any integer n (negative exponents use the inverse).
Permutation power(const Permutation& p, long long n);

/// Disjoint-cycle form in canonical shape: each cycle starts at its smallest
/// element, cycles are sorted by smallest element, fixed points listed
/// separately in increasing order.
struct CycleDecomposition {
  int degree = 0;
  std::vector<std::vector<int>> cycles;
  std::vector<int> fixed_points;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Lengths of all cycles including fixed points as 1s, sorted descending.
/// The entries always sum to the degree.
std::vector<int> cycle_type(const Permutation& p);

/// Canonical cycle text: "(1 4)(2 3)", or "()" for the identity. Reparsing
/// the result reproduces the permutation bit-exactly.
std::string format_cycles(const Permutation& p);
std::string format_cycles(const CycleDecomposition& dec);

/// Parses cycle notation: parenthesized cycles of decimal points separated
/// by spaces or commas; "()" or "id" is the identity; omitted points are
/// fixed. The listed cycles multiply right to left (the last cycle acts
/// first). Cycles need not be disjoint. Throws parse_error on malformed
/// text, a repeated point within one cycle, or a point exceeding degree.
Permutation parse_cycles(std::string_view text, int degree);

}  // namespace monocover

template <>
struct std::hash<monocover::Permutation> {
  std::size_t operator()(const monocover::Permutation& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ p.images().size();
    for (int v : p.images())
      h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

#endif  // MONOCOVER_PERM_HPP
