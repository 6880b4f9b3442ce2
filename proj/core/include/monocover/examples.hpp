#ifndef MONOCOVER_EXAMPLES_HPP
#define MONOCOVER_EXAMPLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocover/cover.hpp"

namespace monocover {

/// Assertion that beta raised to `exponent` has the given cycle text.
struct PowerCheck {
  long long exponent = 1;
  std::string expected_cycles;
};

/// The subset of derived facts an example pins down. Absent fields are not
/// checked.
struct ExpectedFacts {
  std::optional<std::string> commutator_cycles;
  std::optional<bool> transitive;
  std::optional<bool> primitive;
  std::optional<bool> valid;
  std::optional<std::uint64_t> group_order;
  std::optional<int> curve_genus;
  std::optional<std::int64_t> fibre_genus;
  std::optional<std::int64_t> chi;
  std::optional<std::int64_t> k_squared;
  std::optional<std::int64_t> c2;
  std::optional<std::int64_t> node_count;
  std::optional<std::int64_t> delta_gamma;
  std::optional<PowerCheck> beta_power;
};

/// One entry of the built-in corpus. The permutations are stored as cycle
/// text so that a deliberately malformed entry can be carried alongside the
/// good ones.
struct ExampleRecord {
  std::string name;
  int degree = 0;
  std::string alpha_cycles;
  std::string beta_cycles;
  bool expect_parse_failure = false;
  ExpectedFacts expected;
  std::string notes;
};

/// Degree 4, alpha = (1 2 3), beta = (2 3 4): the smallest valid datum.
ExampleRecord example_1();

/// Degree 8, alpha the 7-cycle (1 2 3 4 5 6 7), beta = (8 3 4 1 5 6); the
/// group is PGL_2(F_7) of order 336.
ExampleRecord example_2();

/// The degree-8 datum with its alpha text left in a circulating misprinted
/// form that repeats the point 3; parsing must fail.
ExampleRecord example_2_as_printed();

/// The family member in S_{4n+1}, n >= 2: alpha = (1 2)(3 4)...(2n-1 2n),
/// beta = (1 2n+1)(2 2n+2 3 2n+3 ... 2n 4n 4n+1) with the long cycle
/// interleaving 2..2n and 2n+2..4n. Throws std::invalid_argument for n < 2.
ExampleRecord example_3(int n);

/// The whole corpus: examples 1, 2, 2-as-printed, and 3 for n in {2,...,5}.
std::vector<ExampleRecord> builtin_examples();

/// Result of checking one record: every present expected field compared
/// against a fresh analysis, parse behavior included.
struct ExampleOutcome {
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;
  std::optional<CoverInvariants> invariants;  // absent when parsing failed
};

ExampleOutcome run_example(const ExampleRecord& record);

}  // namespace monocover

#endif  // MONOCOVER_EXAMPLES_HPP
