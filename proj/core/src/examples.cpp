#include "monocover/examples.hpp"

#include <stdexcept>
#include <string>

#include "monocover/perm.hpp"

namespace monocover {

namespace {

template <typename T>
std::string render(const T& value) {
  if constexpr (std::is_same_v<T, bool>) {
    return value ? "true" : "false";
  } else if constexpr (std::is_same_v<T, std::string>) {
    return value;
  } else {
    return std::to_string(value);
  }
}

template <typename T, typename U>
void check_field(std::vector<std::string>& failures, const char* field,
                 const std::optional<T>& expected, const U& actual) {
  if (!expected) {
    return;
  }
  if constexpr (std::is_same_v<U, std::optional<typename std::decay_t<
                                      decltype(*expected)>>>) {
    if (!actual) {
      failures.push_back(std::string(field) + ": expected " +
                         render(*expected) + ", value is absent");
    } else if (*actual != *expected) {
      failures.push_back(std::string(field) + ": expected " +
                         render(*expected) + ", got " + render(*actual));
    }
  } else {
    if (actual != *expected) {
      failures.push_back(std::string(field) + ": expected " +
                         render(*expected) + ", got " + render(actual));
    }
  }
}

}  // namespace

ExampleRecord example_1() {
  ExampleRecord r;
  r.name = "example-1";
  r.degree = 4;
  r.alpha_cycles = "(1 2 3)";
  r.beta_cycles = "(2 3 4)";
  r.expected.commutator_cycles = "(1 4)(2 3)";
  r.expected.transitive = true;
  r.expected.primitive = true;
  r.expected.valid = true;
  r.expected.group_order = 12;
  r.expected.curve_genus = 2;
  r.expected.fibre_genus = 9;
  r.expected.chi = 1;
  r.expected.k_squared = 8;
  r.expected.c2 = 4;
  r.expected.node_count = 4;
  r.expected.delta_gamma = 2;
  r.notes =
      "the group is A_4: two points of simple ramification, so the covering "
      "curve has genus 2 and the general fibre genus 9";
  return r;
}

ExampleRecord example_2() {
  ExampleRecord r;
  r.name = "example-2";
  r.degree = 8;
  r.alpha_cycles = "(1 2 3 4 5 6 7)";
  r.beta_cycles = "(8 3 4 1 5 6)";
  r.expected.commutator_cycles = "(1 5)(2 6)(3 4)(7 8)";
  r.expected.transitive = true;
  r.expected.primitive = true;
  r.expected.valid = true;
  r.expected.group_order = 336;
  r.expected.curve_genus = 3;
  r.expected.fibre_genus = 33;
  r.expected.chi = 4;
  r.expected.k_squared = 32;
  r.expected.c2 = 16;
  r.expected.node_count = 16;
  r.expected.delta_gamma = 4;
  r.notes =
      "the group is PGL_2(F_7); alpha is the 7-cycle (1 2 3 4 5 6 7); a "
      "circulating misprint of this datum repeats the point 3 in place of 4 "
      "(kept verbatim as example-2-as-printed); the 7-cycle is the unique "
      "completion consistent with the stated commutator and group order";
  return r;
}

ExampleRecord example_2_as_printed() {
  ExampleRecord r;
  r.name = "example-2-as-printed";
  r.degree = 8;
  r.alpha_cycles = "(1, 2, 3, 3, 5, 6, 7)";
  r.beta_cycles = "(8, 3, 4, 1, 5, 6)";
  r.expect_parse_failure = true;
  r.notes =
      "alpha deliberately repeats the point 3, reproducing a circulating "
      "misprint of example-2; the text is not a permutation and parsing "
      "must fail";
  return r;
}

ExampleRecord example_3(int n) {
  if (n < 2) {
    throw std::invalid_argument("the family needs n >= 2, got " +
                                std::to_string(n));
  }
  const int d = 4 * n + 1;
  ExampleRecord r;
  r.name = "example-3-n" + std::to_string(n);
  r.degree = d;

  std::string alpha;
  for (int i = 1; i <= 2 * n - 1; i += 2) {
    alpha += "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")";
  }
  r.alpha_cycles = alpha;

  std::string delta;
  for (int i = 2; i <= 2 * n; ++i) {
    delta += (i == 2 ? "" : " ") + std::to_string(i) + " " +
             std::to_string(2 * n + i);
  }
  r.beta_cycles = "(1 " + std::to_string(2 * n + 1) + ")(" + delta + " " +
                  std::to_string(4 * n + 1) + ")";

  std::string commutator;
  for (int i = 1; i <= 4 * n - 1; i += 2) {
    commutator += "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")";
  }
  r.expected.commutator_cycles = commutator;
  r.expected.transitive = true;
  r.expected.primitive = true;
  r.expected.valid = true;
  r.expected.curve_genus = n + 1;
  r.expected.fibre_genus = std::int64_t{2} * n * d + 1;
  r.expected.beta_power =
      PowerCheck{4 * n - 1, "(1 " + std::to_string(2 * n + 1) + ")"};
  r.notes =
      "beta's long cycle interleaves 2..2n with 2n+2..4n, so beta is the "
      "product of the disjoint cycles gamma = (1 2n+1) and delta, and "
      "beta^(4n-1) = gamma; the group contains a transposition and is "
      "primitive, hence is all of S_d";
  return r;
}

std::vector<ExampleRecord> builtin_examples() {
  std::vector<ExampleRecord> all{example_1(), example_2(),
                                 example_2_as_printed()};
  for (int n = 2; n <= 5; ++n) {
    all.push_back(example_3(n));
  }
  return all;
}

ExampleOutcome run_example(const ExampleRecord& record) {
  ExampleOutcome outcome;
  outcome.name = record.name;

  std::optional<MonodromyPair> pair;
  try {
    Permutation alpha = parse_cycles(record.alpha_cycles, record.degree);
    Permutation beta = parse_cycles(record.beta_cycles, record.degree);
    pair.emplace(std::move(alpha), std::move(beta));
  } catch (const parse_error& e) {
    if (record.expect_parse_failure) {
      outcome.passed = true;
    } else {
      outcome.failures.push_back(std::string("parse failure: ") + e.what());
    }
    return outcome;
  }
  if (record.expect_parse_failure) {
    outcome.failures.push_back(
        "expected a parse failure, but both permutations parsed");
    return outcome;
  }

  const CoverInvariants inv = analyze(*pair);
  outcome.invariants = inv;
  auto& f = outcome.failures;
  const auto& e = record.expected;
  if (e.commutator_cycles) {
    check_field(f, "commutator", e.commutator_cycles,
                format_cycles(commutator(pair->alpha, pair->beta)));
  }
  check_field(f, "transitive", e.transitive, inv.transitive);
  check_field(f, "primitive", e.primitive, inv.primitive);
  check_field(f, "valid", e.valid, inv.valid);
  check_field(f, "group_order", e.group_order, inv.group_order);
  check_field(f, "curve_genus", e.curve_genus, inv.curve_genus);
  check_field(f, "fibre_genus", e.fibre_genus, inv.fibre_genus);
  check_field(f, "chi", e.chi, inv.chi);
  check_field(f, "k_squared", e.k_squared, inv.k_squared);
  check_field(f, "c2", e.c2, inv.c2);
  check_field(f, "node_count", e.node_count, inv.node_count);
  check_field(f, "delta_gamma", e.delta_gamma, inv.delta_gamma);
  if (e.beta_power) {
    check_field(f, "beta_power", std::optional<std::string>(
                                     e.beta_power->expected_cycles),
                format_cycles(power(pair->beta, e.beta_power->exponent)));
  }
  outcome.passed = outcome.failures.empty();
  return outcome;
}

}  // namespace monocover
