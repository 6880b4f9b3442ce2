#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "monocover/group.hpp"
#include "monocover/perm.hpp"

using namespace monocover;

namespace {

GeneratedGroup from_cycles(int degree, const std::vector<const char*>& texts) {
  std::vector<Permutation> gens;
  for (const char* text : texts) {
    gens.push_back(parse_cycles(text, degree));
  }
  return GeneratedGroup(degree, std::move(gens));
}

Permutation random_permutation(int degree, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

}  // namespace

TEST_CASE("orbits") {
  const GeneratedGroup g = from_cycles(5, {"(1 2)", "(3 4)"});
  CHECK(orbit(g, 1) == std::vector<int>{1, 2});
  CHECK(orbit(g, 3) == std::vector<int>{3, 4});
  CHECK(orbit(g, 5) == std::vector<int>{5});
  CHECK_FALSE(is_transitive(g));

  const GeneratedGroup whole = from_cycles(5, {"(1 2 3 4 5)"});
  CHECK(orbit(whole, 2) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(is_transitive(whole));
}

TEST_CASE("orbits partition the domain") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 6;
    const GeneratedGroup g(
        d, {random_permutation(d, rng), random_permutation(d, rng)});
    for (int x = 1; x <= d; ++x) {
      const std::vector<int> ox = orbit(g, x);
      CHECK(std::find(ox.begin(), ox.end(), x) != ox.end());
      for (int y = 1; y <= d; ++y) {
        const bool member = std::find(ox.begin(), ox.end(), y) != ox.end();
        CHECK(member == (orbit(g, y) == ox));
      }
    }
  }
}

TEST_CASE("minimal blocks of a cyclic group of composite order") {
  const GeneratedGroup c4 = from_cycles(4, {"(1 2 3 4)"});
  CHECK(is_transitive(c4));
  const std::vector<int> block = minimal_block_containing(c4, 1, 3);
  CHECK(block == std::vector<int>{1, 3});
  CHECK_FALSE(is_primitive(c4));

  const std::vector<int> full = minimal_block_containing(c4, 1, 2);
  CHECK(full.size() == 4);
}

TEST_CASE("primitivity of the reference groups") {
  CHECK(is_primitive(from_cycles(4, {"(1 2 3)", "(2 3 4)"})));
  CHECK(is_primitive(from_cycles(5, {"(1 2 3 4 5)"})));
  CHECK(is_primitive(from_cycles(8, {"(1 2 3 4 5 6 7)", "(8 3 4 1 5 6)"})));
  CHECK_FALSE(is_primitive(from_cycles(4, {"(1 2 3 4)", "(1 3)"})));
  CHECK_FALSE(is_primitive(from_cycles(4, {"(1 2)"})));
  CHECK_FALSE(is_primitive(from_cycles(6, {"(1 2 3 4 5 6)"})));
}

TEST_CASE("primitivity edge cases") {
  CHECK(is_primitive(GeneratedGroup(1, {})));
  CHECK(is_primitive(from_cycles(2, {"(1 2)"})));
  CHECK_FALSE(is_primitive(GeneratedGroup(3, {})));
}

TEST_CASE("group orders") {
  CHECK(group_order(from_cycles(4, {"(1 2 3)", "(2 3 4)"})) == 12);
  CHECK(group_order(from_cycles(8, {"(1 2 3 4 5 6 7)", "(8 3 4 1 5 6)"})) ==
        336);
  CHECK(group_order(from_cycles(6, {"(1 2)", "(1 2 3 4 5 6)"})) == 720);
  CHECK(group_order(from_cycles(5, {"(1 2 3 4 5)"})) == 5);
  CHECK(group_order(GeneratedGroup(4, {})) == 1);
  CHECK(group_order(from_cycles(7, {"(1 2 3)", "(4 5 6 7)"})) == 12);
}

TEST_CASE("group order overflows on S_21") {
  std::vector<int> long_cycle(21);
  for (int i = 0; i < 21; ++i) {
    long_cycle[static_cast<std::size_t>(i)] = (i + 1) % 21 + 1;
  }
  const GeneratedGroup s21(
      21, {parse_cycles("(1 2)", 21),
           Permutation::from_images(std::move(long_cycle))});
  CHECK_THROWS_AS(group_order(s21), std::overflow_error);
}

TEST_CASE("element enumeration") {
  const GeneratedGroup a4 = from_cycles(4, {"(1 2 3)", "(2 3 4)"});
  const std::vector<Permutation> elements = enumerate_elements(a4);
  CHECK(elements.size() == 12);
  CHECK(std::is_sorted(elements.begin(), elements.end()));
  for (const Permutation& p : elements) {
    // A_4 holds only even permutations: cycle types 1^4, 2^2, 3 1.
    const std::vector<int> type = cycle_type(p);
    const bool even = type == std::vector<int>{1, 1, 1, 1} ||
                      type == std::vector<int>{2, 2} ||
                      type == std::vector<int>{3, 1};
    CHECK(even);
  }
  CHECK_THROWS(enumerate_elements(a4, 5));
}

TEST_CASE("order agrees with enumeration on random pairs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 5);
    const GeneratedGroup g(
        d, {random_permutation(d, rng), random_permutation(d, rng)});
    const std::vector<Permutation> elements = enumerate_elements(g);
    CHECK(group_order(g) == elements.size());
  }
}

TEST_CASE("order is invariant under relabeling") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 7;
    const Permutation a = random_permutation(d, rng);
    const Permutation b = random_permutation(d, rng);
    const Permutation s = random_permutation(d, rng);
    const GeneratedGroup g(d, {a, b});
    const GeneratedGroup conj(d, {conjugate(s, a), conjugate(s, b)});
    CHECK(group_order(g) == group_order(conj));
  }
}

TEST_CASE("block sizes divide the degree for transitive groups") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 6 + static_cast<int>(rng() % 3);
    const GeneratedGroup g(
        d, {random_permutation(d, rng), random_permutation(d, rng)});
    if (!is_transitive(g)) {
      continue;
    }
    for (int y = 2; y <= d; ++y) {
      const std::vector<int> block = minimal_block_containing(g, 1, y);
      CHECK(static_cast<std::size_t>(d) % block.size() == 0);
    }
  }
}

TEST_CASE("generator degree mismatches are rejected") {
  CHECK_THROWS_AS(GeneratedGroup(4, {parse_cycles("(1 2 3 4 5)", 5)}),
                  std::invalid_argument);
}
