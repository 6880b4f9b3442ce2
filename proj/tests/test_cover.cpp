#include <stdexcept>

#include "doctest.h"
#include "monocover/cover.hpp"
#include "monocover/perm.hpp"

using namespace monocover;

namespace {

MonodromyPair pair_of(int degree, const char* alpha, const char* beta) {
  return MonodromyPair(parse_cycles(alpha, degree),
                       parse_cycles(beta, degree));
}

}  // namespace

TEST_CASE("pairs require matching degrees") {
  CHECK_THROWS_AS(
      MonodromyPair(parse_cycles("(1 2)", 2), parse_cycles("(1 2)", 3)),
      std::invalid_argument);
}

TEST_CASE("ramification profile of the reference pair") {
  const RamificationProfile p =
      ramification_profile(pair_of(4, "(1 2 3)", "(2 3 4)"));
  CHECK(p.degree == 4);
  CHECK(p.lengths == std::vector<int>{2, 2});
  CHECK(is_reduced_ramification(p));
  CHECK(curve_genus(p) == 2);
}

TEST_CASE("etale and non-reduced profiles") {
  const RamificationProfile etale =
      ramification_profile(pair_of(5, "(1 2)", "(3 4 5)"));
  CHECK(etale.lengths.empty());
  CHECK_FALSE(is_reduced_ramification(etale));
  CHECK(curve_genus(etale) == 1);

  // [a, b] = (1 3 2) here: one 3-cycle is not reduced.
  const RamificationProfile cubic =
      ramification_profile(pair_of(3, "(1 2 3)", "(1 2)"));
  CHECK(cubic.lengths == std::vector<int>{3});
  CHECK_FALSE(is_reduced_ramification(cubic));
  CHECK(curve_genus(cubic) == 2);
}

TEST_CASE("curve genus rejects impossible profiles") {
  RamificationProfile p;
  p.degree = 4;
  p.lengths = {2};
  CHECK_THROWS_AS(curve_genus(p), std::invalid_argument);
  p.lengths = {1};
  CHECK_THROWS_AS(curve_genus(p), std::invalid_argument);
  p.lengths = {3, 2};
  CHECK_THROWS_AS(curve_genus(p), std::invalid_argument);
  p.lengths = {3, 3};
  CHECK(curve_genus(p) == 3);
}

TEST_CASE("fibre genus formula and monotonicity") {
  CHECK(fibre_genus(2, 4) == 9);
  CHECK(fibre_genus(3, 8) == 33);
  CHECK(fibre_genus(2, 5) == 11);
  CHECK(fibre_genus(6, 21) == 211);
  for (int g = 2; g < 8; ++g) {
    for (int d = 2; d < 10; ++d) {
      CHECK(fibre_genus(g, d) < fibre_genus(g + 1, d));
      CHECK(fibre_genus(g, d) < fibre_genus(g, d + 1));
    }
  }
  CHECK_THROWS_AS(fibre_genus(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(fibre_genus(2, 1), std::invalid_argument);
}

TEST_CASE("surface invariants satisfy Noether's identity") {
  const SurfaceInvariants s2 = surface_invariants(2);
  CHECK(s2 == SurfaceInvariants{1, 8, 4});
  const SurfaceInvariants s3 = surface_invariants(3);
  CHECK(s3 == SurfaceInvariants{4, 32, 16});
  for (int g = 2; g <= 50; ++g) {
    const SurfaceInvariants s = surface_invariants(g);
    CHECK(12 * s.chi == s.k_squared + s.c2);
    CHECK(s.k_squared == 8 * s.chi);
    CHECK(s.c2 == 4 * s.chi);
  }
  CHECK_THROWS_AS(surface_invariants(1), std::invalid_argument);
}

TEST_CASE("singular fibre: node count equals c_2") {
  CHECK(singular_fibre_stats(2) == SingularFibreStats{4, 2});
  CHECK(singular_fibre_stats(3) == SingularFibreStats{16, 4});
  for (int g = 2; g <= 50; ++g) {
    const SingularFibreStats f = singular_fibre_stats(g);
    CHECK(f.node_count == surface_invariants(g).c2);
    CHECK(f.delta_gamma == 2 * g - 2);
  }
  CHECK_THROWS_AS(singular_fibre_stats(1), std::invalid_argument);
}

TEST_CASE("node-count formula") {
  // Degree 4 reference fibre: genus 9, normalization genus 2 + 4, two
  // components.
  CHECK(beauville_node_count({9, 6, 2}) == 4);
  CHECK(beauville_node_count({9, 9, 1}) == 0);
  CHECK_THROWS_AS(beauville_node_count({1, 5, 1}), std::invalid_argument);
  CHECK_THROWS_AS(beauville_node_count({9, 6, 0}), std::invalid_argument);
}

TEST_CASE("bounds on the reference data pass") {
  const BoundsReport r = bounds_report(9, 1, 8, 4, true);
  CHECK(r.all_pass);
  REQUIRE(r.entries.size() == 7);
  for (const BoundsEntry& e : r.entries) {
    CHECK(e.applicable == (e.id != "v"));
    CHECK(e.pass);
  }
  CHECK(r.entries[0].detail == "8 < 16");
  CHECK(r.entries[1].detail == "2 < 9");
  CHECK(r.entries[2].detail == "4 < 38");
  CHECK(r.entries[3].detail == "4 <= 24");
  CHECK(r.entries[5].detail == "10 < 12 < 40");
  CHECK(r.entries[6].detail == "9 >= 4");
  CHECK(r.notes.empty());
}

TEST_CASE("stable-only entries are skipped without stability") {
  const BoundsReport r = bounds_report(3, 1, 1, 1, false);
  CHECK(r.all_pass);
  for (const BoundsEntry& e : r.entries) {
    if (e.id == "iv" || e.id == "v" || e.id == "vi" || e.id == "g>=4") {
      CHECK_FALSE(e.applicable);
    } else {
      CHECK(e.applicable);
    }
  }
}

TEST_CASE("low genus fails the stable suite") {
  const BoundsReport r = bounds_report(3, 1, 1, 1, true);
  CHECK_FALSE(r.all_pass);
  bool saw_genus_entry = false;
  for (const BoundsEntry& e : r.entries) {
    if (e.id == "g>=4") {
      saw_genus_entry = true;
      CHECK_FALSE(e.pass);
    }
  }
  CHECK(saw_genus_entry);
}

TEST_CASE("the c_2 = 3g - 3 pathway emits both notes") {
  const BoundsReport r = bounds_report(4, 1, 3, 9, true);
  REQUIRE(r.notes.size() == 2);
  CHECK(r.notes[0] == "q = 1 and the fibration is the Albanese map");
  CHECK(r.notes[1] == "4 <= K^2 <= 5");
  for (const BoundsEntry& e : r.entries) {
    if (e.id == "v") {
      CHECK(e.applicable);
      CHECK(e.informational);
      CHECK(e.detail == "9 = 9");
    }
  }
  CHECK(bounds_report(9, 1, 8, 4, true).notes.empty());
  CHECK_THROWS_AS(bounds_report(1, 1, 1, 1, true), std::invalid_argument);
}

TEST_CASE("full analysis of the reference pair") {
  const CoverInvariants inv = analyze(pair_of(4, "(1 2 3)", "(2 3 4)"));
  CHECK(inv.degree == 4);
  CHECK(inv.transitive);
  CHECK(inv.primitive);
  CHECK(inv.reduced_ramification);
  CHECK(inv.valid);
  CHECK(inv.curve_genus == 2);
  CHECK(inv.ramification_point_count == 2);
  CHECK(inv.group_order == 12);
  CHECK(inv.fibre_genus == 9);
  CHECK(inv.chi == 1);
  CHECK(inv.k_squared == 8);
  CHECK(inv.c2 == 4);
  CHECK(inv.node_count == 4);
  CHECK(inv.delta_gamma == 2);
}

TEST_CASE("analysis of an etale datum") {
  const CoverInvariants inv = analyze(pair_of(2, "(1 2)", "(1 2)"));
  CHECK_FALSE(inv.valid);
  CHECK_FALSE(inv.reduced_ramification);
  CHECK(inv.curve_genus == 1);
  CHECK(inv.transitive);
  CHECK(inv.primitive);
  CHECK_FALSE(inv.fibre_genus.has_value());
  CHECK_FALSE(inv.chi.has_value());
  CHECK_FALSE(inv.node_count.has_value());
}

TEST_CASE("analysis of an imprimitive datum is advisory") {
  // <(1 2 3 4), (1 3)> is dihedral with blocks {1,3} and {2,4}.
  const CoverInvariants inv = analyze(pair_of(4, "(1 2 3 4)", "(1 3)"));
  CHECK(inv.transitive);
  CHECK_FALSE(inv.primitive);
  CHECK_FALSE(inv.valid);
  CHECK(inv.reduced_ramification);
  CHECK(inv.curve_genus == 2);
  CHECK(inv.group_order == 8);
  CHECK(inv.fibre_genus == 9);
  CHECK(inv.chi == 1);
  CHECK(inv.node_count == 4);
}

TEST_CASE("analysis survives an order overflow") {
  // alpha and beta generate all of S_21; the order exceeds 2^64-1.
  const CoverInvariants inv = analyze(pair_of(
      21, "(1 2)(3 4)(5 6)(7 8)(9 10)",
      "(1 11)(2 12 3 13 4 14 5 15 6 16 7 17 8 18 9 19 10 20 21)"));
  CHECK_FALSE(inv.group_order.has_value());
  CHECK(inv.valid);
  CHECK(inv.curve_genus == 6);
  CHECK(inv.fibre_genus == 211);
}
