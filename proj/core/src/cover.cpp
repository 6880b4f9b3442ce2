#include "monocover/cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "monocover/group.hpp"

namespace monocover {

namespace {

std::string require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    return "monodromy pair mixes degrees " + std::to_string(a.degree()) +
           " and " + std::to_string(b.degree());
  }
  return {};
}

}  // namespace

MonodromyPair::MonodromyPair(Permutation a, Permutation b)
    : degree(a.degree()), alpha(std::move(a)), beta(std::move(b)) {
  if (auto msg = require_same_degree(alpha, beta); !msg.empty()) {
    throw std::invalid_argument(msg);
  }
}

RamificationProfile ramification_profile(const MonodromyPair& m) {
  RamificationProfile profile;
  profile.degree = m.degree;
  const CycleDecomposition dec =
      cycle_decomposition(commutator(m.alpha, m.beta));
  for (const auto& cycle : dec.cycles) {
    profile.lengths.push_back(static_cast<int>(cycle.size()));
  }
  std::sort(profile.lengths.begin(), profile.lengths.end(),
            std::greater<int>());
  return profile;
}

bool is_reduced_ramification(const RamificationProfile& p) {
  if (p.lengths.empty()) {
    return false;
  }
  return std::all_of(p.lengths.begin(), p.lengths.end(),
                     [](int l) { return l == 2; });
}

int curve_genus(const RamificationProfile& p) {
  long long sum = 0;
  for (int l : p.lengths) {
    if (l < 2) {
      throw std::invalid_argument("ramification index " + std::to_string(l) +
                                  " is trivial");
    }
    sum += l - 1;
  }
  if (sum % 2 != 0) {
    throw std::invalid_argument(
        "ramification contribution " + std::to_string(sum) +
        " is odd; no cover of an elliptic curve has this profile");
  }
  return static_cast<int>(1 + sum / 2);
}

std::int64_t fibre_genus(int curve_genus, int degree) {
  if (curve_genus < 2) {
    throw std::invalid_argument("fibre genus needs curve genus >= 2, got " +
                                std::to_string(curve_genus));
  }
  if (degree < 2) {
    throw std::invalid_argument("fibre genus needs degree >= 2, got " +
                                std::to_string(degree));
  }
  return std::int64_t{2} * (curve_genus - 1) * degree + 1;
}

SurfaceInvariants surface_invariants(int curve_genus) {
  if (curve_genus < 2) {
    throw std::invalid_argument(
        "surface invariants need curve genus >= 2, got " +
        std::to_string(curve_genus));
  }
  const std::int64_t h = curve_genus - 1;
  return SurfaceInvariants{h * h, 8 * h * h, 4 * h * h};
}

SingularFibreStats singular_fibre_stats(int curve_genus) {
  if (curve_genus < 2) {
    throw std::invalid_argument(
        "singular fibre stats need curve genus >= 2, got " +
        std::to_string(curve_genus));
  }
  const std::int64_t r = 2 * std::int64_t{curve_genus} - 2;
  return SingularFibreStats{r * r, r};
}

std::int64_t beauville_node_count(const BeauvilleInput& b) {
  if (b.component_count < 1) {
    throw std::invalid_argument("fibre needs at least one component, got " +
                                std::to_string(b.component_count));
  }
  const std::int64_t n =
      b.fibre_genus - b.normalization_genus + b.component_count - 1;
  if (n < 0) {
    throw std::invalid_argument(
        "inconsistent fibre data: node count would be " + std::to_string(n));
  }
  return n;
}

namespace {

std::string claim(std::int64_t lhs, const char* op, std::int64_t rhs) {
  return std::to_string(lhs) + " " + op + " " + std::to_string(rhs);
}

}  // namespace

BoundsReport bounds_report(std::int64_t g, std::int64_t chi, std::int64_t k2,
                           std::int64_t c2, bool stable) {
  if (g < 2) {
    throw std::invalid_argument("bounds need fibre genus >= 2, got " +
                                std::to_string(g));
  }
  BoundsReport report;
  auto add = [&report](BoundsEntry entry) {
    if (entry.applicable && !entry.informational && !entry.pass) {
      report.all_pass = false;
    }
    report.entries.push_back(std::move(entry));
  };

  add({"i", "K^2 < 2g - 2", claim(k2, "<", 2 * g - 2), true, false,
       k2 < 2 * g - 2});
  add({"ii", "2*chi < g", claim(2 * chi, "<", g), true, false, 2 * chi < g});
  add({"iii", "c_2 < 4g + 2", claim(c2, "<", 4 * g + 2), true, false,
       c2 < 4 * g + 2});
  add({"iv", "c_2 <= 3g - 3", claim(c2, "<=", 3 * g - 3), stable, false,
       c2 <= 3 * g - 3});

  const bool at_beauville_bound = stable && c2 == 3 * g - 3;
  add({"v", "c_2 = 3g - 3 forces q = 1 and the Albanese map",
       claim(c2, at_beauville_bound ? "=" : "!=", 3 * g - 3),
       at_beauville_bound, true, true});
  if (at_beauville_bound) {
    report.notes.push_back("q = 1 and the fibration is the Albanese map");
  }

  add({"vi", "10 < 12*chi < 5*(g - 1)",
       claim(10, "<", 12 * chi) + " < " + std::to_string(5 * (g - 1)), stable,
       false, 10 < 12 * chi && 12 * chi < 5 * (g - 1)});
  add({"g>=4", "g >= 4", claim(g, ">=", 4), stable, false, g >= 4});

  if (stable && g == 4 && c2 == 9) {
    report.notes.push_back("4 <= K^2 <= 5");
  }
  return report;
}

CoverInvariants analyze(const MonodromyPair& m) {
  CoverInvariants inv;
  inv.degree = m.degree;

  const RamificationProfile profile = ramification_profile(m);
  inv.ramification_point_count = static_cast<int>(profile.lengths.size());
  inv.reduced_ramification = is_reduced_ramification(profile);
  inv.curve_genus = curve_genus(profile);

  const GeneratedGroup group(m.degree, {m.alpha, m.beta});
  inv.transitive = is_transitive(group);
  inv.primitive = is_primitive(group);
  try {
    inv.group_order = group_order(group);
  } catch (const std::overflow_error&) {
    inv.group_order.reset();
  }

  if (inv.curve_genus >= 2) {
    if (m.degree >= 2) {
      inv.fibre_genus = fibre_genus(inv.curve_genus, m.degree);
    }
    const SurfaceInvariants s = surface_invariants(inv.curve_genus);
    inv.chi = s.chi;
    inv.k_squared = s.k_squared;
    inv.c2 = s.c2;
    if (inv.reduced_ramification) {
      const SingularFibreStats f = singular_fibre_stats(inv.curve_genus);
      inv.node_count = f.node_count;
      inv.delta_gamma = f.delta_gamma;
    }
  }

  inv.valid = inv.transitive && inv.primitive && inv.reduced_ramification &&
              inv.curve_genus >= 2;
  return inv;
}

}  // namespace monocover
