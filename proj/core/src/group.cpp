#include "monocover/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <unordered_set>
#include <utility>

namespace monocover {

GeneratedGroup::GeneratedGroup(int deg, std::vector<Permutation> gens)
    : degree(deg), generators(std::move(gens)) {
  if (degree < 1) throw std::invalid_argument("group degree must be >= 1");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
}

std::vector<int> orbit(const GeneratedGroup& g, int point) {
  if (point < 1 || point > g.degree)
    throw std::invalid_argument("orbit: point out of range");
  std::vector<Permutation> gens = g.generators;
  for (const auto& p : g.generators) gens.push_back(inverse(p));

  std::vector<char> seen(static_cast<std::size_t>(g.degree), 0);
  seen[point - 1] = 1;
  std::vector<int> queue{point};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& p : gens) {
      int y = p(queue[i]);
      if (!seen[y - 1]) {
        seen[y - 1] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_transitive(const GeneratedGroup& g) {
  return static_cast<int>(orbit(g, 1).size()) == g.degree;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns false if already joined.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

// Finest G-congruence identifying a and b (Atkinson's refinement): merge the
// pair, then propagate generator images of every merged pair until stable.
// The class of a is the minimal block containing {a, b}.
std::vector<int> minimal_block_unchecked(const GeneratedGroup& g, int a, int b) {
  UnionFind uf(g.degree + 1);
  std::deque<std::pair<int, int>> pending{{a, b}};
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    if (!uf.unite(x, y)) continue;
    for (const auto& gen : g.generators) pending.emplace_back(gen(x), gen(y));
  }
  std::vector<int> block;
  const int ra = uf.find(a);
  for (int x = 1; x <= g.degree; ++x)
    if (uf.find(x) == ra) block.push_back(x);
  return block;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

std::vector<int> minimal_block_containing(const GeneratedGroup& g, int a, int b) {
  if (a < 1 || a > g.degree || b < 1 || b > g.degree)
    throw std::invalid_argument("minimal_block_containing: point out of range");
  if (a == b)
    throw std::invalid_argument("minimal_block_containing: points must be distinct");
  if (!is_transitive(g))
    throw std::invalid_argument("minimal_block_containing: group is not transitive");
  return minimal_block_unchecked(g, a, b);
}

bool is_primitive(const GeneratedGroup& g) {
  if (g.degree == 1) return true;
  if (!is_transitive(g)) return false;
  // Block sizes divide the degree, so prime degree leaves no room for
  // nontrivial blocks.
  if (is_prime(g.degree)) return true;
  for (int y = 2; y <= g.degree; ++y)
    if (static_cast<int>(minimal_block_unchecked(g, 1, y).size()) != g.degree)
      return false;
  return true;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("group order exceeds 64-bit range");
  return a * b;
}

// Stabilizer chain over the fixed base 1, 2, ..., d. Level i holds the
// orbit of point i under the strong generators fixing 1..i-1, together with
// an explicit transversal (u maps the base point to the orbit point).
class StabilizerChain {
public:
  explicit StabilizerChain(const GeneratedGroup& g) : degree_(g.degree) {
    for (const auto& gen : g.generators)
      if (!gen.is_identity()) strong_.push_back(gen);
    if (strong_.empty()) return;
    extend_levels();
    // Verify levels deepest-first; every sifted Schreier residue becomes a
    // new strong generator and sends verification back down to its level.
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
      rebuild_level(i);
      std::optional<int> restart = verify_level(i);
      if (restart) {
        i = *restart;
        continue;
      }
      --i;
    }
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& lvl : levels_)
      n = checked_mul(n, static_cast<std::uint64_t>(lvl.orbit.size()));
    return n;
  }

private:
  struct Level {
    int base = 0;
    std::vector<int> orbit;                        // BFS discovery order
    std::vector<int> slot;                         // point -> transversal index, -1 if absent
    std::vector<Permutation> transversal;          // u with u(base) = point
    std::vector<Permutation> transversal_inv;
    std::vector<std::size_t> gens;                 // indices of strong gens fixing 1..base-1
  };

  int degree_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;

  void extend_levels() {
    int deepest = 0;
    for (const auto& s : strong_) deepest = std::max(deepest, s.min_moved_point());
    while (static_cast<int>(levels_.size()) < deepest) {
      Level lvl;
      lvl.base = static_cast<int>(levels_.size()) + 1;
      levels_.push_back(std::move(lvl));
    }
  }

  void rebuild_level(int i) {
    Level& lvl = levels_[static_cast<std::size_t>(i)];
    lvl.gens.clear();
    for (std::size_t si = 0; si < strong_.size(); ++si)
      if (strong_[si].min_moved_point() >= lvl.base) lvl.gens.push_back(si);
    lvl.orbit.assign(1, lvl.base);
    lvl.slot.assign(static_cast<std::size_t>(degree_) + 1, -1);
    lvl.slot[static_cast<std::size_t>(lvl.base)] = 0;
    lvl.transversal.assign(1, Permutation(degree_));
    lvl.transversal_inv.assign(1, Permutation(degree_));
    for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
      const int x = lvl.orbit[qi];
      for (std::size_t si : lvl.gens) {
        const Permutation& s = strong_[si];
        const int y = s(x);
        if (lvl.slot[static_cast<std::size_t>(y)] >= 0) continue;
        Permutation u = compose(s, lvl.transversal[qi]);
        lvl.slot[static_cast<std::size_t>(y)] =
            static_cast<int>(lvl.transversal.size());
        lvl.orbit.push_back(y);
        lvl.transversal_inv.push_back(inverse(u));
        lvl.transversal.push_back(std::move(u));
      }
    }
  }

  // Sifts h through levels from `from` on; empties to the identity exactly
  // when h is in the group generated below that level.
  Permutation sift(Permutation h, int from) const {
    for (std::size_t j = static_cast<std::size_t>(from); j < levels_.size(); ++j) {
      const Level& lvl = levels_[j];
      const int x = h(lvl.base);
      if (x == lvl.base) continue;
      const int si = lvl.slot[static_cast<std::size_t>(x)];
      if (si < 0) return h;  // stuck: new coset at this level
      h = compose(lvl.transversal_inv[static_cast<std::size_t>(si)], h);
    }
    return h;
  }

  // Checks all Schreier generators of level i. On finding a new strong
  // generator returns the level verification must resume from.
  std::optional<int> verify_level(int i) {
    Level& lvl = levels_[static_cast<std::size_t>(i)];
    for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
      for (std::size_t gi : lvl.gens) {
        const Permutation& s = strong_[gi];
        const int y = s(lvl.orbit[qi]);
        const int slot = lvl.slot[static_cast<std::size_t>(y)];
        Permutation schreier = compose(
            lvl.transversal_inv[static_cast<std::size_t>(slot)],
            compose(s, lvl.transversal[qi]));
        Permutation residue = sift(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        strong_.push_back(std::move(residue));
        extend_levels();
        const int m = strong_.back().min_moved_point();
        return m - 1;  // level index of base point m
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::uint64_t group_order(const GeneratedGroup& g) {
  return StabilizerChain(g).order();
}

std::vector<Permutation> enumerate_elements(const GeneratedGroup& g,
                                            std::size_t cap) {
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> elements{Permutation(g.degree)};
  seen.insert(elements.front());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : g.generators) {
      Permutation next = compose(elements[i], gen);
      if (seen.insert(next).second) {
        if (elements.size() + 1 > cap)
          throw std::overflow_error("closure exceeds cap");
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace monocover
