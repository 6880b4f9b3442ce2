#include "monocover/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "monocover/group.hpp"

namespace monocover {

namespace {

void extend_partitions(int remaining, int max_part, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= static_cast<std::uint64_t>(i);
  }
  return f;
}

/// Image table of the rank-th permutation of {1,...,d} in lexicographic
/// order of image sequences, via the Lehmer code.
std::vector<int> unrank_permutation(int d, std::uint64_t rank) {
  std::vector<int> pool(d);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(d);
  for (int i = d - 1; i >= 0; --i) {
    const std::uint64_t block = factorial(i);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return images;
}

std::string format_pair(const Permutation& alpha, const Permutation& beta) {
  return format_cycles(alpha) + " | " + format_cycles(beta);
}

/// Number of transpositions when p is a nonempty product of disjoint
/// transpositions plus fixed points; -1 otherwise (0 for the identity).
int transposition_count(const Permutation& p) {
  int moved = 0;
  for (int x = 1; x <= p.degree(); ++x) {
    const int y = p(x);
    if (y == x) {
      continue;
    }
    if (p(y) != x) {
      return -1;
    }
    ++moved;
  }
  return moved / 2;
}

/// A sigma with sigma * p * sigma^-1 equal to the class representative of
/// p's cycle type: list p's cycles longest first (ties by smallest point),
/// then the fixed points, and send the i-th listed point to i.
Permutation conjugator_to_representative(const Permutation& p) {
  const CycleDecomposition dec = cycle_decomposition(p);
  std::vector<std::vector<int>> cycles = dec.cycles;
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return a.size() > b.size();
                   });
  std::vector<int> listed;
  listed.reserve(p.degree());
  for (const auto& cycle : cycles) {
    listed.insert(listed.end(), cycle.begin(), cycle.end());
  }
  listed.insert(listed.end(), dec.fixed_points.begin(),
                dec.fixed_points.end());
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) {
    images[static_cast<std::size_t>(listed[static_cast<std::size_t>(i)]) - 1] =
        i + 1;
  }
  return Permutation::from_images(std::move(images));
}

/// Every element commuting with rep, where rep must be a cycle-type class
/// representative: generated by the rotations of its cycles and the swaps of
/// adjacent same-length cycles (fixed points count as 1-cycles).
std::vector<Permutation> centralizer_of_representative(const Permutation& rep) {
  const int d = rep.degree();
  const CycleDecomposition dec = cycle_decomposition(rep);
  std::vector<std::vector<int>> cycles = dec.cycles;
  for (int f : dec.fixed_points) {
    cycles.push_back({f});
  }
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return a.size() > b.size();
                   });

  std::vector<Permutation> gens;
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) {
      continue;
    }
    std::vector<int> images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i]) - 1] =
          cycle[(i + 1) % cycle.size()];
    }
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  for (std::size_t i = 0; i + 1 < cycles.size(); ++i) {
    if (cycles[i].size() != cycles[i + 1].size()) {
      continue;
    }
    std::vector<int> images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t j = 0; j < cycles[i].size(); ++j) {
      images[static_cast<std::size_t>(cycles[i][j]) - 1] = cycles[i + 1][j];
      images[static_cast<std::size_t>(cycles[i + 1][j]) - 1] = cycles[i][j];
    }
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  if (gens.empty()) {
    return {Permutation(d)};
  }
  return enumerate_elements(GeneratedGroup(d, std::move(gens)));
}

std::string minimize_beta_text(const Permutation& rep, const Permutation& beta,
                               const std::vector<Permutation>& centralizer) {
  std::string best;
  for (const Permutation& c : centralizer) {
    std::string text = format_cycles(conjugate(c, beta));
    if (best.empty() || text < best) {
      best = std::move(text);
    }
  }
  return format_cycles(rep) + " | " + best;
}

std::string minimize_pair_text(const MonodromyPair& pair) {
  const int d = pair.degree;
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 1);
  std::string best;
  do {
    const Permutation sigma = Permutation::from_images(images);
    std::string text = format_pair(conjugate(sigma, pair.alpha),
                                   conjugate(sigma, pair.beta));
    if (best.empty() || text < best) {
      best = std::move(text);
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return best;
}

struct SearchPlan {
  std::vector<Permutation> class_reps;
  std::vector<bool> feasible_k;  // indexed by transposition count
};

SearchPlan validate_and_plan(const SearchConfig& cfg) {
  if (cfg.degree < 1) {
    throw std::invalid_argument("degree must be positive, got " +
                                std::to_string(cfg.degree));
  }
  if (cfg.worker_count < 1) {
    throw std::invalid_argument("worker count must be positive, got " +
                                std::to_string(cfg.worker_count));
  }
  if (cfg.min_transpositions > cfg.max_transpositions) {
    throw std::invalid_argument("empty transposition range " +
                                std::to_string(cfg.min_transpositions) +
                                ".." +
                                std::to_string(cfg.max_transpositions));
  }
  if (cfg.min_transpositions == cfg.max_transpositions) {
    const int k = cfg.min_transpositions;
    if (k < 2) {
      throw std::invalid_argument(
          "commutator transposition count must be at least 2, got " +
          std::to_string(k));
    }
    if (k % 2 != 0) {
      throw std::invalid_argument(
          "commutator transposition count must be even, got " +
          std::to_string(k) + " (commutators are even permutations)");
    }
    if (2 * k > cfg.degree) {
      throw std::invalid_argument(
          std::to_string(k) + " disjoint transpositions need " +
          std::to_string(2 * k) + " points, more than degree " +
          std::to_string(cfg.degree));
    }
  }

  SearchPlan plan;
  plan.feasible_k.assign(static_cast<std::size_t>(cfg.degree / 2) + 1, false);
  bool any = false;
  for (int k = std::max(2, cfg.min_transpositions);
       k <= cfg.max_transpositions && 2 * k <= cfg.degree; ++k) {
    if (k % 2 == 0) {
      plan.feasible_k[static_cast<std::size_t>(k)] = true;
      any = true;
    }
  }
  if (!any) {
    throw std::invalid_argument(
        "no even transposition count k with 2k <= " +
        std::to_string(cfg.degree) + " in range " +
        std::to_string(cfg.min_transpositions) + ".." +
        std::to_string(cfg.max_transpositions));
  }

  if (cfg.dedup == DedupMode::full && cfg.degree > 8) {
    throw std::invalid_argument(
        "full deduplication costs d! per hit and is limited to degree 8, "
        "got " +
        std::to_string(cfg.degree));
  }

  if (cfg.alpha_cycle_type.has_value()) {
    std::vector<int> type = *cfg.alpha_cycle_type;
    long long sum = 0;
    for (int part : type) {
      if (part < 1) {
        throw std::invalid_argument("cycle type entries must be positive");
      }
      sum += part;
    }
    if (sum != cfg.degree) {
      throw std::invalid_argument("alpha cycle type sums to " +
                                  std::to_string(sum) +
                                  ", expected the degree " +
                                  std::to_string(cfg.degree));
    }
    plan.class_reps.push_back(representative_of_cycle_type(type));
  } else {
    if (cfg.degree > 9) {
      throw std::invalid_argument(
          "degree " + std::to_string(cfg.degree) +
          " needs an explicit alpha cycle type filter (exhaustive class "
          "enumeration is capped at degree 9)");
    }
    for (const auto& type : cycle_types_of_degree(cfg.degree)) {
      plan.class_reps.push_back(representative_of_cycle_type(type));
    }
  }

  // The identity class cannot reach any k >= 2.
  std::erase_if(plan.class_reps,
                [](const Permutation& p) { return p.is_identity(); });
  return plan;
}

struct Task {
  std::size_t class_index = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

struct TaskOutput {
  std::vector<Permutation> hits;
  std::vector<Permutation> near_misses;
  SearchStats stats;
};

void run_task(const SearchConfig& cfg, const SearchPlan& plan, const Task& task,
              TaskOutput& out) {
  const Permutation& alpha = plan.class_reps[task.class_index];
  std::vector<int> images = unrank_permutation(cfg.degree, task.begin);
  for (std::uint64_t r = task.begin; r < task.end; ++r) {
    Permutation beta = Permutation::from_images(images);
    ++out.stats.pairs_scanned;

    const int k = transposition_count(commutator(alpha, beta));
    if (k >= 2 && static_cast<std::size_t>(k) < plan.feasible_k.size() &&
        plan.feasible_k[static_cast<std::size_t>(k)]) {
      ++out.stats.commutator_matches;
      const GeneratedGroup group(cfg.degree, {alpha, beta});
      if (is_transitive(group)) {
        ++out.stats.transitive_matches;
        if (is_primitive(group)) {
          ++out.stats.raw_certificates;
          out.hits.push_back(beta);
        } else if (cfg.collect_near_misses) {
          out.near_misses.push_back(beta);
        }
      }
    }
    std::next_permutation(images.begin(), images.end());
  }
}

}  // namespace

std::vector<std::vector<int>> cycle_types_of_degree(int d) {
  if (d < 1) {
    throw std::invalid_argument("degree must be positive, got " +
                                std::to_string(d));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  extend_partitions(d, d, prefix, out);
  return out;
}

Permutation representative_of_cycle_type(const std::vector<int>& type) {
  long long degree = 0;
  for (int part : type) {
    if (part < 1) {
      throw std::invalid_argument("cycle type entries must be positive, got " +
                                  std::to_string(part));
    }
    degree += part;
  }
  std::vector<int> sorted = type;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  std::vector<int> images(static_cast<std::size_t>(degree));
  int start = 1;
  for (int part : sorted) {
    for (int i = 0; i < part; ++i) {
      images[static_cast<std::size_t>(start + i) - 1] =
          (i + 1 < part) ? start + i + 1 : start;
    }
    start += part;
  }
  return Permutation::from_images(std::move(images));
}

std::string canonical_form(const MonodromyPair& pair, DedupMode mode) {
  switch (mode) {
    case DedupMode::off:
      return format_pair(pair.alpha, pair.beta);
    case DedupMode::centralizer: {
      const Permutation sigma = conjugator_to_representative(pair.alpha);
      const Permutation rep = conjugate(sigma, pair.alpha);
      const Permutation beta = conjugate(sigma, pair.beta);
      return minimize_beta_text(rep, beta, centralizer_of_representative(rep));
    }
    case DedupMode::full:
      if (pair.degree > 8) {
        throw std::invalid_argument(
            "full canonicalization costs d! and is limited to degree 8, "
            "got " +
            std::to_string(pair.degree));
      }
      return minimize_pair_text(pair);
  }
  throw std::invalid_argument("unknown dedup mode");
}

bool validate_certificate(const Certificate& c) {
  const CoverInvariants recomputed = analyze(c.pair);
  return recomputed.valid && recomputed == c.invariants;
}

SearchResult search(const SearchConfig& cfg) {
  const SearchPlan plan = validate_and_plan(cfg);
  const std::uint64_t total = factorial(cfg.degree);
  const auto workers = static_cast<std::uint64_t>(cfg.worker_count);

  std::vector<Task> tasks;
  for (std::size_t ci = 0; ci < plan.class_reps.size(); ++ci) {
    for (std::uint64_t j = 0; j < workers; ++j) {
      const std::uint64_t begin = total / workers * j;
      const std::uint64_t end =
          (j + 1 == workers) ? total : total / workers * (j + 1);
      if (begin < end) {
        tasks.push_back({ci, begin, end});
      }
    }
  }

  std::vector<TaskOutput> outputs(tasks.size());
  std::atomic<std::size_t> next_task{0};
  auto drain = [&]() {
    while (true) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size()) {
        return;
      }
      run_task(cfg, plan, tasks[t], outputs[t]);
    }
  };
  if (cfg.worker_count == 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(cfg.worker_count));
    for (int w = 0; w < cfg.worker_count; ++w) {
      pool.emplace_back(drain);
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }

  SearchResult result;
  struct Pending {
    MonodromyPair pair;
    CoverInvariants invariants;
    std::string literal;
    std::string canonical;
  };
  std::vector<Pending> pending;

  std::vector<std::optional<std::vector<Permutation>>> centralizers(
      plan.class_reps.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const std::size_t ci = tasks[t].class_index;
    const Permutation& rep = plan.class_reps[ci];
    result.stats.pairs_scanned += outputs[t].stats.pairs_scanned;
    result.stats.commutator_matches += outputs[t].stats.commutator_matches;
    result.stats.transitive_matches += outputs[t].stats.transitive_matches;
    result.stats.raw_certificates += outputs[t].stats.raw_certificates;

    for (Permutation& beta : outputs[t].hits) {
      MonodromyPair pair(rep, std::move(beta));
      Pending p{pair, analyze(pair), format_pair(pair.alpha, pair.beta), {}};
      switch (cfg.dedup) {
        case DedupMode::off:
          p.canonical = p.literal;
          break;
        case DedupMode::centralizer:
          if (!centralizers[ci]) {
            centralizers[ci] = centralizer_of_representative(rep);
          }
          p.canonical = minimize_beta_text(rep, pair.beta, *centralizers[ci]);
          break;
        case DedupMode::full:
          p.canonical = minimize_pair_text(pair);
          break;
      }
      pending.push_back(std::move(p));
    }
    for (Permutation& beta : outputs[t].near_misses) {
      result.near_misses.emplace_back(rep, std::move(beta));
    }
  }

  std::map<std::string, std::size_t> classes;
  std::vector<std::string> first_seen;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    auto [it, inserted] = classes.try_emplace(pending[i].canonical, i);
    if (inserted) {
      first_seen.push_back(pending[i].canonical);
    } else if (pending[i].literal < pending[it->second].literal) {
      it->second = i;
    }
  }
  result.stats.classes = classes.size();

  std::vector<std::size_t> chosen;
  if (cfg.deterministic_order) {
    for (const auto& [canonical, index] : classes) {
      chosen.push_back(index);
    }
  } else {
    for (const std::string& canonical : first_seen) {
      chosen.push_back(classes.at(canonical));
    }
  }
  if (cfg.max_results && chosen.size() > *cfg.max_results) {
    chosen.resize(*cfg.max_results);
  }
  for (std::size_t index : chosen) {
    result.certificates.push_back(Certificate{pending[index].pair,
                                              pending[index].invariants,
                                              pending[index].canonical});
  }

  if (cfg.deterministic_order) {
    std::sort(result.near_misses.begin(), result.near_misses.end(),
              [](const MonodromyPair& a, const MonodromyPair& b) {
                return format_pair(a.alpha, a.beta) <
                       format_pair(b.alpha, b.beta);
              });
  }
  return result;
}

}  // namespace monocover
