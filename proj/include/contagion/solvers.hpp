#pragma once

// Minimum contagious sets: an exhaustive solver, the random-ordering
// heuristics, a greedy baseline, and the closed-form upper bounds
//
//   eq1 = sum_v ceil(phi(v)) / (d(v) + 1)
//   eq2 = sum_{v in V'} min{1, ceil(phi(v)) / (d'(v) + 1)},
//         V' = {v : d(v) >= 2 or phi(v) != 1},  d'(v) = |N(v) ∩ V'|.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "contagion/error.hpp"
#include "contagion/graph.hpp"
#include "contagion/percolation.hpp"
#include "contagion/rational.hpp"
#include "contagion/rng.hpp"
#include "contagion/vertex_set.hpp"

namespace contagion {

enum class Method { exact, random_order_full, random_order_restricted, greedy };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::random_order_full: return "random-order-full";
    case Method::random_order_restricted: return "random-order-restricted";
    case Method::greedy: return "greedy";
  }
  return "unknown";
}

inline Method parse_method(std::string_view s) {
  for (Method m : {Method::exact, Method::random_order_full, Method::random_order_restricted, Method::greedy})
    if (to_string(m) == s) return m;
  throw Error(ErrorKind::invalid_argument, "unknown method '" + std::string(s) + "'");
}

struct SolveResult {
  VertexSet set;
  std::size_t size = 0;
  Method method = Method::exact;
  std::size_t trials_used = 0;
  /// Randomised methods: how many per-trial sets were verified contagious,
  /// and the size of each trial's set in trial order.
  std::size_t trials_contagious = 0;
  std::vector<std::size_t> trial_sizes;
  InfectionTrace certificate;
};

namespace detail {

// Attaches the certificate; every returned set is re-verified by the engine.
inline SolveResult finish(const Graph& g, const ThresholdAssignment& phi, VertexSet set, Method method,
                          std::size_t trials) {
  SolveResult r;
  r.certificate = percolate(g, phi, set);
  if (r.certificate.final_set().size() != g.order())
    throw std::logic_error(std::string(to_string(method)) + " produced a non-contagious set");
  r.size = set.size();
  r.set = std::move(set);
  r.method = method;
  r.trials_used = trials;
  return r;
}

/// Advances `idx` to the next k-combination of {0..m-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < m - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Exhaustive search on one connected piece, by increasing size; the first
// percolating subset is optimal.
inline std::vector<Vertex> min_contagious_connected(const Graph& g, std::span<const std::uint32_t> req) {
  const std::size_t n = g.order();
  std::vector<Vertex> forced, free;
  for (Vertex v = 0; v < n; ++v) (req[v] > g.degree(v) ? forced : free).push_back(v);

  Percolator engine(g, req);
  std::vector<Vertex> seed;
  for (std::size_t k = 0; k <= free.size(); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      seed = forced;
      for (std::size_t i : idx) seed.push_back(free[i]);
      if (engine.run(seed) == n) {
        std::sort(seed.begin(), seed.end());
        return seed;
      }
    } while (next_combination(idx, free.size()));
  }
  throw std::logic_error("full vertex set failed to percolate");
}

}  // namespace detail

inline constexpr std::size_t default_component_limit = 24;

/// h_phi(G) with a witness: per component, subsets of increasing size in
/// lexicographic order after forcing every vertex with req(v) > d(v).
/// Throws Error(limit_exceeded) if a component has more than `limit` vertices.
inline SolveResult exact_min_contagious(const Graph& g, const ThresholdAssignment& phi,
                                        std::size_t limit = default_component_limit) {
  phi.check_bound_to(g);
  const auto components = connected_components(g);
  for (const auto& comp : components)
    if (comp.size() > limit)
      throw Error(ErrorKind::limit_exceeded, "component of order " + std::to_string(comp.size()) +
                                                 " exceeds exact-solver limit " + std::to_string(limit));
  VertexSet best(g.order());
  for (const auto& comp : components) {
    auto sub = induced_subgraph(g, comp);
    auto sub_phi = phi.restricted(sub);
    for (Vertex v : detail::min_contagious_connected(sub.graph, sub_phi.requirements()))
      best.insert(sub.new_to_old[v]);
  }
  return detail::finish(g, phi, std::move(best), Method::exact, 0);
}

/// The seed induced by an ordering: every vertex of `order` with fewer than
/// req(v) of its neighbours placed before it. Vertices absent from `order`
/// are neither selected nor counted as predecessors.
inline VertexSet order_induced_seed(const Graph& g, std::span<const std::uint32_t> req,
                                    std::span<const Vertex> order) {
  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(g.order(), absent);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  VertexSet seed(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    std::size_t before = 0;
    for (Vertex w : g.neighbours(v))
      if (position[w] != absent && position[w] < i) ++before;
    if (before < req[v]) seed.insert(v);
  }
  return seed;
}

namespace detail {

inline SolveResult best_of_orderings(const Graph& g, const ThresholdAssignment& phi,
                                     std::vector<Vertex> pool, std::size_t trials,
                                     std::uint64_t rng_seed, Method method) {
  if (trials < 1) throw Error(ErrorKind::invalid_argument, "trials must be >= 1");
  Percolator engine(g, phi.requirements());
  VertexSet best;
  std::size_t contagious = 0;
  std::vector<std::size_t> sizes;
  sizes.reserve(trials);
  std::vector<Vertex> order;
  for (std::size_t t = 0; t < trials; ++t) {
    order = pool;
    Rng rng(stream_seed(rng_seed, t));
    rng.shuffle(std::span<Vertex>(order));
    VertexSet seed = order_induced_seed(g, phi.requirements(), order);
    if (engine.run(seed.members()) == g.order()) ++contagious;
    sizes.push_back(seed.size());
    if (t == 0 || seed.size() < best.size()) best = std::move(seed);
  }
  auto r = finish(g, phi, std::move(best), method, trials);
  r.trials_contagious = contagious;
  r.trial_sizes = std::move(sizes);
  return r;
}

}  // namespace detail

/// Best over `trials` uniform permutations of V of the order-induced seed.
/// Trial t draws from stream_seed(rng_seed, t).
inline SolveResult random_order_full(const Graph& g, const ThresholdAssignment& phi, std::size_t trials,
                                     std::uint64_t rng_seed) {
  phi.check_bound_to(g);
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  return detail::best_of_orderings(g, phi, std::move(all), trials, rng_seed, Method::random_order_full);
}

// ---------------------------------------------------------------------------
// Degree classes relative to rho

struct DegreeClassification {
  Rational rho;
  VertexSet v1;     // d(v) <= 1/rho: one infected neighbour suffices
  VertexSet v2;     // 1/rho < d(v) <= 2/rho
  VertexSet v_ge2;  // d(v) > 1/rho
  std::vector<std::size_t> dprime;  // |N(v) ∩ V1|
  std::size_t m12 = 0;              // edges between V1 and V2
  std::vector<Rational> x;          // rho * d(v)
  std::vector<Rational> y;          // rho * dprime(v)
};

inline DegreeClassification classify_degrees(const Graph& g, const Rational& rho) {
  if (rho <= 0 || rho > 1)
    throw Error(ErrorKind::invalid_argument, "degree classification needs 0 < rho <= 1, got " + to_string(rho));
  const std::size_t n = g.order();
  DegreeClassification c{rho, VertexSet(n), VertexSet(n), VertexSet(n), {}, 0, {}, {}};
  const Integer p = numerator_of(rho), q = denominator_of(rho);
  for (Vertex v = 0; v < n; ++v) {
    const Integer pd = p * g.degree(v);
    if (pd <= q) {
      c.v1.insert(v);
    } else {
      c.v_ge2.insert(v);
      if (pd <= 2 * q) c.v2.insert(v);
    }
  }
  c.dprime.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbours(v))
      if (c.v1.contains(w)) ++c.dprime[v];
    c.x.push_back(rho * g.degree(v));
    c.y.push_back(rho * c.dprime[v]);
  }
  // Counted from the V1 side.
  for (Vertex v : c.v1.members())
    for (Vertex w : g.neighbours(v))
      if (c.v2.contains(w)) ++c.m12;
  return c;
}

/// Best over `trials` uniform orderings of V≥2 only; V1 then follows by
/// connectivity. With V≥2 empty the single seed {0} is returned.
inline SolveResult random_order_restricted(const Graph& g, const ThresholdAssignment& phi, std::size_t trials,
                                           std::uint64_t rng_seed) {
  phi.check_bound_to(g);
  if (!phi.is_proportional())
    throw Error(ErrorKind::invalid_argument, "restricted ordering needs proportional thresholds");
  if (!is_connected(g)) throw Error(ErrorKind::invalid_argument, "restricted ordering needs a connected graph");
  if (trials < 1) throw Error(ErrorKind::invalid_argument, "trials must be >= 1");
  if (phi.rho() == 0 || g.order() == 0) {
    VertexSet none(g.order());
    auto r = detail::finish(g, phi, none, Method::random_order_restricted, 1);
    r.trials_contagious = 1;
    r.trial_sizes = {0};
    return r;
  }
  auto classes = classify_degrees(g, phi.rho());
  if (classes.v_ge2.empty()) {
    auto r = detail::finish(g, phi, VertexSet(g.order(), {0}), Method::random_order_restricted, 1);
    r.trials_contagious = 1;
    r.trial_sizes = {1};
    return r;
  }
  return detail::best_of_orderings(g, phi, classes.v_ge2.members(), trials, rng_seed,
                                   Method::random_order_restricted);
}

inline SolveResult random_order_restricted(const Graph& g, const Rational& rho, std::size_t trials,
                                           std::uint64_t rng_seed) {
  return random_order_restricted(g, make_proportional(g, rho), trials, rng_seed);
}

/// Expected size of one restricted-ordering seed:
/// sum over V≥2 of ceil(rho d(v)) / (1 + |N(v) ∩ V≥2|).
inline Rational expected_restricted_size(const Graph& g, const Rational& rho) {
  const auto classes = classify_degrees(g, rho);
  const auto phi = make_proportional(g, rho);
  Rational total = 0;
  for (Vertex v : classes.v_ge2.members())
    total += Rational(phi.req(v)) / Rational(1 + g.degree(v) - classes.dprime[v]);
  return total;
}

inline Rational acker_bound(const Graph& g, const ThresholdAssignment& phi) {
  phi.check_bound_to(g);
  Rational total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += Rational(phi.req(v)) / Rational(g.degree(v) + 1);
  return total;
}

inline Rational cordasco_bound(const Graph& g, const ThresholdAssignment& phi) {
  phi.check_bound_to(g);
  const std::size_t n = g.order();
  std::vector<bool> in_prime(n);
  for (Vertex v = 0; v < n; ++v) in_prime[v] = g.degree(v) >= 2 || phi.phi(v) != 1;
  Rational total = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_prime[v]) continue;
    std::size_t dp = 0;
    for (Vertex w : g.neighbours(v))
      if (in_prime[w]) ++dp;
    total += std::min(Rational(1), Rational(phi.req(v)) / Rational(dp + 1));
  }
  return total;
}

/// Repeatedly seeds the uninfected vertex whose addition maximises the
/// closure size, lowest id on ties.
inline SolveResult greedy_baseline(const Graph& g, const ThresholdAssignment& phi) {
  phi.check_bound_to(g);
  const std::size_t n = g.order();
  Percolator engine(g, phi.requirements());
  std::vector<Vertex> seed;
  std::size_t covered = engine.run(seed);
  while (covered < n) {
    const VertexSet current = engine.infected_set();
    Vertex pick = 0;
    std::size_t pick_size = 0;
    bool found = false;
    seed.push_back(0);
    for (Vertex v = 0; v < n; ++v) {
      if (current.contains(v)) continue;
      seed.back() = v;
      const std::size_t size = engine.run(seed);
      if (!found || size > pick_size) {
        pick = v;
        pick_size = size;
        found = true;
      }
    }
    seed.back() = pick;
    covered = engine.run(seed);
  }
  return detail::finish(g, phi, VertexSet::from_range(n, seed), Method::greedy, 0);
}

}  // namespace contagion
