#pragma once

// Threshold assignments and the synchronous infection process
//
//   A_0 = seed,  A_{i+1} = A_i ∪ { v : |N(v) ∩ A_i| >= phi(v) }.
//
// Thresholds are exact rationals; since infected-neighbour counts are
// integers the engine only ever compares against req(v) = ceil(phi(v)).

#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "contagion/error.hpp"
#include "contagion/graph.hpp"
#include "contagion/rational.hpp"
#include "contagion/vertex_set.hpp"

namespace contagion {

/// Per-vertex thresholds bound to one graph: either phi(v) = rho * d(v) or an
/// explicit nonnegative rational per vertex.
class ThresholdAssignment {
 public:
  enum class Mode { proportional, explicit_values };

  static ThresholdAssignment proportional(const Graph& g, const Rational& rho) {
    if (rho < 0 || rho > 1)
      throw Error(ErrorKind::invalid_argument, "rho must lie in [0,1], got " + to_string(rho));
    ThresholdAssignment t;
    t.mode_ = Mode::proportional;
    t.rho_ = rho;
    t.degree_.reserve(g.order());
    t.req_.reserve(g.order());
    const Integer p = numerator_of(rho);
    const Integer q = denominator_of(rho);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto d = g.degree(v);
      t.degree_.push_back(static_cast<std::uint32_t>(d));
      // ceil(p*d/q) for p,d >= 0, q >= 1
      Integer r = (p * d + q - 1) / q;
      t.req_.push_back(r.convert_to<std::uint32_t>());
    }
    return t;
  }

  static ThresholdAssignment explicit_values(const Graph& g, std::vector<Rational> phi) {
    if (phi.size() != g.order())
      throw Error(ErrorKind::mismatch, "explicit thresholds: expected " + std::to_string(g.order()) +
                                           " values, got " + std::to_string(phi.size()));
    ThresholdAssignment t;
    t.mode_ = Mode::explicit_values;
    t.degree_.reserve(g.order());
    t.req_.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      if (phi[v] < 0)
        throw Error(ErrorKind::invalid_argument, "negative threshold at vertex " + std::to_string(v));
      t.degree_.push_back(static_cast<std::uint32_t>(g.degree(v)));
      Integer r = ceil(phi[v]);
      // Anything above the vertex count behaves identically to "never by neighbours".
      if (r > Integer(std::numeric_limits<std::uint32_t>::max())) r = std::numeric_limits<std::uint32_t>::max();
      t.req_.push_back(r.convert_to<std::uint32_t>());
    }
    t.explicit_ = std::move(phi);
    return t;
  }

  Mode mode() const noexcept { return mode_; }
  bool is_proportional() const noexcept { return mode_ == Mode::proportional; }

  /// Only meaningful in proportional mode.
  const Rational& rho() const {
    if (mode_ != Mode::proportional)
      throw Error(ErrorKind::invalid_argument, "rho requested from explicit thresholds");
    return rho_;
  }

  std::size_t order() const noexcept { return req_.size(); }

  /// The exact threshold phi(v).
  Rational phi(Vertex v) const {
    if (mode_ == Mode::proportional) return rho_ * degree_.at(v);
    return explicit_.at(v);
  }

  std::uint32_t req(Vertex v) const { return req_.at(v); }
  std::span<const std::uint32_t> requirements() const noexcept { return req_; }

  /// Restriction to an induced subgraph whose vertices keep their thresholds.
  ThresholdAssignment restricted(const InducedSubgraph& sub) const {
    ThresholdAssignment t;
    t.mode_ = mode_;
    t.rho_ = rho_;
    for (Vertex old : sub.new_to_old) {
      t.degree_.push_back(degree_.at(old));
      t.req_.push_back(req_.at(old));
      if (mode_ == Mode::explicit_values) t.explicit_.push_back(explicit_.at(old));
    }
    return t;
  }

  void check_bound_to(const Graph& g) const {
    if (g.order() != req_.size())
      throw Error(ErrorKind::mismatch, "thresholds bound to " + std::to_string(req_.size()) +
                                           " vertices, graph has " + std::to_string(g.order()));
  }

 private:
  Mode mode_ = Mode::proportional;
  Rational rho_;
  std::vector<Rational> explicit_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> req_;
};

inline ThresholdAssignment make_proportional(const Graph& g, const Rational& rho) {
  return ThresholdAssignment::proportional(g, rho);
}

/// The infecting sequence, stored as per-round additions.
class InfectionTrace {
 public:
  static constexpr std::size_t never = std::numeric_limits<std::size_t>::max();

  InfectionTrace() = default;
  InfectionTrace(std::vector<std::vector<Vertex>> added, std::vector<std::size_t> round_of)
      : added_(std::move(added)), round_of_(std::move(round_of)) {}

  /// Index k of the fixpoint A_k.
  std::size_t last_round() const noexcept { return added_.empty() ? 0 : added_.size() - 1; }
  std::size_t round_count() const noexcept { return added_.size(); }

  /// Vertices in A_i \ A_{i-1} (A_0 itself for i = 0), ascending.
  std::span<const Vertex> added_in(std::size_t round) const { return added_.at(round); }

  /// Round at which v was infected, or InfectionTrace::never.
  std::size_t round_of(Vertex v) const { return round_of_.at(v); }
  std::span<const std::size_t> rounds() const noexcept { return round_of_; }

  VertexSet set_at(std::size_t round) const {
    VertexSet s(round_of_.size());
    for (Vertex v = 0; v < round_of_.size(); ++v)
      if (round_of_[v] <= round) s.insert(v);
    return s;
  }

  VertexSet final_set() const { return set_at(never - 1); }

  /// One line per round: "round i: v1 v2 ...".
  void dump(std::ostream& out) const {
    for (std::size_t i = 0; i < added_.size(); ++i) {
      out << "round " << i << ':';
      for (Vertex v : added_[i]) out << ' ' << v;
      out << '\n';
    }
  }

 private:
  std::vector<std::vector<Vertex>> added_;
  std::vector<std::size_t> round_of_;
};

/// Round-synchronous frontier simulation with reusable scratch buffers.
/// Each run is O(n + m); one Percolator per thread.
class Percolator {
 public:
  Percolator(const Graph& g, std::span<const std::uint32_t> req) : g_(&g), req_(req) {
    if (req.size() != g.order())
      throw Error(ErrorKind::mismatch, "thresholds do not match graph order");
    count_.resize(g.order());
    infected_.resize(g.order());
    queued_.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      if (req_[v] == 0) zero_req_.push_back(v);
  }

  /// Runs to the fixpoint; if `trace` is non-null, records per-round additions.
  /// Returns the number of infected vertices.
  template <class SeedRange>
  std::size_t run(const SeedRange& seed, InfectionTrace* trace = nullptr) {
    const std::size_t n = g_->order();
    std::fill(count_.begin(), count_.end(), 0u);
    std::fill(infected_.begin(), infected_.end(), std::uint8_t{0});
    std::fill(queued_.begin(), queued_.end(), std::uint8_t{0});
    frontier_.clear();
    for (auto s : seed) {
      Vertex v = static_cast<Vertex>(s);
      if (v >= n) throw Error(ErrorKind::invalid_graph, "seed vertex " + std::to_string(v) + " out of range");
      if (!infected_[v]) {
        infected_[v] = 1;
        frontier_.push_back(v);
      }
    }
    std::size_t total = frontier_.size();

    std::vector<std::vector<Vertex>> added;
    std::vector<std::size_t> round_of;
    if (trace) {
      round_of.assign(n, InfectionTrace::never);
      std::sort(frontier_.begin(), frontier_.end());
      for (Vertex v : frontier_) round_of[v] = 0;
      added.push_back(frontier_);
    }

    // Vertices with req 0 satisfy the rule against any A_0.
    next_.clear();
    for (Vertex v : zero_req_)
      if (!infected_[v]) {
        queued_[v] = 1;
        next_.push_back(v);
      }

    std::size_t round = 0;
    while (true) {
      // count_ afterwards holds |N(v) ∩ A_round| for every uninfected v
      for (Vertex v : frontier_)
        for (Vertex w : g_->neighbours(v)) {
          if (infected_[w]) continue;
          if (++count_[w] >= req_[w] && !queued_[w]) {
            queued_[w] = 1;
            next_.push_back(w);
          }
        }
      if (next_.empty()) break;
      ++round;
      for (Vertex v : next_) infected_[v] = 1;
      total += next_.size();
      if (trace) {
        std::sort(next_.begin(), next_.end());
        for (Vertex v : next_) round_of[v] = round;
        added.push_back(next_);
      }
      frontier_.swap(next_);
      next_.clear();
    }

    if (trace) *trace = InfectionTrace(std::move(added), std::move(round_of));
    return total;
  }

  bool infected(Vertex v) const { return infected_.at(v) != 0; }

  VertexSet infected_set() const {
    VertexSet s(g_->order());
    for (Vertex v = 0; v < g_->order(); ++v)
      if (infected_[v]) s.insert(v);
    return s;
  }

 private:
  const Graph* g_;
  std::span<const std::uint32_t> req_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint8_t> infected_;
  std::vector<std::uint8_t> queued_;
  std::vector<Vertex> zero_req_;
  std::vector<Vertex> frontier_;
  std::vector<Vertex> next_;
};

inline void check_seed(const Graph& g, const VertexSet& seed) {
  if (seed.universe() != g.order())
    throw Error(ErrorKind::mismatch, "seed set universe " + std::to_string(seed.universe()) +
                                         " does not match graph order " + std::to_string(g.order()));
}

inline InfectionTrace percolate(const Graph& g, const ThresholdAssignment& phi, const VertexSet& seed) {
  phi.check_bound_to(g);
  check_seed(g, seed);
  Percolator engine(g, phi.requirements());
  InfectionTrace trace;
  engine.run(seed.members(), &trace);
  return trace;
}

/// H_{phi,G}(seed).
inline VertexSet closure(const Graph& g, const ThresholdAssignment& phi, const VertexSet& seed) {
  phi.check_bound_to(g);
  check_seed(g, seed);
  Percolator engine(g, phi.requirements());
  engine.run(seed.members());
  return engine.infected_set();
}

inline bool is_contagious(const Graph& g, const ThresholdAssignment& phi, const VertexSet& seed) {
  phi.check_bound_to(g);
  check_seed(g, seed);
  Percolator engine(g, phi.requirements());
  return engine.run(seed.members()) == g.order();
}

}  // namespace contagion
