#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "uwsn/core.hpp"
#include "uwsn/partition.hpp"
#include "uwsn/rng.hpp"

namespace uwsn {

/// One cell's routing state. `load` counts packets the node has forwarded;
/// source emissions and final delivery do not count.
struct NodeState {
  CellId id;
  bool alive = true;
  long long load = 0;
  double energy = 0.0;
};

/// Field of nodes keyed by cell id. Single-owner mutable state: concurrent
/// routing needs independent copies.
class Field {
 public:
  void add(const NodeState& node) { nodes_[node.id] = node; }

  NodeState* find(const CellId& id) {
    auto it = nodes_.find(id);
    return it == nodes_.end() ? nullptr : &it->second;
  }
  const NodeState* find(const CellId& id) const {
    auto it = nodes_.find(id);
    return it == nodes_.end() ? nullptr : &it->second;
  }

  bool alive(const CellId& id) const {
    const NodeState* n = find(id);
    return n != nullptr && n->alive;
  }

  std::size_t size() const { return nodes_.size(); }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

 private:
  std::unordered_map<CellId, NodeState, CellIdHash> nodes_;
};

/// The 14 neighbor offsets of a truncated-octahedron cell: 6 across square
/// faces and 8 across hexagonal faces.
inline const std::array<CellId, 14>& neighbor_offsets() {
  static const std::array<CellId, 14> offsets{{{1, 0, 0},
                                               {-1, 0, 0},
                                               {0, 1, 0},
                                               {0, -1, 0},
                                               {-1, -1, 2},
                                               {1, 1, -2},
                                               {0, 0, 1},
                                               {0, 0, -1},
                                               {-1, 0, 1},
                                               {1, 0, -1},
                                               {0, -1, 1},
                                               {0, 1, -1},
                                               {-1, -1, 1},
                                               {1, 1, -1}}};
  return offsets;
}

inline std::array<CellId, 14> neighbors_of(const CellId& id) {
  std::array<CellId, 14> out;
  const auto& offsets = neighbor_offsets();
  for (std::size_t i = 0; i < offsets.size(); ++i)
    out[i] = {id.u + offsets[i].u, id.v + offsets[i].v, id.w + offsets[i].w};
  return out;
}

/// Squared Euclidean distance in id space; zero iff the ids are equal.
inline long long id_metric(const CellId& a, const CellId& b) {
  const long long du = a.u - b.u;
  const long long dv = a.v - b.v;
  const long long dw = a.w - b.w;
  return du * du + dv * dv + dw * dw;
}

enum class TieBreak { LeastLoaded, HighestEnergy, UniformRandom };

struct RoutePolicy {
  TieBreak tie_break = TieBreak::LeastLoaded;
  std::uint64_t seed = 0;  // UniformRandom is deterministic given the seed
};

/// Next hop from `current` toward `dest`: among alive neighbors strictly
/// closer (id metric) than `current`, takes the closest; metric ties go to
/// the policy criterion and any remaining tie to the lexicographically
/// smallest id. Increments the chosen node's load unless it is the
/// destination (delivery is not forwarding). Returns nullopt at a dead end.
inline std::optional<CellId> greedy_next_hop(const CellId& current, const CellId& dest,
                                             Field& field, const RoutePolicy& policy,
                                             Rng& rng) {
  const long long current_metric = id_metric(current, dest);

  struct Candidate {
    CellId id;
    long long metric;
    const NodeState* node;
  };
  std::vector<Candidate> best;
  long long best_metric = current_metric;
  for (const CellId& n : neighbors_of(current)) {
    const NodeState* state = field.find(n);
    if (state == nullptr || !state->alive) continue;
    const long long m = id_metric(n, dest);
    if (m >= current_metric || m > best_metric) continue;
    if (m < best_metric) {
      best_metric = m;
      best.clear();
    }
    best.push_back({n, m, state});
  }
  if (best.empty()) return std::nullopt;

  // Policy criterion among the metric-minimal candidates.
  auto better = [&](const Candidate& a, const Candidate& b) {
    switch (policy.tie_break) {
      case TieBreak::LeastLoaded:
        if (a.node->load != b.node->load) return a.node->load < b.node->load;
        break;
      case TieBreak::HighestEnergy:
        if (a.node->energy != b.node->energy) return a.node->energy > b.node->energy;
        break;
      case TieBreak::UniformRandom:
        break;
    }
    return a.id < b.id;
  };

  const Candidate* chosen = nullptr;
  if (policy.tie_break == TieBreak::UniformRandom) {
    chosen = &best[rng.below(best.size())];
  } else {
    chosen = &best.front();
    for (const Candidate& c : best)
      if (better(c, *chosen)) chosen = &c;
  }

  if (!(chosen->id == dest)) ++field.find(chosen->id)->load;
  return chosen->id;
}

enum class RouteOutcome { Delivered, DeadEnd };

struct RouteResult {
  RouteOutcome outcome = RouteOutcome::DeadEnd;
  std::vector<CellId> path;  // visited ids, source first
  CellId dead_end_at;
  long long hops = 0;
};

/// Greedy geographic routing over cell ids. The metric strictly decreases
/// every hop, so loops are impossible and hop count is bounded by
/// id_metric(src, dest); max_hops (default 4x that bound) is a safety net
/// for corrupted fields.
inline RouteResult route(const CellId& src, const CellId& dest, Field& field,
                         const RoutePolicy& policy, long long max_hops = -1) {
  if (!field.alive(src)) throw std::invalid_argument("route: source is dead or absent");
  if (!field.alive(dest)) throw std::invalid_argument("route: destination is dead or absent");
  if (max_hops < 0) max_hops = 4 * id_metric(src, dest);

  Rng rng(policy.seed);
  RouteResult result;
  result.path.push_back(src);

  CellId current = src;
  while (!(current == dest)) {
    if (result.hops >= max_hops) {
      result.outcome = RouteOutcome::DeadEnd;
      result.dead_end_at = current;
      return result;
    }
    const auto next = greedy_next_hop(current, dest, field, policy, rng);
    if (!next) {
      result.outcome = RouteOutcome::DeadEnd;
      result.dead_end_at = current;
      return result;
    }
    current = *next;
    result.path.push_back(current);
    ++result.hops;
  }
  result.outcome = RouteOutcome::Delivered;
  return result;
}

/// Exact shortest hop count over the alive 14-neighbor graph, or nullopt if
/// unreachable. Ground truth for the greedy router.
inline std::optional<long long> bfs_oracle(const CellId& src, const CellId& dest,
                                           const Field& field) {
  if (!field.alive(src) || !field.alive(dest)) return std::nullopt;
  if (src == dest) return 0;

  std::unordered_map<CellId, long long, CellIdHash> dist;
  dist[src] = 0;
  std::queue<CellId> frontier;
  frontier.push(src);
  while (!frontier.empty()) {
    const CellId cur = frontier.front();
    frontier.pop();
    const long long d = dist[cur];
    for (const CellId& n : neighbors_of(cur)) {
      if (!field.alive(n) || dist.count(n)) continue;
      if (n == dest) return d + 1;
      dist[n] = d + 1;
      frontier.push(n);
    }
  }
  return std::nullopt;
}

}  // namespace uwsn
