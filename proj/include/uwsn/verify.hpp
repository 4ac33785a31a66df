#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <thread>
#include <vector>

#include "uwsn/core.hpp"
#include "uwsn/placement.hpp"

namespace uwsn {

struct CoverageReport {
  std::uint64_t samples_total = 0;
  std::uint64_t samples_covered = 0;
  double worst_gap = 0.0;  // max over samples of distance to the nearest node
  double coverage_fraction = 0.0;
};

namespace detail {

/// Uniform hash grid over node positions for nearest-node queries.
class NodeBuckets {
 public:
  NodeBuckets(const std::vector<Point3>& nodes, double cell) : nodes_(nodes), cell_(cell) {
    if (nodes.empty()) return;
    lo_ = nodes.front();
    Point3 hi = lo_;
    for (const auto& p : nodes) {
      lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y), std::min(lo_.z, p.z)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    nx_ = dim(lo_.x, hi.x);
    ny_ = dim(lo_.y, hi.y);
    nz_ = dim(lo_.z, hi.z);
    grid_.resize(static_cast<std::size_t>(nx_) * ny_ * nz_);
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
      grid_[index_of(nodes[i])].push_back(i);
  }

  /// Exact nearest squared distance. The one-ring scan is exact whenever the
  /// nearest node is within one bucket edge of the query; otherwise every
  /// node outside the ring is at least `cell` away and a full scan decides.
  double nearest(const Point3& p) const {
    if (nodes_.empty()) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    const int cx = clampi(coord(p.x, lo_.x), nx_);
    const int cy = clampi(coord(p.y, lo_.y), ny_);
    const int cz = clampi(coord(p.z, lo_.z), nz_);
    for (int dz = -1; dz <= 1; ++dz)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const int x = cx + dx, y = cy + dy, z = cz + dz;
          if (x < 0 || y < 0 || z < 0 || x >= nx_ || y >= ny_ || z >= nz_) continue;
          for (int i : grid_[(static_cast<std::size_t>(z) * ny_ + y) * nx_ + x]) {
            const double d2 = squared_distance(p, nodes_[i]);
            if (d2 < best) best = d2;
          }
        }
    if (best <= cell_ * cell_) return best;
    for (const auto& n : nodes_) best = std::min(best, squared_distance(p, n));
    return best;
  }

 private:
  static int clampi(int v, int n) { return std::max(0, std::min(v, n - 1)); }
  int dim(double lo, double hi) const {
    return std::max(1, static_cast<int>(std::floor((hi - lo) / cell_)) + 1);
  }
  int coord(double v, double lo) const {
    return static_cast<int>(std::floor((v - lo) / cell_));
  }
  std::size_t index_of(const Point3& p) const {
    const int x = clampi(coord(p.x, lo_.x), nx_);
    const int y = clampi(coord(p.y, lo_.y), ny_);
    const int z = clampi(coord(p.z, lo_.z), nz_);
    return (static_cast<std::size_t>(z) * ny_ + y) * nx_ + x;
  }

  const std::vector<Point3>& nodes_;
  double cell_;
  Point3 lo_;
  int nx_ = 0, ny_ = 0, nz_ = 0;
  std::vector<std::vector<int>> grid_;
};

inline std::vector<Point3> positions_of(const Placement& placement) {
  std::vector<Point3> out;
  out.reserve(placement.points.size());
  for (const auto& lp : placement.points) out.push_back(lp.position);
  return out;
}

}  // namespace detail

/// Samples `region` on a regular grid of pitch `grid_step`; a sample counts
/// as covered iff some node is within r_bs (inclusive). Deterministic, and
/// worst_gap shrinks monotonically as grid_step does. Slabs along z may be
/// evaluated in parallel; the merged report does not depend on `threads`.
inline CoverageReport verify_coverage(const std::vector<Point3>& nodes, double r_bs,
                                      const Region& region, double grid_step,
                                      unsigned threads = 1) {
  if (!(grid_step > 0.0)) throw std::invalid_argument("verify_coverage: grid_step must be > 0");
  if (!region.valid()) throw std::invalid_argument("verify_coverage: invalid region");

  const auto steps = [&](double lo, double hi) {
    return static_cast<std::int64_t>(std::floor((hi - lo) / grid_step)) + 1;
  };
  const std::int64_t nx = steps(region.min_corner.x, region.max_corner.x);
  const std::int64_t ny = steps(region.min_corner.y, region.max_corner.y);
  const std::int64_t nz = steps(region.min_corner.z, region.max_corner.z);

  CoverageReport report;
  report.samples_total = static_cast<std::uint64_t>(nx) * ny * nz;
  if (nodes.empty()) {
    report.worst_gap = std::numeric_limits<double>::infinity();
    return report;
  }

  const detail::NodeBuckets buckets(nodes, std::max(r_bs, grid_step));
  const double r2 = r_bs * r_bs;

  struct Partial {
    std::uint64_t covered = 0;
    double worst2 = 0.0;
  };
  const unsigned nthreads = std::max(1u, threads);
  std::vector<Partial> partials(nthreads);

  auto run_slabs = [&](unsigned tid) {
    Partial& acc = partials[tid];
    for (std::int64_t iz = tid; iz < nz; iz += nthreads) {
      const double z = region.min_corner.z + static_cast<double>(iz) * grid_step;
      for (std::int64_t iy = 0; iy < ny; ++iy) {
        const double y = region.min_corner.y + static_cast<double>(iy) * grid_step;
        for (std::int64_t ix = 0; ix < nx; ++ix) {
          const double x = region.min_corner.x + static_cast<double>(ix) * grid_step;
          const double d2 = buckets.nearest({x, y, z});
          if (d2 <= r2) ++acc.covered;
          if (d2 > acc.worst2) acc.worst2 = d2;
        }
      }
    }
  };

  if (nthreads == 1) {
    run_slabs(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(run_slabs, t);
    for (auto& th : pool) th.join();
  }

  double worst2 = 0.0;
  for (const auto& p : partials) {
    report.samples_covered += p.covered;
    worst2 = std::max(worst2, p.worst2);
  }
  report.worst_gap = std::sqrt(worst2);
  report.coverage_fraction = report.samples_total == 0
                                 ? 0.0
                                 : static_cast<double>(report.samples_covered) /
                                       static_cast<double>(report.samples_total);
  return report;
}

inline CoverageReport verify_coverage(const Placement& placement, double r_bs,
                                      const Region& region, double grid_step,
                                      unsigned threads = 1) {
  return verify_coverage(detail::positions_of(placement), r_bs, region, grid_step, threads);
}

struct BackboneGraph {
  std::vector<Point3> nodes;
  std::vector<std::vector<int>> adjacency;        // symmetric, no self loops
  std::vector<int> interior;                      // indices of interior nodes
  std::map<int, std::size_t> degree_histogram;    // over interior nodes
  int interior_degree_mode = -1;                  // -1 when no interior nodes

  int degree(int i) const { return static_cast<int>(adjacency[i].size()); }
};

/// Threshold graph: edge iff distance <= r_bb. Interior nodes are those at
/// least `interior_margin` from every face of `region`; the degree histogram
/// and mode are computed over them so boundary truncation does not bleed in.
inline BackboneGraph build_backbone_graph(const std::vector<Point3>& nodes, double r_bb,
                                          const Region& region, double interior_margin) {
  if (!(r_bb > 0.0)) throw std::invalid_argument("build_backbone_graph: r_bb must be > 0");

  BackboneGraph g;
  g.nodes = nodes;
  g.adjacency.assign(nodes.size(), {});

  const double r2 = r_bb * r_bb;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(nodes.size()); ++j) {
      if (squared_distance(nodes[i], nodes[j]) <= r2) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }

  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    const Point3& p = nodes[i];
    const bool interior = p.x >= region.min_corner.x + interior_margin &&
                          p.x <= region.max_corner.x - interior_margin &&
                          p.y >= region.min_corner.y + interior_margin &&
                          p.y <= region.max_corner.y - interior_margin &&
                          p.z >= region.min_corner.z + interior_margin &&
                          p.z <= region.max_corner.z - interior_margin;
    if (interior) {
      g.interior.push_back(i);
      ++g.degree_histogram[g.degree(i)];
    }
  }

  std::size_t best = 0;
  for (const auto& [deg, count] : g.degree_histogram)
    if (count > best) {
      best = count;
      g.interior_degree_mode = deg;
    }
  return g;
}

/// Interior margin defaults to two cell diameters.
inline BackboneGraph build_backbone_graph(const Placement& placement, double r_bb) {
  double margin = 4.0 * placement.cell_radius;
  if (placement.strip)
    margin = 2.0 * std::max(placement.strip->alpha, placement.strip->beta);
  return build_backbone_graph(detail::positions_of(placement), r_bb, placement.region,
                              margin);
}

namespace detail {

/// Max number of internally vertex-disjoint s-t paths, capped at `cap`.
/// Unit-capacity node-split flow with BFS augmentation.
inline int vertex_disjoint_paths(const BackboneGraph& g, int s, int t, int cap) {
  const int n = static_cast<int>(g.nodes.size());
  // Node i splits into in=2i, out=2i+1. Arc out(u)->in(v) for each edge.
  struct Arc {
    int to, rev;
    int cap;
  };
  std::vector<std::vector<Arc>> adj(2 * n);
  auto add_arc = [&](int a, int b, int c) {
    adj[a].push_back({b, static_cast<int>(adj[b].size()), c});
    adj[b].push_back({a, static_cast<int>(adj[a].size()) - 1, 0});
  };
  for (int i = 0; i < n; ++i) add_arc(2 * i, 2 * i + 1, (i == s || i == t) ? cap : 1);
  for (int u = 0; u < n; ++u)
    for (int v : g.adjacency[u]) add_arc(2 * u + 1, 2 * v, cap);

  const int src = 2 * s + 1, dst = 2 * t;
  int flow = 0;
  std::vector<int> prev_node(2 * n), prev_arc(2 * n);
  while (flow < cap) {
    std::fill(prev_node.begin(), prev_node.end(), -1);
    std::vector<int> queue{src};
    prev_node[src] = src;
    bool found = false;
    for (std::size_t qi = 0; qi < queue.size() && !found; ++qi) {
      const int u = queue[qi];
      for (int ai = 0; ai < static_cast<int>(adj[u].size()); ++ai) {
        const Arc& a = adj[u][ai];
        if (a.cap <= 0 || prev_node[a.to] != -1) continue;
        prev_node[a.to] = u;
        prev_arc[a.to] = ai;
        if (a.to == dst) {
          found = true;
          break;
        }
        queue.push_back(a.to);
      }
    }
    if (!found) break;
    for (int v = dst; v != src; v = prev_node[v]) {
      Arc& a = adj[prev_node[v]][prev_arc[v]];
      a.cap -= 1;
      adj[v][a.rev].cap += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/// Exact k-vertex-connectivity (global min vertex cut >= k) for graphs of at
/// most 500 nodes. Uses the standard reduction: if some cut of size < k
/// exists, at least one of the first k vertices avoids it, so checking flows
/// from those vertices to all their non-neighbors is sufficient.
inline bool k_connectivity(const BackboneGraph& g, int k) {
  const int n = static_cast<int>(g.nodes.size());
  if (n > 500) throw ScaleError("k_connectivity: oracle limited to 500 nodes");
  if (k <= 0) return true;
  if (n == 0) return false;
  if (k > n - 1) return false;

  for (int i = 0; i < n; ++i)
    if (static_cast<int>(g.adjacency[i].size()) < k) return false;

  const int probes = std::min(k, n);
  for (int s = 0; s < probes; ++s) {
    std::vector<char> adjacent(n, 0);
    adjacent[s] = 1;
    for (int v : g.adjacency[s]) adjacent[v] = 1;
    for (int t = 0; t < n; ++t) {
      if (adjacent[t]) continue;
      if (detail::vertex_disjoint_paths(g, s, t, k) < k) return false;
    }
  }
  return true;
}

}  // namespace uwsn
