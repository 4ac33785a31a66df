#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "uwsn/core.hpp"
#include "uwsn/geometry.hpp"

namespace uwsn {

/// Integer triple addressing a virtual truncated-octahedron cell relative to
/// the information sink. Doubles as a routing address.
struct CellId {
  long long u = 0;
  long long v = 0;
  long long w = 0;

  auto operator<=>(const CellId&) const = default;
};

struct CellIdHash {
  std::size_t operator()(const CellId& id) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (long long c : {id.u, id.v, id.w}) {
      h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct PartitionFrame {
  Point3 sink;        // coordinate of the information sink; cell id (0,0,0)
  double r_t = 1.0;   // transmission radius

  void validate() const {
    if (!(r_t > 0.0)) throw std::invalid_argument("transmission radius must be > 0");
  }
};

namespace detail {
inline const double kSqrt14 = std::sqrt(14.0);
inline const double kSqrt17 = std::sqrt(17.0);
inline const double kSqrt34Over3 = std::sqrt(34.0 / 3.0);
}  // namespace detail

/// Largest cell radius, as a fraction of r_t, that keeps the active nodes of
/// any two first-tier neighboring cells within transmission range.
inline double max_cell_radius(CellShape shape) {
  switch (shape) {
    case CellShape::CB:
    case CellShape::RD:
      return 0.25;
    case CellShape::AltCB:
      return 1.0 / (2.0 * detail::kSqrt3);
    case CellShape::HP:
      return 1.0 / detail::kSqrt14;
    case CellShape::AltHP:
      return 1.0 / detail::kSqrt34Over3;
    case CellShape::TO:
      return detail::kSqrt5 / (2.0 * detail::kSqrt17);
  }
  throw UnsupportedShapeError("max_cell_radius: unknown shape");
}

/// Minimum sensing range, as a fraction of r_t: the cell diameter.
inline double min_sensing_range(CellShape shape) { return 2.0 * max_cell_radius(shape); }

/// Active nodes required relative to the TO partition (inverse cell-volume
/// ratio at the per-shape maximum radii).
inline double active_node_ratio(CellShape shape) {
  const double to_volume = cell_volume(CellShape::TO, max_cell_radius(CellShape::TO));
  return to_volume / cell_volume(base_of(shape), max_cell_radius(shape));
}

/// Network lifetime relative to the TO partition; reciprocal of the active
/// node ratio (cell lifetime is proportional to cell volume).
inline double lifetime_ratio(CellShape shape) { return 1.0 / active_node_ratio(shape); }

/// Center of the cell with the given id, for the TO partition.
inline Point3 cell_center(const CellId& id, const PartitionFrame& frame) {
  frame.validate();
  const double s = frame.r_t / detail::kSqrt17;
  return {frame.sink.x + static_cast<double>(2 * id.u + id.w) * s,
          frame.sink.y + static_cast<double>(2 * id.v + id.w) * s,
          frame.sink.z + static_cast<double>(id.w) * s};
}

namespace detail {

inline CellId argmin_center(const Point3& p, const PartitionFrame& frame, long long ul,
                            long long uh, long long vl, long long vh, long long wl,
                            long long wh) {
  CellId best{};
  double best_d2 = std::numeric_limits<double>::infinity();
  bool first = true;
  for (long long w = wl; w <= wh; ++w)
    for (long long u = ul; u <= uh; ++u)
      for (long long v = vl; v <= vh; ++v) {
        const CellId id{u, v, w};
        const double d2 = squared_distance(p, cell_center(id, frame));
        // Ties (cell boundaries) resolve to the lexicographically smallest id
        // so the partition is a function.
        if (first || d2 < best_d2 || (d2 == best_d2 && id < best)) {
          best = id;
          best_d2 = d2;
          first = false;
        }
      }
  return best;
}

}  // namespace detail

/// Distributed cell-id rule: floor and ceiling of the unconstrained real
/// solutions give two candidates per axis; the nearest of the eight candidate
/// centers is the cell.
inline CellId locate_cell(const Point3& p, const PartitionFrame& frame) {
  frame.validate();
  const double qu = (p.x - frame.sink.x - p.z + frame.sink.z) * detail::kSqrt17 /
                    (2.0 * frame.r_t);
  const double qv = (p.y - frame.sink.y - p.z + frame.sink.z) * detail::kSqrt17 /
                    (2.0 * frame.r_t);
  const double qw = (p.z - frame.sink.z) * detail::kSqrt17 / frame.r_t;
  const auto fl = [](double x) { return static_cast<long long>(std::floor(x)); };
  const auto ce = [](double x) { return static_cast<long long>(std::ceil(x)); };
  return detail::argmin_center(p, frame, fl(qu), ce(qu), fl(qv), ce(qv), fl(qw), ce(qw));
}

/// Diagnostic baseline: take the nearest plane index w first, then the
/// nearest in-plane indices given that plane. Mispredicts roughly a quarter
/// of the time; kept to quantify how much the eight-candidate rule buys.
inline CellId locate_cell_rounded(const Point3& p, const PartitionFrame& frame) {
  frame.validate();
  const auto nearest = [](double x) {
    return static_cast<long long>(std::floor(x + 0.5));
  };
  const long long w =
      nearest((p.z - frame.sink.z) * detail::kSqrt17 / frame.r_t);
  const long long u = nearest(
      ((p.x - frame.sink.x) * detail::kSqrt17 / frame.r_t - static_cast<double>(w)) / 2.0);
  const long long v = nearest(
      ((p.y - frame.sink.y) * detail::kSqrt17 / frame.r_t - static_cast<double>(w)) / 2.0);
  return {u, v, w};
}

/// Exhaustive nearest-center search over a +-`span` id box around the
/// unconstrained real solution. With span >= 2 the box provably contains the
/// nearest center (the cell circumradius is barely more than one id step).
inline CellId locate_cell_exhaustive(const Point3& p, const PartitionFrame& frame,
                                     long long span = 2) {
  frame.validate();
  const double qu = (p.x - frame.sink.x - p.z + frame.sink.z) * detail::kSqrt17 /
                    (2.0 * frame.r_t);
  const double qv = (p.y - frame.sink.y - p.z + frame.sink.z) * detail::kSqrt17 /
                    (2.0 * frame.r_t);
  const double qw = (p.z - frame.sink.z) * detail::kSqrt17 / frame.r_t;
  const auto fl = [](double x) { return static_cast<long long>(std::floor(x)); };
  return detail::argmin_center(p, frame, fl(qu) - span, fl(qu) + span + 1, fl(qv) - span,
                               fl(qv) + span + 1, fl(qw) - span, fl(qw) + span + 1);
}

}  // namespace uwsn
