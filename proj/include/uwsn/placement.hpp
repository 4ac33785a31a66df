#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "uwsn/core.hpp"
#include "uwsn/geometry.hpp"

namespace uwsn {

struct BackboneParams {
  double r_bb = 0.0;  // backbone <-> backbone range
  double r_bs = 0.0;  // backbone <-> sensor range

  void validate() const {
    if (!(r_bb > 0.0) || !(r_bs > 0.0))
      throw std::invalid_argument("backbone ranges must be strictly positive");
  }
};

/// Connectivity-adjusted cell for one model. For CB/RD/TO the cell is fully
/// described by the circumsphere radius. For HP the prism is described by the
/// hexagon side and prism height; `radius` then holds the resulting
/// circumsphere radius sqrt(a^2 + h^2/4).
struct AdjustedCell {
  CellShape shape = CellShape::TO;
  double radius = 0.0;
  double hp_side = 0.0;
  double hp_height = 0.0;

  double volume() const {
    if (shape == CellShape::HP)
      return 1.5 * detail::kSqrt3 * hp_side * hp_side * hp_height;
    return cell_volume(shape, radius);
  }
};

/// Largest cell that keeps first-tier neighbors within r_bb and the
/// circumsphere within r_bs.
inline AdjustedCell adjusted_cell(CellShape shape, const BackboneParams& params) {
  params.validate();
  const double r_bb = params.r_bb;
  const double r_bs = params.r_bs;
  switch (shape) {
    case CellShape::CB:
      return {shape, std::min(detail::kSqrt3 * r_bb / 2.0, r_bs)};
    case CellShape::RD:
      return {shape, std::min(r_bb / detail::kSqrt2, r_bs)};
    case CellShape::TO:
      return {shape, std::min(r_bb * detail::kSqrt5 / 4.0, r_bs)};
    case CellShape::HP: {
      const double a = std::min(r_bb / detail::kSqrt3, r_bs * detail::kSqrt2 / detail::kSqrt3);
      const double h = std::min(2.0 * std::sqrt(r_bs * r_bs - a * a), r_bb);
      return {shape, std::sqrt(a * a + h * h / 4.0), a, h};
    }
    default:
      throw UnsupportedShapeError("adjusted cells exist for the base tessellations only");
  }
}

/// Spec-level alias: the adjusted "radius" of a model (full cell descriptor).
inline AdjustedCell adjusted_radius(CellShape shape, const BackboneParams& params) {
  return adjusted_cell(shape, params);
}

struct ModelChoice {
  CellShape model;
  AdjustedCell cell;
};

namespace detail {
// Crossovers of the adjusted cell volumes as functions of r_bb / r_bs:
// TO overtakes HP at cbrt(4), HP overtakes CB at cbrt(16/9).
inline const double kCrossoverToHp = std::cbrt(4.0);
inline const double kCrossoverHpCb = std::cbrt(16.0 / 9.0);
}  // namespace detail

/// Model with the highest adjusted cell volume at the given r_bb / r_bs.
/// The attached cell is computed at r_bs = 1, so lengths scale linearly.
inline ModelChoice select_best_model(double ratio) {
  if (!(ratio > 0.0)) throw std::invalid_argument("select_best_model: ratio must be > 0");
  CellShape shape = CellShape::CB;
  if (ratio >= detail::kCrossoverToHp)
    shape = CellShape::TO;
  else if (ratio >= detail::kCrossoverHpCb)
    shape = CellShape::HP;
  return {shape, adjusted_cell(shape, {ratio, 1.0})};
}

inline ModelChoice select_best_model(const BackboneParams& params) {
  params.validate();
  CellShape shape = select_best_model(params.r_bb / params.r_bs).model;
  return {shape, adjusted_cell(shape, params)};
}

/// One backbone node: lattice coordinates plus the mapped position.
struct LatticePoint {
  long long u = 0;
  long long v = 0;
  long long w = 0;
  Point3 position;
};

/// Strip spacings: in-strip spacing alpha, in-plane strip separation beta,
/// nearest cross-plane node distance gamma.
struct StripParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

struct Placement {
  std::optional<CellShape> shape;     // empty for strip placements
  double cell_radius = 0.0;           // circumsphere radius (lattices)
  std::optional<AdjustedCell> cell;   // full descriptor when built from one
  std::optional<StripParams> strip;   // set for strip placements
  Point3 reference;
  Region region;
  std::vector<LatticePoint> points;   // lexicographic in (w, v, u)

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

namespace detail {

// Integer range [lo, hi] such that lo*step + off may fall inside [min, max].
// One index of slack each side; exact containment is re-checked per point.
struct IndexRange {
  long long lo, hi;
};

inline IndexRange index_range(double min, double max, double off, double step) {
  return {static_cast<long long>(std::floor((min - off) / step)) - 1,
          static_cast<long long>(std::ceil((max - off) / step)) + 1};
}

template <typename MapFn>
inline void emit_lattice(const Region& region, double step_w, double step_v, double step_u,
                         const Point3& ref, MapFn&& map, std::vector<LatticePoint>& out) {
  const auto wr = index_range(region.min_corner.z, region.max_corner.z, ref.z, step_w);
  for (long long w = wr.lo; w <= wr.hi; ++w) {
    // v and u bounds depend on w for the sheared bases; map() reports the
    // offsets so the ranges stay tight. Requires y independent of u and x
    // independent of v.
    const Point3 origin = map(0, 0, w);
    const auto vr = index_range(region.min_corner.y, region.max_corner.y, origin.y, step_v);
    for (long long v = vr.lo; v <= vr.hi; ++v) {
      const Point3 row = map(0, v, w);
      const auto ur = index_range(region.min_corner.x, region.max_corner.x, row.x, step_u);
      for (long long u = ur.lo; u <= ur.hi; ++u) {
        const Point3 p = map(u, v, w);
        if (region.contains(p)) out.push_back({u, v, w, p});
      }
    }
  }
}

inline void sort_points(std::vector<LatticePoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.v != b.v) return a.v < b.v;
    return a.u < b.u;
  });
}

}  // namespace detail

/// Nodes of one model inside `region`. Points are emitted iff they fall
/// inside the region; callers wanting guaranteed coverage of the region
/// boundary pass a region inflated by one cell radius.
inline Placement generate_lattice(const AdjustedCell& cell, const Region& region,
                                  const Point3& reference) {
  if (!region.valid()) throw std::invalid_argument("generate_lattice: invalid region");
  if (!(cell.radius > 0.0)) throw std::invalid_argument("generate_lattice: radius must be > 0");

  Placement out;
  out.shape = cell.shape;
  out.cell_radius = cell.radius;
  out.cell = cell;
  out.reference = reference;
  out.region = region;

  const double R = cell.radius;
  switch (cell.shape) {
    case CellShape::CB: {
      const double s = 2.0 * R / detail::kSqrt3;
      detail::emit_lattice(
          region, s, s, s, reference,
          [&](long long u, long long v, long long w) {
            return Point3{reference.x + u * s, reference.y + v * s, reference.z + w * s};
          },
          out.points);
      break;
    }
    case CellShape::RD: {
      const double s = R / detail::kSqrt2;
      detail::emit_lattice(
          region, R, 2.0 * s, 2.0 * s, reference,
          [&](long long u, long long v, long long w) {
            return Point3{reference.x + (2 * u + w) * s, reference.y + (2 * v + w) * s,
                          reference.z + w * R};
          },
          out.points);
      break;
    }
    case CellShape::TO: {
      const double s = 2.0 * R / detail::kSqrt5;
      detail::emit_lattice(
          region, s, 2.0 * s, 2.0 * s, reference,
          [&](long long u, long long v, long long w) {
            return Point3{reference.x + (2 * u + w) * s, reference.y + (2 * v + w) * s,
                          reference.z + w * s};
          },
          out.points);
      break;
    }
    case CellShape::HP: {
      // Hexagon centers on a triangular lattice of spacing a*sqrt(3),
      // prisms stacked at height h. y couples to both u and v, so the v
      // bounds are taken per u.
      const double a = cell.hp_side;
      const double h = cell.hp_height;
      if (!(a > 0.0) || !(h > 0.0))
        throw std::invalid_argument("generate_lattice: HP cell needs side and height");
      const double t = a * detail::kSqrt3;
      const double ux = t * detail::kSqrt3 / 2.0;  // t * sin 60
      const double uy = t / 2.0;                   // t * cos 60
      const auto wr =
          detail::index_range(region.min_corner.z, region.max_corner.z, reference.z, h);
      const auto ur =
          detail::index_range(region.min_corner.x, region.max_corner.x, reference.x, ux);
      for (long long w = wr.lo; w <= wr.hi; ++w) {
        for (long long u = ur.lo; u <= ur.hi; ++u) {
          const auto vr = detail::index_range(region.min_corner.y, region.max_corner.y,
                                              reference.y + u * uy, t);
          for (long long v = vr.lo; v <= vr.hi; ++v) {
            const Point3 p{reference.x + u * ux, reference.y + u * uy + v * t,
                           reference.z + w * h};
            if (region.contains(p)) out.points.push_back({u, v, w, p});
          }
        }
      }
      break;
    }
    default:
      throw UnsupportedShapeError("generate_lattice: base tessellations only");
  }
  detail::sort_points(out.points);
  return out;
}

inline Placement generate_lattice(CellShape shape, double radius, const Region& region,
                                  const Point3& reference) {
  AdjustedCell cell{shape, radius};
  if (shape == CellShape::HP) {
    // Plain-radius HP means the volume-optimal prism: h = a*sqrt(2).
    cell.hp_side = radius * detail::kSqrt2 / detail::kSqrt3;
    cell.hp_height = radius * 2.0 / detail::kSqrt3;
  }
  return generate_lattice(cell, region, reference);
}

inline StripParams strip_params(const BackboneParams& params) {
  params.validate();
  const double alpha = std::min(params.r_bb, 4.0 * params.r_bs / detail::kSqrt5);
  const double beta =
      2.0 * std::sqrt(params.r_bs * params.r_bs - (alpha / 4.0) * (alpha / 4.0));
  const double gamma = std::sqrt(beta * beta / 2.0 + alpha * alpha / 4.0);
  return {alpha, beta, gamma};
}

/// Strip-based placement: strips along x with node spacing alpha, strips
/// beta apart in y, planes beta/2 apart in z. Odd planes are shifted by
/// (alpha/2, beta/2) so each strip sits between the two nearest strips of the
/// neighboring planes; the closest cross-plane node pair is then gamma apart.
inline Placement generate_strip_placement(const BackboneParams& params, const Region& region,
                                          const Point3& reference) {
  if (!region.valid())
    throw std::invalid_argument("generate_strip_placement: invalid region");
  const StripParams sp = strip_params(params);

  Placement out;
  out.strip = sp;
  out.reference = reference;
  out.region = region;

  const double plane_dz = sp.beta / 2.0;
  detail::emit_lattice(
      region, plane_dz, sp.beta, sp.alpha, reference,
      [&](long long u, long long v, long long w) {
        const bool odd = (w % 2) != 0;
        const double ox = odd ? sp.alpha / 2.0 : 0.0;
        const double oy = odd ? sp.beta / 2.0 : 0.0;
        return Point3{reference.x + u * sp.alpha + ox, reference.y + v * sp.beta + oy,
                      reference.z + w * plane_dz};
      },
      out.points);
  detail::sort_points(out.points);
  return out;
}

/// Auxiliary nodes that give a strip placement 1-connectivity when neither
/// beta nor gamma is within r_bb: one chain between each pair of adjacent
/// strips in a plane and one chain between each pair of adjacent planes,
/// routed through the nodes nearest the region center. Chain spacing never
/// exceeds r_bb.
inline std::vector<Point3> strip_auxiliary_nodes(const Placement& placement, double r_bb) {
  if (!placement.strip)
    throw std::invalid_argument("strip_auxiliary_nodes: placement is not strip-based");
  if (!(r_bb > 0.0)) throw std::invalid_argument("strip_auxiliary_nodes: r_bb must be > 0");

  const StripParams sp = *placement.strip;
  if (sp.beta <= r_bb || sp.gamma <= r_bb) return {};

  const Point3 center = placement.region.center();
  std::vector<Point3> aux;

  auto chain = [&](const Point3& a, const Point3& b) {
    const double d = distance(a, b);
    const auto segments = static_cast<long long>(std::ceil(d / r_bb));
    for (long long i = 1; i < segments; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(segments);
      aux.push_back({a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t, a.z + (b.z - a.z) * t});
    }
  };

  // Node nearest the region center for every (plane, strip) actually present.
  struct StripKey {
    long long w, v;
    auto operator<=>(const StripKey&) const = default;
  };
  std::vector<std::pair<StripKey, const LatticePoint*>> strips;
  for (const auto& lp : placement.points) {
    StripKey key{lp.w, lp.v};
    auto it = std::find_if(strips.begin(), strips.end(),
                           [&](const auto& e) { return e.first == key; });
    if (it == strips.end()) {
      strips.emplace_back(key, &lp);
    } else if (squared_distance(lp.position, center) <
               squared_distance(it->second->position, center)) {
      it->second = &lp;
    }
  }

  auto find_strip = [&](long long w, long long v) -> const LatticePoint* {
    auto it = std::find_if(strips.begin(), strips.end(), [&](const auto& e) {
      return e.first == StripKey{w, v};
    });
    return it == strips.end() ? nullptr : it->second;
  };

  for (const auto& [key, anchor] : strips) {
    // Adjacent strip in the same plane.
    if (const LatticePoint* next = find_strip(key.w, key.v + 1)) {
      const Point3 a = anchor->position;
      chain(a, {a.x, next->position.y, a.z});
    }
    // Bridge to the plane above through the staggered nearest strip. The
    // counterpart at (+alpha/2, +beta/2, +beta/2) relative to some node of
    // this strip exists whenever the region extends that far; search the
    // actual points so clipped boundaries stay safe.
    const LatticePoint* above = find_strip(key.w + 1, key.v);
    if (!above) above = find_strip(key.w + 1, key.v - 1);
    if (above) {
      const LatticePoint* best = nullptr;
      for (const auto& lp : placement.points) {
        if (lp.w != key.w + 1) continue;
        if (!best || squared_distance(lp.position, anchor->position) <
                         squared_distance(best->position, anchor->position))
          best = &lp;
      }
      if (best) chain(anchor->position, best->position);
    }
  }
  return aux;
}

}  // namespace uwsn
