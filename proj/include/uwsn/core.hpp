#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uwsn {

/// Cartesian position in meters.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Point3 operator+(const Point3& a, const Point3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Point3 operator-(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Point3 operator*(const Point3& a, double s) {
    return {a.x * s, a.y * s, a.z * s};
  }
  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

inline double squared_distance(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

inline double distance(const Point3& a, const Point3& b) {
  return std::sqrt(squared_distance(a, b));
}

/// Axis-aligned box; containment is inclusive on all faces.
struct Region {
  Point3 min_corner;
  Point3 max_corner;

  bool contains(const Point3& p) const {
    return p.x >= min_corner.x && p.x <= max_corner.x && p.y >= min_corner.y &&
           p.y <= max_corner.y && p.z >= min_corner.z && p.z <= max_corner.z;
  }

  Region inflated(double margin) const {
    return {{min_corner.x - margin, min_corner.y - margin, min_corner.z - margin},
            {max_corner.x + margin, max_corner.y + margin, max_corner.z + margin}};
  }

  Point3 center() const {
    return {(min_corner.x + max_corner.x) / 2.0, (min_corner.y + max_corner.y) / 2.0,
            (min_corner.z + max_corner.z) / 2.0};
  }

  bool valid() const {
    return max_corner.x >= min_corner.x && max_corner.y >= min_corner.y &&
           max_corner.z >= min_corner.z;
  }
};

/// The six cell models. CB/HP/RD/TO tessellate with the regular arrangement;
/// AltCB/AltHP are the staggered arrangements that exist only in the
/// nonhierarchical setting.
enum class CellShape { CB, HP, RD, TO, AltCB, AltHP };

inline constexpr std::array<CellShape, 4> kBaseShapes{CellShape::CB, CellShape::HP,
                                                      CellShape::RD, CellShape::TO};

inline constexpr std::array<CellShape, 6> kAllShapes{CellShape::CB,    CellShape::HP,
                                                     CellShape::RD,    CellShape::TO,
                                                     CellShape::AltCB, CellShape::AltHP};

inline bool is_base_shape(CellShape s) {
  return s == CellShape::CB || s == CellShape::HP || s == CellShape::RD ||
         s == CellShape::TO;
}

/// Base tessellation a staggered arrangement is built from.
inline CellShape base_of(CellShape s) {
  switch (s) {
    case CellShape::AltCB:
      return CellShape::CB;
    case CellShape::AltHP:
      return CellShape::HP;
    default:
      return s;
  }
}

inline std::string_view shape_name(CellShape s) {
  switch (s) {
    case CellShape::CB:
      return "CB";
    case CellShape::HP:
      return "HP";
    case CellShape::RD:
      return "RD";
    case CellShape::TO:
      return "TO";
    case CellShape::AltCB:
      return "Alt-CB";
    case CellShape::AltHP:
      return "Alt-HP";
  }
  return "?";
}

class UnsupportedShapeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown by exact algorithms when the input exceeds their intended scale.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature or search failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uwsn
