#pragma once

#include <cmath>
#include <numbers>

#include "uwsn/core.hpp"

namespace uwsn {

/// Closed-form constants of one space-filling cell, parameterized by the
/// circumsphere radius R. volume = volume_coeff * R^3, and
/// volumetric_quotient = cell volume / circumsphere volume.
struct ShapeConstants {
  double volumetric_quotient = 0.0;
  double volume_coeff = 0.0;
  double connectivity_threshold = 0.0;  // minimum r_bb / r_bs for full first-tier links
};

namespace detail {
inline const double kSqrt2 = std::sqrt(2.0);
inline const double kSqrt3 = std::sqrt(3.0);
inline const double kSqrt5 = std::sqrt(5.0);
}  // namespace detail

/// volume(R) / ((4/3) pi R^3) for the four base tessellations.
inline double volumetric_quotient(CellShape shape) {
  using std::numbers::pi;
  switch (shape) {
    case CellShape::CB:
      return 2.0 / (detail::kSqrt3 * pi);
    case CellShape::HP:
    case CellShape::RD:
      return 3.0 / (2.0 * pi);
    case CellShape::TO:
      return 24.0 / (5.0 * detail::kSqrt5 * pi);
    default:
      throw UnsupportedShapeError(
          "volumetric quotient is defined for the base tessellations only");
  }
}

inline double volume_coeff(CellShape shape) {
  switch (shape) {
    case CellShape::CB:
      return 8.0 / (3.0 * detail::kSqrt3);
    case CellShape::HP:
    case CellShape::RD:
      return 2.0;
    case CellShape::TO:
      return 32.0 / (5.0 * detail::kSqrt5);
    default:
      throw UnsupportedShapeError("cell volume is defined for the base tessellations only");
  }
}

/// Cell volume at circumsphere radius R.
inline double cell_volume(CellShape shape, double radius) {
  if (radius < 0.0) throw std::invalid_argument("cell_volume: negative radius");
  return volume_coeff(shape) * radius * radius * radius;
}

/// Smallest r_bb / r_bs that keeps every first-tier neighbor pair within
/// communication range when cells are placed at circumradius r_bs.
inline double connectivity_threshold(CellShape shape) {
  switch (shape) {
    case CellShape::CB:
      return 2.0 / detail::kSqrt3;
    case CellShape::HP:
    case CellShape::RD:
      return detail::kSqrt2;
    case CellShape::TO:
      return 4.0 / detail::kSqrt5;
    default:
      throw UnsupportedShapeError(
          "connectivity threshold is defined for the base tessellations only");
  }
}

inline ShapeConstants shape_constants(CellShape shape) {
  return {volumetric_quotient(shape), volume_coeff(shape), connectivity_threshold(shape)};
}

}  // namespace uwsn
