#pragma once

#include <array>
#include <cmath>

#include "uwsn/core.hpp"
#include "uwsn/geometry.hpp"

namespace uwsn {

/// Transmissions needed to carry a packet over distance D with per-hop range
/// r_bb (source transmission included).
inline long long hop_count(double total_distance, double r_bb) {
  if (total_distance < 0.0) throw std::invalid_argument("hop_count: negative distance");
  if (!(r_bb > 0.0)) throw std::invalid_argument("hop_count: r_bb must be > 0");
  return static_cast<long long>(std::ceil(total_distance / r_bb));
}

/// Continuous approximation D / r_bb used by the ratio derivations.
inline double hop_count_continuous(double total_distance, double r_bb) {
  if (total_distance < 0.0) throw std::invalid_argument("hop_count: negative distance");
  if (!(r_bb > 0.0)) throw std::invalid_argument("hop_count: r_bb must be > 0");
  return total_distance / r_bb;
}

/// Per-packet energy ratio of `model` vs TO at equal cell circumradius.
/// Per-hop power scales as range^exponent and hop count as 1/range, so the
/// end-to-end ratio is (spacing / spacing_TO)^(exponent - 1). The backbone
/// spacing of a model is its connectivity threshold times the radius.
inline double per_packet_ratio(CellShape model, double exponent = 2.0) {
  if (!is_base_shape(model))
    throw UnsupportedShapeError("per_packet_ratio: base tessellations only");
  const double spacing = connectivity_threshold(model);
  const double spacing_to = connectivity_threshold(CellShape::TO);
  return std::pow(spacing / spacing_to, exponent - 1.0);
}

/// Cells (hence aggregated packets) of `model` per cell of TO at equal
/// circumradius: the inverse volumetric-quotient ratio.
inline double cell_count_ratio(CellShape model) {
  if (!is_base_shape(model))
    throw UnsupportedShapeError("cell_count_ratio: base tessellations only");
  return volumetric_quotient(CellShape::TO) / volumetric_quotient(model);
}

/// Whole-network energy ratio vs TO under one aggregated packet per cell.
inline double network_ratio(CellShape model, double exponent = 2.0) {
  return per_packet_ratio(model, exponent) * cell_count_ratio(model);
}

struct EnergyReport {
  CellShape model;
  double per_packet_ratio;
  double network_ratio;
};

inline std::array<EnergyReport, 4> energy_table(double exponent = 2.0) {
  std::array<EnergyReport, 4> rows{};
  for (std::size_t i = 0; i < kBaseShapes.size(); ++i) {
    const CellShape m = kBaseShapes[i];
    rows[i] = {m, per_packet_ratio(m, exponent), network_ratio(m, exponent)};
  }
  return rows;
}

}  // namespace uwsn
