#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>

#include "uwsn/core.hpp"
#include "uwsn/geometry.hpp"

namespace uwsn {

/// Lattice-coordinate differences between two co-channel cell centers.
struct ClusterIndex {
  long long i = 0;
  long long j = 0;
  long long k = 0;

  bool is_zero() const { return i == 0 && j == 0 && k == 0; }
};

/// Underwater path-loss parameters: A(d, f) = A0 * d^sf * a(f)^d with a
/// frequency band [f_min, f_min + B0]. Distances are in kilometers inside
/// this module (the absorption coefficient is per km).
struct AcousticParams {
  double f_min_hz = 10e3;
  double bandwidth_hz = 7e3;
  double spreading_factor = 1.5;  // 1 = cylindrical, 2 = spherical
  double normalizing_const = 1.0;
  double tx_power_w = 1.0;

  void validate() const {
    if (!(f_min_hz > 0.0) || !(bandwidth_hz > 0.0))
      throw std::invalid_argument("acoustic band must be positive");
    if (!(spreading_factor >= 1.0 && spreading_factor <= 2.0))
      throw std::invalid_argument("spreading factor must lie in [1, 2]");
    if (!(normalizing_const > 0.0) || !(tx_power_w > 0.0))
      throw std::invalid_argument("A0 and transmit power must be positive");
  }
};

struct UserConstraints {
  double user_density = 0.0;        // users per unit volume
  double total_bandwidth_hz = 0.0;  // system bandwidth B
  double min_user_bandwidth_hz = 0.0;
  double min_sir = 0.0;

  void validate() const {
    if (!(user_density > 0.0) || !(total_bandwidth_hz > 0.0) ||
        !(min_user_bandwidth_hz > 0.0) || !(min_sir >= 0.0))
      throw std::invalid_argument("user constraints must be positive");
  }
};

namespace detail {
inline double cluster_quadratic(CellShape shape, const ClusterIndex& c) {
  const double i = static_cast<double>(c.i);
  const double j = static_cast<double>(c.j);
  const double k = static_cast<double>(c.k);
  switch (shape) {
    case CellShape::RD:
      return i * i + j * j + k * k + i * j + j * k + k * i;
    case CellShape::CB:
      return i * i + j * j + k * k;
    case CellShape::TO:
      return i * i + j * j + i * k + j * k + 0.75 * k * k;
    case CellShape::HP:
      return i * i + j * j + (2.0 / 3.0) * k * k + i * j;
    default:
      throw UnsupportedShapeError("cluster coordinates: base tessellations only");
  }
}

inline double lattice_unit(CellShape shape) {
  switch (shape) {
    case CellShape::RD:
    case CellShape::HP:
      return kSqrt2;
    case CellShape::CB:
      return 2.0 / kSqrt3;
    case CellShape::TO:
      return 4.0 / kSqrt5;
    default:
      throw UnsupportedShapeError("lattice unit: base tessellations only");
  }
}
}  // namespace detail

/// Distance between two cell centers whose lattice coordinates differ by
/// `idx`, for cells of radius R.
inline double reuse_distance(CellShape shape, const ClusterIndex& idx, double radius) {
  if (idx.is_zero()) throw std::invalid_argument("reuse_distance: index must be nonzero");
  if (!(radius > 0.0)) throw std::invalid_argument("reuse_distance: radius must be > 0");
  return detail::lattice_unit(shape) * radius * std::sqrt(detail::cluster_quadratic(shape, idx));
}

/// Cells per cluster for a co-channel separation of `idx`. Only separations
/// whose quadratic form has an integer 3/2 power tile clusters exactly
/// (1, 8, 27, ...); anything else is reported as invalid rather than rounded.
struct ClusterSize {
  bool valid = false;
  long long count = 0;
  double raw = 0.0;
};

inline ClusterSize cluster_size(CellShape shape, const ClusterIndex& idx) {
  if (idx.is_zero()) throw std::invalid_argument("cluster_size: index must be nonzero");
  if (shape == CellShape::HP)
    throw UnsupportedShapeError("cluster_size: defined for CB, RD and TO");
  const double raw = std::pow(detail::cluster_quadratic(shape, idx), 1.5);
  const double nearest = std::round(raw);
  if (std::abs(raw - nearest) <= 1e-9 && nearest >= 1.0)
    return {true, static_cast<long long>(nearest), raw};
  return {false, 0, raw};
}

/// Co-channel reuse ratio D/R for a valid cluster size N.
inline double reuse_ratio(CellShape shape, long long cluster_count) {
  if (cluster_count < 1) throw std::invalid_argument("reuse_ratio: N must be >= 1");
  return detail::lattice_unit(shape) * std::cbrt(static_cast<double>(cluster_count));
}

/// Radio (power-law path loss) signal-to-interference ratio
///   SIR = (1 / co_channels) * (D/R)^path_loss_exponent.
/// RD has 12 equidistant co-channel cells; for CB and TO no single
/// multiplicity is canonical, so it must be supplied explicitly.
inline double radio_sir(CellShape shape, long long cluster_count, double path_loss_exponent,
                        std::optional<int> co_channels = std::nullopt) {
  if (cluster_count < 1) throw std::invalid_argument("radio_sir: N must be >= 1");
  int channels = 0;
  if (shape == CellShape::RD) {
    channels = co_channels.value_or(12);
  } else if (shape == CellShape::CB || shape == CellShape::TO) {
    if (!co_channels)
      throw UnsupportedShapeError("radio_sir: co-channel count required for CB/TO");
    channels = *co_channels;
  } else {
    throw UnsupportedShapeError("radio_sir: defined for RD, CB and TO");
  }
  if (channels < 1) throw std::invalid_argument("radio_sir: co-channel count must be >= 1");
  return std::pow(reuse_ratio(shape, cluster_count), path_loss_exponent) /
         static_cast<double>(channels);
}

/// Thorp's empirical absorption, dB per km, frequency in Hz.
inline double thorp_absorption_db(double f_hz) {
  if (!(f_hz > 0.0)) throw std::invalid_argument("absorption: frequency must be > 0");
  const double f = f_hz / 1000.0;  // kHz
  const double f2 = f * f;
  return 0.11 * f2 / (1.0 + f2) + 44.0 * f2 / (4100.0 + f2) + 2.75e-4 * f2 + 0.003;
}

/// Absorption model: dB of loss per km at a given frequency in Hz.
using AbsorptionDb = std::function<double(double)>;

inline AbsorptionDb thorp_model() {
  return [](double f_hz) { return thorp_absorption_db(f_hz); };
}

/// a(f) == 1: geometric spreading only.
inline AbsorptionDb no_absorption() {
  return [](double) { return 0.0; };
}

/// Linear absorption factor a(f) per km; a(f)^d multiplies the path loss.
inline double absorption_coeff(double f_hz) {
  return std::pow(10.0, thorp_absorption_db(f_hz) / 10.0);
}

namespace detail {

/// Composite Simpson refined by interval doubling to a relative tolerance.
template <typename F>
inline double integrate(F&& f, double lo, double hi, double rel_tol, int max_intervals) {
  auto simpson = [&](int n) {
    const double h = (hi - lo) / n;
    double acc = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) acc += f(lo + i * h) * ((i % 2) ? 4.0 : 2.0);
    return acc * h / 3.0;
  };
  int n = 16;
  double prev = simpson(n);
  while (n < max_intervals) {
    n *= 2;
    const double cur = simpson(n);
    if (std::abs(cur - prev) <= rel_tol * std::abs(cur)) return cur;
    prev = cur;
  }
  throw NumericError("quadrature failed to reach tolerance at " + std::to_string(n) +
                     " intervals");
}

/// Integral over the band of a(f)^(-d), d in km.
inline double band_absorption_integral(double d_km, const AcousticParams& params,
                                       const AbsorptionDb& absorption) {
  return integrate(
      [&](double f_hz) { return std::pow(10.0, -absorption(f_hz) * d_km / 10.0); },
      params.f_min_hz, params.f_min_hz + params.bandwidth_hz, 1e-8, 1 << 22);
}

}  // namespace detail

/// Received signal power at distance d (km) for a flat transmit spectrum:
///   P(d) = integral over the band of (P_t / B0) / (A0 d^sf a(f)^d) df.
inline double received_power(double d_km, const AcousticParams& params,
                             const AbsorptionDb& absorption = thorp_model()) {
  params.validate();
  if (!(d_km > 0.0)) throw std::invalid_argument("received_power: distance must be > 0");
  const double spectral = params.tx_power_w / params.bandwidth_hz;
  const double spreading = std::pow(d_km, -params.spreading_factor);
  return spectral * spreading / params.normalizing_const *
         detail::band_absorption_integral(d_km, params, absorption);
}

/// Acoustic SIR for a rhombic-dodecahedron partition with 12 co-channel
/// interferers at D = sqrt(2) N^(1/3) R:
///   SIR = (1/12) (D/R)^sf * [int a^-R df] / [int a^-D df].
/// A0 and the transmit power cancel.
inline double acoustic_sir(double radius_km, long long cluster_count,
                           const AcousticParams& params,
                           const AbsorptionDb& absorption = thorp_model(),
                           CellShape shape = CellShape::RD) {
  params.validate();
  if (shape != CellShape::RD)
    throw UnsupportedShapeError("acoustic_sir: analysis is for the RD partition");
  if (!(radius_km > 0.0)) throw std::invalid_argument("acoustic_sir: radius must be > 0");
  if (cluster_count < 1) throw std::invalid_argument("acoustic_sir: N must be >= 1");
  const double ratio = reuse_ratio(CellShape::RD, cluster_count);
  const double d_km = ratio * radius_km;
  const double signal = detail::band_absorption_integral(radius_km, params, absorption);
  const double interference = detail::band_absorption_integral(d_km, params, absorption);
  return std::pow(ratio, params.spreading_factor) / 12.0 * signal / interference;
}

/// Cell radii admitted by the bandwidth constraints alone:
///   at least one user per cell        => R >= (2 rho)^(-1/3)
///   per-user bandwidth W >= W0        => R <= (2 rho)^(-1/3) (B / (N W0))^(1/3)
struct RadiusInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = false;
};

inline RadiusInterval feasible_radius_range(const UserConstraints& constraints,
                                            long long cluster_count) {
  constraints.validate();
  if (cluster_count < 1) throw std::invalid_argument("feasible_radius_range: N >= 1");
  const double lo = 1.0 / std::cbrt(2.0 * constraints.user_density);
  const double share = constraints.total_bandwidth_hz /
                       (static_cast<double>(cluster_count) * constraints.min_user_bandwidth_hz);
  if (share < 1.0) return {lo, lo, true};
  return {lo, lo * std::cbrt(share), false};
}

enum class Feasibility { Ok, InfeasibleBandwidth, InfeasibleSir };

struct MaxUsersResult {
  Feasibility status = Feasibility::Ok;
  double radius_km = 0.0;
};

/// Largest radius in the feasible interval that also meets the SIR floor;
/// users per cell (2 R^3 rho) grow with R, so the largest admissible R wins.
/// The direction of SIR monotonicity in R is probed numerically: under
/// absorption the interferer path D = sqrt(2) N^(1/3) R lengthens faster than
/// the signal path, so SIR typically increases with R. Non-monotone profiles
/// fall back to a dense scan.
inline MaxUsersResult max_users_radius(const UserConstraints& constraints,
                                       long long cluster_count, const AcousticParams& params,
                                       const AbsorptionDb& absorption = thorp_model()) {
  const RadiusInterval range = feasible_radius_range(constraints, cluster_count);
  if (range.empty) return {Feasibility::InfeasibleBandwidth, 0.0};

  auto sir = [&](double r) { return acoustic_sir(r, cluster_count, params, absorption); };
  const double sir_floor = constraints.min_sir;
  if (sir_floor <= 0.0) return {Feasibility::Ok, range.hi};
  if (sir(range.hi) >= sir_floor) return {Feasibility::Ok, range.hi};
  if (range.hi == range.lo) return {Feasibility::InfeasibleSir, 0.0};

  // Probe monotonicity on a coarse grid.
  constexpr int kProbes = 17;
  double prev = sir(range.lo);
  bool nonincreasing = true, nondecreasing = true;
  for (int i = 1; i < kProbes; ++i) {
    const double r = range.lo + (range.hi - range.lo) * i / (kProbes - 1);
    const double cur = sir(r);
    if (cur > prev) nonincreasing = false;
    if (cur < prev) nondecreasing = false;
    prev = cur;
  }

  if (nondecreasing) {
    // SIR grows with R and already fails at range.hi.
    return {Feasibility::InfeasibleSir, 0.0};
  }
  if (nonincreasing) {
    if (sir(range.lo) < sir_floor) return {Feasibility::InfeasibleSir, 0.0};
    // Feasible set is [lo, r*]; bisect for the crossing.
    double lo = range.lo, hi = range.hi;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-12 * range.hi; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (sir(mid) >= sir_floor ? lo : hi) = mid;
    }
    return {Feasibility::Ok, lo};
  }

  // Non-monotone: dense scan from above for the largest admissible radius.
  constexpr int kScan = 4096;
  for (int i = kScan; i >= 0; --i) {
    const double r = range.lo + (range.hi - range.lo) * i / kScan;
    if (sir(r) >= sir_floor) return {Feasibility::Ok, r};
  }
  return {Feasibility::InfeasibleSir, 0.0};
}

}  // namespace uwsn
