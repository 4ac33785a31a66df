// Acceptance suite: prints one PASS/FAIL line per criterion and exits with
// the number of failed criteria. Desk scale: the whole run stays well under
// a minute on one core.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "uwsn/uwsn.hpp"

using namespace uwsn;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& note) {
    if (!condition) {
      ok = false;
      notes.push_back(note);
    }
  }
  void info(const std::string& note) { notes.push_back(note); }
};

std::string fmt(double v, int decimals = 7) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

/// A computed value reproduces a published decimal when it sits within the
/// stated tolerance or rounds to exactly the published digits.
bool reproduces(double value, double published, double tol, int decimals) {
  if (std::abs(value - published) <= tol + 1e-12) return true;
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale == published;
}

// ---------------------------------------------------------------- criterion 1
void criterion_quotients(Criterion& c) {
  struct Row {
    CellShape shape;
    double published;
    int decimals;
  };
  for (const Row& row : {Row{CellShape::CB, 0.36755, 5}, Row{CellShape::HP, 0.477, 3},
                         Row{CellShape::RD, 0.477, 3}, Row{CellShape::TO, 0.68329, 5}}) {
    const double q = volumetric_quotient(row.shape);
    c.require(reproduces(q, row.published, 1e-4, row.decimals),
              std::string(shape_name(row.shape)) + ": computed " + fmt(q) + " vs published " +
                  fmt(row.published, row.decimals));
  }
}

// ---------------------------------------------------------------- criterion 2
void criterion_crossovers(Criterion& c) {
  const auto volume_at = [](CellShape s, double ratio) {
    return adjusted_cell(s, {ratio, 1.0}).volume();
  };
  const auto bisect = [&](CellShape a, CellShape b, double lo, double hi) {
    auto sign = [&](double t) { return volume_at(a, t) - volume_at(b, t) > 0.0; };
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      (sign(mid) == sign(hi) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  };

  const double to_hp = bisect(CellShape::TO, CellShape::HP, 1.5, 1.7);
  c.require(std::abs(to_hp - 1.587401) <= 1e-4,
            "TO/HP crossover located at " + fmt(to_hp) + ", expected 1.587401");
  const double hp_cb = bisect(CellShape::HP, CellShape::CB, 1.15, 1.3);
  c.require(std::abs(hp_cb - 1.211414) <= 1e-4,
            "HP/CB crossover located at " + fmt(hp_cb) + ", expected 1.211414");
}

// ---------------------------------------------------------------- criterion 3
void criterion_degree_regimes(Criterion& c) {
  const double r_bs = 1.0;
  const Region region{{-8.51, -8.52, -8.53}, {8.51, 8.52, 8.53}};
  const auto lattice = generate_lattice(CellShape::TO, r_bs, region, {0, 0, 0});

  const auto interior_degree = [&](double ratio) {
    return build_backbone_graph(lattice, ratio * r_bs).interior_degree_mode;
  };

  c.require(interior_degree(1.6) == 8, "degree at ratio 1.6 is not 8");
  c.require(interior_degree(1.75) == 8, "degree at ratio 1.75 is not 8");
  c.require(interior_degree(1.8) == 14, "degree at ratio 1.8 is not 14");
  c.require(interior_degree(2.0) == 14, "degree at ratio 2.0 is not 14");

  const auto locate_jump = [&](int target, double lo, double hi) {
    for (int i = 0; i < 24; ++i) {
      const double mid = 0.5 * (lo + hi);
      (interior_degree(mid) >= target ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  };
  const double jump8 = locate_jump(8, 1.4, 1.7);
  c.require(std::abs(jump8 - 1.549193) <= 1e-4,
            "jump to degree 8 located at " + fmt(jump8) + ", expected 1.549193");
  const double jump14 = locate_jump(14, 1.7, 1.9);
  c.require(std::abs(jump14 - 1.7889) <= 1e-4,
            "jump to degree 14 located at " + fmt(jump14) + ", expected 1.7889");
}

// ---------------------------------------------------------------- criterion 4
void criterion_coverage(Criterion& c) {
  const double r_bs = 1.0;
  const Region interior{{0.013, 0.017, 0.019}, {2.013, 2.017, 2.019}};
  for (int i = 0; i < 20; ++i) {
    const double ratio = 1.0 + 1.5 * i / 19.0;
    for (CellShape s : kBaseShapes) {
      const auto cell = adjusted_cell(s, {ratio * r_bs, r_bs});
      const auto lattice =
          generate_lattice(cell, interior.inflated(cell.radius), {0, 0, 0});
      const auto report = verify_coverage(lattice, r_bs, interior, r_bs / 20.0);
      if (report.coverage_fraction != 1.0) {
        c.require(false, std::string(shape_name(s)) + " at ratio " + fmt(ratio, 3) +
                             ": coverage " + fmt(report.coverage_fraction));
        return;
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 5
void criterion_energy_tables(Criterion& c) {
  struct Row {
    CellShape shape;
    double table1, table2;
  };
  for (const Row& row : {Row{CellShape::CB, 0.64548, 1.1999}, Row{CellShape::HP, 0.79054, 1.1325},
                         Row{CellShape::RD, 0.79054, 1.1325}, Row{CellShape::TO, 1.0, 1.0}}) {
    const double pp = per_packet_ratio(row.shape);
    const double net = network_ratio(row.shape);
    c.require(reproduces(pp, row.table1, 1e-4, 5),
              std::string(shape_name(row.shape)) + " per packet: computed " + fmt(pp) +
                  " vs published " + fmt(row.table1, 5));
    c.require(reproduces(net, row.table2, 1e-4, 4),
              std::string(shape_name(row.shape)) + " network: computed " + fmt(net) +
                  " vs published " + fmt(row.table2, 4) + " (diff " +
                  fmt(std::abs(net - row.table2), 7) + ")");
  }
}

// ---------------------------------------------------------------- criterion 6
void criterion_partition_constants(Criterion& c) {
  struct Row {
    CellShape shape;
    double radius, sensing, lifetime;
  };
  for (const Row& row :
       {Row{CellShape::CB, 0.25, 0.5, 0.42154}, Row{CellShape::AltCB, 0.288675, 0.577, 0.649},
        Row{CellShape::HP, 0.26726, 0.535, 0.669},
        Row{CellShape::AltHP, 0.297, 0.594, 0.9186}, Row{CellShape::RD, 0.25, 0.5, 0.5476},
        Row{CellShape::TO, 0.271163, 0.542, 1.0}}) {
    const std::string name(shape_name(row.shape));
    c.require(std::abs(max_cell_radius(row.shape) - row.radius) <= 1e-3,
              name + " max radius " + fmt(max_cell_radius(row.shape)));
    c.require(std::abs(min_sensing_range(row.shape) - row.sensing) <= 1e-3,
              name + " sensing range " + fmt(min_sensing_range(row.shape)));
    c.require(std::abs(lifetime_ratio(row.shape) - row.lifetime) <= 1e-3,
              name + " lifetime " + fmt(lifetime_ratio(row.shape)));
  }
}

// ---------------------------------------------------------------- criterion 7
void criterion_cell_id(Criterion& c) {
  const PartitionFrame frame{{0, 0, 0}, 1.0};
  const auto start = std::chrono::steady_clock::now();

  Rng rng(0x5eedULL);
  const int trials = 1000000;
  int mismatches = 0;
  int baseline_mismatches = 0;
  for (int i = 0; i < trials; ++i) {
    const Point3 p{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const CellId exact = locate_cell_exhaustive(p, frame);
    if (!(locate_cell(p, frame) == exact)) ++mismatches;
    if (!(locate_cell_rounded(p, frame) == exact)) ++baseline_mismatches;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double rate = static_cast<double>(baseline_mismatches) / trials;

  c.require(mismatches == 0,
            "floor/ceil rule disagreed with the oracle " + std::to_string(mismatches) +
                " times in 1e6");
  c.require(rate >= 0.20 && rate <= 0.30,
            "rounding-baseline mismatch rate " + fmt(rate, 5) + " outside [0.20, 0.30]");
  c.require(seconds <= 10.0, "runtime " + fmt(seconds, 2) + " s exceeds 10 s");
  c.info("baseline mismatch rate " + fmt(rate, 4) + ", " + fmt(seconds, 1) + " s");
}

// ---------------------------------------------------------------- criterion 8
void criterion_kcoverage_tables(Criterion& c) {
  const double published_2d[] = {1.0, 0.9616325, 0.8688446, 0.7192460, 0.9639949};
  for (int k = 1; k <= 5; ++k) {
    const double p = coverage_probability_tabulated(k, 2);
    c.require(reproduces(p, published_2d[k - 1], 5e-7, 7),
              "2D k=" + std::to_string(k) + ": computed " + fmt(p) + " vs published " +
                  fmt(published_2d[k - 1]));
  }
  const double published_3d[] = {1.0, 0.9999, 0.9994, 0.9971};
  for (int k = 1; k <= 4; ++k) {
    const double p = coverage_probability_tabulated(k, 3);
    c.require(reproduces(p, published_3d[k - 1], 5e-5, 4),
              "3D k=" + std::to_string(k) + ": computed " + fmt(p) + " vs published " +
                  fmt(published_3d[k - 1], 4) + " (diff " +
                  fmt(std::abs(p - published_3d[k - 1]), 7) + ")");
  }

  const double overhead_2d[] = {4.0, 2.0, 4.0 / 3.0, 1.0, 8.0 / 5.0};
  for (int k = 1; k <= 5; ++k)
    c.require(overhead_vs_optimal(k, 2) == overhead_2d[k - 1],
              "2D overhead at k=" + std::to_string(k));
  const double overhead_3d[] = {8.0, 4.0, 8.0 / 3.0, 2.0};
  for (int k = 1; k <= 4; ++k)
    c.require(overhead_vs_optimal(k, 3) == overhead_3d[k - 1],
              "3D overhead at k=" + std::to_string(k));
}

// ---------------------------------------------------------------- criterion 9
void criterion_poisson_sum(Criterion& c) {
  Rng rng(20260809);
  for (int i = 0; i < 100; ++i) {
    const double l1 = rng.uniform(0.0, 10.0);
    const double l2 = rng.uniform(0.0, 10.0);
    const int k = static_cast<int>(rng.below(30));
    const auto check = poisson_sum_distribution(l1, l2, k);
    if (std::abs(check.direct - check.convolution) > 1e-12) {
      c.require(false, "divergence at l1=" + fmt(l1, 4) + " l2=" + fmt(l2, 4) +
                           " k=" + std::to_string(k));
      return;
    }
  }
}

// --------------------------------------------------------------- criterion 10
void criterion_monte_carlo(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const double r_s = 1.0;
  const double cell_volume = 32.0 / (5.0 * std::sqrt(5.0)) / 8.0;  // radius r_s / 2
  const double estimate = monte_carlo_k_coverage(1.0 / cell_volume, r_s, 4, 1000000, 42);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  c.require(std::abs(estimate - 0.9971) <= 0.002,
            "empirical probability " + fmt(estimate) + " vs 0.9971 +- 0.002");
  c.require(seconds <= 30.0, "runtime " + fmt(seconds, 2) + " s exceeds 30 s");
  c.info("estimate " + fmt(estimate) + ", " + fmt(seconds, 1) + " s");
}

// --------------------------------------------------------------- criterion 11
void criterion_routing(Criterion& c) {
  Field field;
  for (long long u = 0; u <= 4; ++u)
    for (long long v = 0; v <= 4; ++v)
      for (long long w = 0; w <= 4; ++w) field.add({{u, v, w}, true, 0, 1.0});

  RoutePolicy policy;
  long long delivered = 0, total = 0;
  for (long long su = 0; su <= 4; ++su)
    for (long long sv = 0; sv <= 4; ++sv)
      for (long long sw = 0; sw <= 4; ++sw)
        for (long long du = 0; du <= 4; ++du)
          for (long long dv = 0; dv <= 4; ++dv)
            for (long long dw = 0; dw <= 4; ++dw) {
              const CellId src{su, sv, sw}, dest{du, dv, dw};
              ++total;
              const auto r = route(src, dest, field, policy);
              if (r.outcome != RouteOutcome::Delivered) continue;
              long long prev = id_metric(src, dest);
              bool monotone = true;
              for (std::size_t i = 1; i < r.path.size(); ++i) {
                const long long cur = id_metric(r.path[i], dest);
                monotone = monotone && cur < prev;
                prev = cur;
              }
              if (monotone) ++delivered;
            }
  c.require(delivered == total, "delivered with strict descent " + std::to_string(delivered) +
                                    "/" + std::to_string(total));

  // Constructed hole: greedy stalls, BFS still finds a detour.
  Field holed;
  for (long long u = -4; u <= 4; ++u)
    for (long long v = -6; v <= 6; ++v)
      for (long long w = -6; w <= 6; ++w) holed.add({{u, v, w}, true, 0, 1.0});
  for (long long v = -5; v <= 5; ++v)
    for (long long w = -5; w <= 5; ++w)
      if (auto* n = holed.find({0, v, w})) n->alive = false;

  const auto res = route({-3, 0, 0}, {3, 0, 0}, holed, policy);
  c.require(res.outcome == RouteOutcome::DeadEnd, "hole field did not dead-end");
  c.require(bfs_oracle({-3, 0, 0}, {3, 0, 0}, holed).has_value(),
            "hole field should remain reachable");
}

// --------------------------------------------------------------- criterion 12
void criterion_acoustic_properties(Criterion& c) {
  AcousticParams params;  // sf 1.5, f_min 10 kHz, B0 7 kHz

  for (int i = 0; i < 10; ++i) {
    const double r = 0.1 + 4.9 * i / 9.0;
    const double s1 = acoustic_sir(r, 1, params);
    const double s8 = acoustic_sir(r, 8, params);
    const double s27 = acoustic_sir(r, 27, params);
    c.require(s1 < s8 && s8 < s27, "SIR not increasing in N at R=" + fmt(r, 3));
  }

  Rng rng(2718);
  const double reference = acoustic_sir(1.0, 8, params);
  for (int i = 0; i < 8; ++i) {
    AcousticParams varied = params;
    varied.normalizing_const = rng.uniform(0.01, 100.0);
    varied.tx_power_w = rng.uniform(0.01, 100.0);
    const double v = acoustic_sir(1.0, 8, varied);
    c.require(std::abs(v - reference) / reference <= 1e-9,
              "SIR moved with A0/Pt: rel diff " + fmt(std::abs(v - reference) / reference, 12));
  }

  for (long long n : {1LL, 8LL, 27LL}) {
    const double computed = acoustic_sir(1.3, n, params, no_absorption());
    const double closed =
        std::pow(std::sqrt(2.0) * std::cbrt(static_cast<double>(n)), 1.5) / 12.0;
    c.require(std::abs(computed - closed) <= 1e-8,
              "spreading-only SIR at N=" + std::to_string(n) + ": " + fmt(computed, 10) +
                  " vs " + fmt(closed, 10));
  }

  // Quadrature halving stability, via an independent fixed-step Simpson.
  const auto fixed_sir = [&](double r, long long n, int intervals) {
    auto band = [&](double d) {
      const double lo = params.f_min_hz, hi = params.f_min_hz + params.bandwidth_hz;
      const double h = (hi - lo) / intervals;
      double acc = 0.0;
      for (int i = 0; i <= intervals; ++i) {
        const double f = lo + i * h;
        const double w = (i == 0 || i == intervals) ? 1.0 : ((i % 2) ? 4.0 : 2.0);
        acc += w * std::pow(10.0, -thorp_absorption_db(f) * d / 10.0);
      }
      return acc * h / 3.0;
    };
    const double ratio = std::sqrt(2.0) * std::cbrt(static_cast<double>(n));
    return std::pow(ratio, params.spreading_factor) / 12.0 * band(r) / band(ratio * r);
  };
  for (double r : {0.2, 1.0, 3.0, 5.0}) {
    for (long long n : {8LL, 27LL}) {
      const double coarse = fixed_sir(r, n, 2048);
      const double fine = fixed_sir(r, n, 4096);
      c.require(std::abs(fine - coarse) / std::abs(fine) < 1e-6,
                "halving instability at R=" + fmt(r, 2));
      const double adaptive = acoustic_sir(r, n, params);
      c.require(std::abs(adaptive - fine) / fine < 1e-6,
                "adaptive vs fixed-step mismatch at R=" + fmt(r, 2));
    }
  }
}

// --------------------------------------------------------------- criterion 13
void criterion_feasibility_chain(Criterion& c) {
  AcousticParams params;
  for (double sir0 : {0.0, 0.3, 0.6, 0.9, 1.5, 3.0}) {
    UserConstraints constraints{0.5, 7000.0, 100.0, sir0};
    const auto range = feasible_radius_range(constraints, 8);
    c.require(!range.empty, "base interval unexpectedly empty");

    const int cells = 10000;
    double oracle = -1.0;
    for (int i = cells; i >= 0; --i) {
      const double r = range.lo + (range.hi - range.lo) * i / cells;
      if (sir0 <= 0.0 || acoustic_sir(r, 8, params) >= sir0) {
        oracle = r;
        break;
      }
    }
    const auto result = max_users_radius(constraints, 8, params);
    const double cell = (range.hi - range.lo) / cells;
    if (oracle < 0.0) {
      c.require(result.status != Feasibility::Ok,
                "grid oracle infeasible but solver returned a radius");
    } else {
      c.require(result.status == Feasibility::Ok,
                "solver infeasible but grid oracle found " + fmt(oracle, 6));
      if (result.status == Feasibility::Ok)
        c.require(std::abs(result.radius_km - oracle) <= cell + 1e-12,
                  "solver " + fmt(result.radius_km, 6) + " vs oracle " + fmt(oracle, 6));
    }
  }
  c.require(feasible_radius_range({0.5, 700.0, 100.0, 0.0}, 8).empty,
            "starved bandwidth should yield an empty interval");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "volumetric quotients"},
      {2, "model-selection crossovers"},
      {3, "TO connectivity regimes (8 vs 14 neighbors)"},
      {4, "full interior coverage across the ratio sweep"},
      {5, "energy tables from geometry"},
      {6, "partition constants"},
      {7, "cell-id rule vs exhaustive oracle"},
      {8, "k-coverage tables"},
      {9, "Poisson sum identity"},
      {10, "Monte Carlo k-coverage"},
      {11, "greedy routing on full and holed fields"},
      {12, "acoustic SIR properties"},
      {13, "feasibility chain vs grid oracle"},
  };

  criterion_quotients(criteria[0]);
  criterion_crossovers(criteria[1]);
  criterion_degree_regimes(criteria[2]);
  criterion_coverage(criteria[3]);
  criterion_energy_tables(criteria[4]);
  criterion_partition_constants(criteria[5]);
  criterion_cell_id(criteria[6]);
  criterion_kcoverage_tables(criteria[7]);
  criterion_poisson_sum(criteria[8]);
  criterion_monte_carlo(criteria[9]);
  criterion_routing(criteria[10]);
  criterion_acoustic_properties(criteria[11]);
  criterion_feasibility_chain(criteria[12]);

  int failures = 0;
  for (const auto& c : criteria) {
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title
              << "\n";
    for (const auto& note : c.notes) std::cout << "       " << note << "\n";
    if (!c.ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed\n";
  return failures;
}
