#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "uwsn/placement.hpp"
#include "uwsn/verify.hpp"

using namespace uwsn;
using Catch::Approx;

TEST_CASE("interior coverage of the TO lattice at R = r_bs is total") {
  const double r_bs = 1.0;
  const Region interior{{0.013, 0.017, 0.019}, {2.013, 2.017, 2.019}};
  const Region generation = interior.inflated(r_bs);
  const auto lattice = generate_lattice(CellShape::TO, r_bs, generation, {0, 0, 0});

  const auto report = verify_coverage(lattice, r_bs, interior, r_bs / 20.0);
  CHECK(report.coverage_fraction == 1.0);
  CHECK(report.samples_covered == report.samples_total);
  CHECK(report.worst_gap <= r_bs);
}

TEST_CASE("empty placement covers nothing") {
  const auto report =
      verify_coverage(std::vector<Point3>{}, 1.0, {{0, 0, 0}, {1, 1, 1}}, 0.25);
  CHECK(report.coverage_fraction == 0.0);
  CHECK(report.samples_covered == 0);
  CHECK(std::isinf(report.worst_gap));
}

TEST_CASE("one central node with a big radius covers the whole box") {
  const Region box{{0, 0, 0}, {2, 2, 2}};
  const std::vector<Point3> nodes{{1, 1, 1}};
  const double half_diagonal = std::sqrt(3.0);
  const auto report = verify_coverage(nodes, half_diagonal + 1e-9, box, 0.1);
  CHECK(report.coverage_fraction == 1.0);
  CHECK(report.worst_gap <= half_diagonal + 1e-9);
}

TEST_CASE("coverage report is independent of the thread count") {
  const auto lattice =
      generate_lattice(CellShape::RD, 0.8, {{-2, -2, -2}, {2, 2, 2}}, {0, 0, 0});
  const Region probe{{-1, -1, -1}, {1, 1, 1}};
  const auto seq = verify_coverage(lattice, 0.8, probe, 0.07, 1);
  const auto par = verify_coverage(lattice, 0.8, probe, 0.07, 4);
  CHECK(seq.samples_total == par.samples_total);
  CHECK(seq.samples_covered == par.samples_covered);
  CHECK(seq.worst_gap == par.worst_gap);
}

TEST_CASE("worst gap shrinks as the grid refines") {
  const auto lattice =
      generate_lattice(CellShape::CB, 1.0, {{-3, -3, -3}, {3, 3, 3}}, {0, 0, 0});
  const Region probe{{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}};
  const auto coarse = verify_coverage(lattice, 1.0, probe, 0.5);
  const auto fine = verify_coverage(lattice, 1.0, probe, 0.1);
  CHECK(fine.worst_gap >= coarse.worst_gap);  // finer grid finds deeper gaps
}

TEST_CASE("TO interior degree switches from 8 to 14 with the range ratio") {
  const double r_bs = 1.0;
  const Region region{{-8.51, -8.52, -8.53}, {8.51, 8.52, 8.53}};
  const auto lattice = generate_lattice(CellShape::TO, r_bs, region, {0, 0, 0});

  const auto g8 = build_backbone_graph(lattice, 1.6 * r_bs);
  REQUIRE_FALSE(g8.interior.empty());
  CHECK(g8.interior_degree_mode == 8);

  const auto g14 = build_backbone_graph(lattice, 1.8 * r_bs);
  CHECK(g14.interior_degree_mode == 14);

  // Every interior node sits at the mode in both regimes.
  for (int idx : g8.interior) CHECK(g8.degree(idx) == 8);
  for (int idx : g14.interior) CHECK(g14.degree(idx) == 14);
}

TEST_CASE("edges are inclusive at exactly r_bb") {
  const double r_bb = 1.7;
  std::vector<Point3> nodes{{0, 0, 0}, {r_bb, 0, 0}};
  const auto g = build_backbone_graph(nodes, r_bb, {{-1, -1, -1}, {3, 1, 1}}, 0.0);
  REQUIRE(g.adjacency[0].size() == 1);
  CHECK(g.adjacency[0][0] == 1);
}

TEST_CASE("k-connectivity basics") {
  // Triangle: 2-connected, not 3-connected.
  std::vector<Point3> tri{{0, 0, 0}, {1, 0, 0}, {0.5, 0.8, 0}};
  const auto g = build_backbone_graph(tri, 1.5, {{-1, -1, -1}, {2, 2, 1}}, 0.0);
  CHECK(k_connectivity(g, 1));
  CHECK(k_connectivity(g, 2));
  CHECK_FALSE(k_connectivity(g, 3));

  // Two components.
  std::vector<Point3> split{{0, 0, 0}, {1, 0, 0}, {10, 0, 0}, {11, 0, 0}};
  const auto gs = build_backbone_graph(split, 1.5, {{-1, -1, -1}, {12, 1, 1}}, 0.0);
  CHECK_FALSE(k_connectivity(gs, 1));

  // Path of three: cutting the middle vertex disconnects it.
  std::vector<Point3> path{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  const auto gp = build_backbone_graph(path, 1.2, {{-1, -1, -1}, {3, 1, 1}}, 0.0);
  CHECK(k_connectivity(gp, 1));
  CHECK_FALSE(k_connectivity(gp, 2));
}

TEST_CASE("k-connectivity refuses oversized graphs") {
  std::vector<Point3> many(501);
  for (int i = 0; i < 501; ++i) many[i] = {static_cast<double>(i), 0, 0};
  const auto g = build_backbone_graph(many, 1.5, {{-1, -1, -1}, {502, 1, 1}}, 0.0);
  CHECK_THROWS_AS(k_connectivity(g, 1), ScaleError);
}

TEST_CASE("adjusted models keep full interior coverage across the ratio sweep") {
  // Spot-check of the acceptance sweep at unit-test scale.
  const double r_bs = 1.0;
  const Region interior{{0.013, 0.017, 0.019}, {1.513, 1.517, 1.519}};
  for (double ratio : {1.0, 1.3, 1.6, 2.0, 2.5}) {
    for (CellShape s : kBaseShapes) {
      const auto cell = adjusted_cell(s, {ratio * r_bs, r_bs});
      const auto lattice =
          generate_lattice(cell, interior.inflated(cell.radius), {0, 0, 0});
      const auto report = verify_coverage(lattice, r_bs, interior, r_bs / 20.0);
      INFO(shape_name(s) << " at ratio " << ratio);
      CHECK(report.coverage_fraction == 1.0);
    }
  }
}
