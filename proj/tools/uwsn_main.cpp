// Command-line front end: every module is a subcommand with deterministic
// CSV/JSON output. Exit codes: 0 success, 2 routing dead end, 64 usage
// errors, 65 malformed input files.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uwsn/uwsn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDeadEnd = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

uwsn::Point3 parse_point(const std::string& csv, const char* what) {
  const auto fields = uwsn::detail::split_csv_line(csv);
  if (fields.size() != 3)
    throw uwsn::ParseError(std::string(what) + " needs 'x,y,z', got '" + csv + "'");
  return {uwsn::detail::parse_double(fields[0], what),
          uwsn::detail::parse_double(fields[1], what),
          uwsn::detail::parse_double(fields[2], what)};
}

uwsn::CellId parse_cell_id(const std::string& csv, const char* what) {
  const auto fields = uwsn::detail::split_csv_line(csv);
  if (fields.size() != 3)
    throw uwsn::ParseError(std::string(what) + " needs 'u,v,w', got '" + csv + "'");
  return {uwsn::detail::parse_int(fields[0], what), uwsn::detail::parse_int(fields[1], what),
          uwsn::detail::parse_int(fields[2], what)};
}

uwsn::CellShape parse_shape(const std::string& name) {
  if (name == "cb") return uwsn::CellShape::CB;
  if (name == "hp") return uwsn::CellShape::HP;
  if (name == "rd") return uwsn::CellShape::RD;
  if (name == "to") return uwsn::CellShape::TO;
  if (name == "alt-cb") return uwsn::CellShape::AltCB;
  if (name == "alt-hp") return uwsn::CellShape::AltHP;
  throw uwsn::ParseError("unknown shape '" + name + "'");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw uwsn::ParseError("cannot open output file '" + path + "'");
  return file;
}

std::string slurp_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw uwsn::ParseError("cannot open input file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

struct PlanArgs {
  std::string model = "auto";
  double r_bb = 0.0, r_bs = 0.0;
  std::string min = "0,0,0", max = "0,0,0", ref = "0,0,0";
  bool inflate = false;
  std::string out, aux_out;
};

int run_plan(const PlanArgs& a) {
  const uwsn::BackboneParams params{a.r_bb, a.r_bs};
  uwsn::Region region{parse_point(a.min, "--min"), parse_point(a.max, "--max")};
  if (!region.valid()) throw uwsn::ParseError("--max must dominate --min");
  const uwsn::Point3 ref = parse_point(a.ref, "--ref");

  uwsn::Placement placement;
  if (a.model == "strip") {
    const auto sp = uwsn::strip_params(params);
    if (a.inflate) region = region.inflated(std::max(sp.alpha, sp.beta));
    placement = uwsn::generate_strip_placement(params, region, ref);
    std::cerr << "strip placement: alpha=" << uwsn::format_length(sp.alpha)
              << " beta=" << uwsn::format_length(sp.beta)
              << " gamma=" << uwsn::format_length(sp.gamma) << "\n";
    if (!a.aux_out.empty()) {
      const auto aux = uwsn::strip_auxiliary_nodes(placement, params.r_bb);
      std::ofstream auxf(a.aux_out);
      if (!auxf) throw uwsn::ParseError("cannot open '" + a.aux_out + "'");
      auxf << "x,y,z\n";
      for (const auto& p : aux)
        auxf << uwsn::format_length(p.x) << ',' << uwsn::format_length(p.y) << ','
             << uwsn::format_length(p.z) << '\n';
    }
  } else {
    uwsn::AdjustedCell cell;
    if (a.model == "auto") {
      const auto choice = uwsn::select_best_model(params);
      cell = choice.cell;
      std::cerr << "selected model: " << uwsn::shape_name(choice.model)
                << " (cell radius " << uwsn::format_length(cell.radius) << ")\n";
    } else {
      cell = uwsn::adjusted_cell(parse_shape(a.model), params);
    }
    if (a.inflate) region = region.inflated(cell.radius);
    placement = uwsn::generate_lattice(cell, region, ref);
  }

  std::ofstream file;
  uwsn::write_placement_csv(open_output(file, a.out), placement);
  return kExitOk;
}

int run_partition(double r_t, const std::string& out) {
  std::ofstream file;
  std::ostream& os = open_output(file, out);
  os << "model,max_cell_radius,min_sensing_range,active_node_ratio,lifetime_ratio\n";
  for (uwsn::CellShape s : uwsn::kAllShapes) {
    os << uwsn::shape_name(s) << ',' << uwsn::format_length(uwsn::max_cell_radius(s) * r_t)
       << ',' << uwsn::format_length(uwsn::min_sensing_range(s) * r_t) << ','
       << uwsn::format_value(uwsn::active_node_ratio(s)) << ','
       << uwsn::format_value(uwsn::lifetime_ratio(s)) << '\n';
  }
  return kExitOk;
}

int run_locate(const std::string& sink, double r_t, const std::string& in,
               const std::string& out) {
  const uwsn::PartitionFrame frame{parse_point(sink, "--sink"), r_t};
  const std::string text = slurp_input(in);

  std::ofstream file;
  std::ostream& os = open_output(file, out);
  os << "u,v,w\n";
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    double x, y, z;
    if (!(ls >> x >> y >> z))
      throw uwsn::ParseError("locate input line needs 'x y z': " + line);
    std::string rest;
    if (ls >> rest) throw uwsn::ParseError("trailing junk in locate input: " + line);
    const uwsn::CellId id = uwsn::locate_cell({x, y, z}, frame);
    os << id.u << ',' << id.v << ',' << id.w << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string placement;
  double r_bs = 0.0, grid_step = 0.0;
  std::string min, max;
  unsigned threads = 1;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  std::ifstream in(a.placement);
  if (!in) throw uwsn::ParseError("cannot open placement file '" + a.placement + "'");
  const auto points = uwsn::read_placement_csv(in);
  std::vector<uwsn::Point3> nodes;
  nodes.reserve(points.size());
  for (const auto& p : points) nodes.push_back(p.position);

  const uwsn::Region region{parse_point(a.min, "--min"), parse_point(a.max, "--max")};
  const auto report = uwsn::verify_coverage(nodes, a.r_bs, region, a.grid_step, a.threads);

  std::ofstream file;
  std::ostream& os = open_output(file, a.out);
  os << "{\"samples_total\": " << report.samples_total
     << ", \"samples_covered\": " << report.samples_covered << ", \"worst_gap\": ";
  if (std::isfinite(report.worst_gap))
    os << uwsn::format_length(report.worst_gap);
  else
    os << "\"inf\"";
  os << ", \"coverage_fraction\": " << uwsn::format_probability(report.coverage_fraction)
     << "}\n";
  return kExitOk;
}

struct SirArgs {
  std::string shape = "rd";
  std::vector<long long> cluster_sizes{1, 8, 27};
  double r_min = 0.1, r_max = 5.0;
  int r_count = 50;
  double f_min_khz = 10.0, b0_khz = 7.0, sf = 1.5;
  bool no_absorption = false;
  std::string units = "km";
  std::string out;
};

int run_sir(const SirArgs& a) {
  if (parse_shape(a.shape) != uwsn::CellShape::RD)
    throw uwsn::ParseError("sir: acoustic analysis supports shape 'rd' only");
  uwsn::AcousticParams params;
  params.f_min_hz = a.f_min_khz * 1000.0;
  params.bandwidth_hz = a.b0_khz * 1000.0;
  params.spreading_factor = a.sf;
  const auto absorption = a.no_absorption ? uwsn::no_absorption() : uwsn::thorp_model();
  const double to_km = a.units == "m" ? 1e-3 : 1.0;

  std::ofstream file;
  std::ostream& os = open_output(file, a.out);
  os << "R,N,sir_db\n";
  for (int i = 0; i < a.r_count; ++i) {
    const double r = a.r_count == 1
                         ? a.r_min
                         : a.r_min + (a.r_max - a.r_min) * i / (a.r_count - 1);
    for (long long n : a.cluster_sizes) {
      const double sir = uwsn::acoustic_sir(r * to_km, n, params, absorption);
      os << uwsn::format_length(r) << ',' << n << ','
         << uwsn::format_value(10.0 * std::log10(sir)) << '\n';
    }
  }
  return kExitOk;
}

int run_energy(const std::string& out) {
  std::ofstream file;
  std::ostream& os = open_output(file, out);
  os << "model,per_packet_ratio,network_ratio\n";
  for (const auto& row : uwsn::energy_table()) {
    os << uwsn::shape_name(row.model) << ',' << uwsn::format_value(row.per_packet_ratio)
       << ',' << uwsn::format_value(row.network_ratio) << '\n';
  }
  return kExitOk;
}

int run_kcov(int dim, int k_max, const std::string& tail, const std::string& out) {
  const bool tabulated = tail != "exact";
  std::ofstream file;
  std::ostream& os = open_output(file, out);
  os << "k,lambda,p_geq_k,overhead\n";
  for (const auto& row : uwsn::k_coverage_table(dim, k_max, tabulated)) {
    char lambda[64];
    std::snprintf(lambda, sizeof(lambda), "%.8f", row.lambda);
    os << row.k << ',' << lambda << ',' << uwsn::format_probability(row.p_geq_k) << ','
       << uwsn::format_value(row.overhead) << '\n';
  }
  return kExitOk;
}

struct RouteArgs {
  std::string field, src, dest;
  std::string policy = "least-loaded";
  std::uint64_t seed = 0;
  long long max_hops = -1;
  std::string out;
};

int run_route(const RouteArgs& a) {
  std::ifstream in(a.field);
  if (!in) throw uwsn::ParseError("cannot open field file '" + a.field + "'");
  uwsn::Field field = uwsn::read_field_csv(in);

  uwsn::RoutePolicy policy;
  policy.seed = a.seed;
  if (a.policy == "least-loaded")
    policy.tie_break = uwsn::TieBreak::LeastLoaded;
  else if (a.policy == "highest-energy")
    policy.tie_break = uwsn::TieBreak::HighestEnergy;
  else if (a.policy == "random")
    policy.tie_break = uwsn::TieBreak::UniformRandom;
  else
    throw uwsn::ParseError("unknown policy '" + a.policy + "'");

  const uwsn::CellId src = parse_cell_id(a.src, "--src");
  const uwsn::CellId dest = parse_cell_id(a.dest, "--dest");
  const auto result = uwsn::route(src, dest, field, policy, a.max_hops);

  std::ofstream file;
  std::ostream& os = open_output(file, a.out);
  os << "u,v,w\n";
  for (const auto& id : result.path) os << id.u << ',' << id.v << ',' << id.w << '\n';

  if (result.outcome == uwsn::RouteOutcome::DeadEnd) {
    std::cerr << "dead end at (" << result.dead_end_at.u << ',' << result.dead_end_at.v
              << ',' << result.dead_end_at.w << ") after " << result.hops << " hops\n";
    return kExitDeadEnd;
  }
  std::cerr << "delivered in " << result.hops << " hops\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planning and analysis toolkit for 3D underwater sensor networks"};
  app.require_subcommand(1);

  PlanArgs plan;
  auto* plan_cmd = app.add_subcommand("plan", "Generate a backbone placement as CSV");
  plan_cmd->add_option("--model", plan.model, "auto|cb|hp|rd|to|strip")
      ->default_val("auto");
  plan_cmd->add_option("--rbb", plan.r_bb, "Backbone-backbone range")->required();
  plan_cmd->add_option("--rbs", plan.r_bs, "Backbone-sensor range")->required();
  plan_cmd->add_option("--min", plan.min, "Region min corner 'x,y,z'")->required();
  plan_cmd->add_option("--max", plan.max, "Region max corner 'x,y,z'")->required();
  plan_cmd->add_option("--ref", plan.ref, "Reference point 'x,y,z'");
  plan_cmd->add_flag("--inflate", plan.inflate,
                     "Inflate the region by one cell radius before generating");
  plan_cmd->add_option("--out", plan.out, "Output file (default stdout)");
  plan_cmd->add_option("--aux-out", plan.aux_out,
                       "Write strip auxiliary nodes to this file (x,y,z CSV)");

  double partition_rt = 1.0;
  std::string partition_out;
  auto* partition_cmd =
      app.add_subcommand("partition", "Per-model partition constants as CSV");
  partition_cmd->add_option("--rt", partition_rt, "Transmission radius");
  partition_cmd->add_option("--out", partition_out, "Output file (default stdout)");

  std::string locate_sink = "0,0,0", locate_in, locate_out;
  double locate_rt = 1.0;
  auto* locate_cmd =
      app.add_subcommand("locate", "Map 'x y z' lines to TO cell ids (u,v,w CSV)");
  locate_cmd->add_option("--sink", locate_sink, "Information sink 'x,y,z'");
  locate_cmd->add_option("--rt", locate_rt, "Transmission radius");
  locate_cmd->add_option("--in", locate_in, "Input file (default stdin)");
  locate_cmd->add_option("--out", locate_out, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Coverage report (JSON) for a placement");
  verify_cmd->add_option("--placement", verify.placement, "Placement CSV")->required();
  verify_cmd->add_option("--rbs", verify.r_bs, "Sensing/communication radius")->required();
  verify_cmd->add_option("--min", verify.min, "Region min corner")->required();
  verify_cmd->add_option("--max", verify.max, "Region max corner")->required();
  verify_cmd->add_option("--grid-step", verify.grid_step, "Sample grid pitch")->required();
  verify_cmd->add_option("--threads", verify.threads, "Sampling threads");
  verify_cmd->add_option("--out", verify.out, "Output file (default stdout)");

  SirArgs sir;
  auto* sir_cmd = app.add_subcommand("sir", "Acoustic SIR sweep as CSV (R,N,sir_db)");
  sir_cmd->add_option("--shape", sir.shape, "Cell shape (rd)");
  sir_cmd->add_option("--n", sir.cluster_sizes, "Cluster sizes")->delimiter(',');
  sir_cmd->add_option("--r-min", sir.r_min, "Smallest radius");
  sir_cmd->add_option("--r-max", sir.r_max, "Largest radius");
  sir_cmd->add_option("--r-count", sir.r_count, "Sweep points");
  sir_cmd->add_option("--fmin-khz", sir.f_min_khz, "Band start (kHz)");
  sir_cmd->add_option("--b0-khz", sir.b0_khz, "Bandwidth (kHz)");
  sir_cmd->add_option("--sf", sir.sf, "Spreading factor");
  sir_cmd->add_flag("--no-absorption", sir.no_absorption, "Spreading loss only");
  sir_cmd->add_option("--units", sir.units, "Radius units: km|m")->default_val("km");
  sir_cmd->add_option("--out", sir.out, "Output file (default stdout)");

  std::string energy_out;
  auto* energy_cmd = app.add_subcommand("energy", "Energy ratio tables as CSV");
  energy_cmd->add_option("--out", energy_out, "Output file (default stdout)");

  int kcov_dim = 3, kcov_kmax = 4;
  std::string kcov_tail = "tabulated", kcov_out;
  auto* kcov_cmd = app.add_subcommand("kcov", "k-coverage table as CSV");
  kcov_cmd->add_option("--dim", kcov_dim, "Dimension (2 or 3)");
  kcov_cmd->add_option("--k-max", kcov_kmax, "Largest k");
  kcov_cmd->add_option("--tail", kcov_tail,
                       "tabulated (reference rows) or exact (true tail)");
  kcov_cmd->add_option("--out", kcov_out, "Output file (default stdout)");

  RouteArgs route;
  auto* route_cmd =
      app.add_subcommand("route", "Greedy cell-id routing over a field CSV");
  route_cmd->add_option("--field", route.field, "Field CSV (u,v,w,alive,energy)")
      ->required();
  route_cmd->add_option("--src", route.src, "Source id 'u,v,w'")->required();
  route_cmd->add_option("--dest", route.dest, "Destination id 'u,v,w'")->required();
  route_cmd->add_option("--policy", route.policy, "least-loaded|highest-energy|random");
  route_cmd->add_option("--seed", route.seed, "Seed for the random policy");
  route_cmd->add_option("--max-hops", route.max_hops, "Hop cap (-1 = auto)");
  route_cmd->add_option("--out", route.out, "Output file (default stdout)");

  // Flat key=value config files, merged under explicit flags (flags win).
  for (CLI::App* sub : {plan_cmd, partition_cmd, locate_cmd, verify_cmd, sir_cmd,
                        energy_cmd, kcov_cmd, route_cmd}) {
    sub->set_config("--config", "", "Flat key=value config file; explicit flags win");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (plan_cmd->parsed()) return run_plan(plan);
    if (partition_cmd->parsed()) return run_partition(partition_rt, partition_out);
    if (locate_cmd->parsed())
      return run_locate(locate_sink, locate_rt, locate_in, locate_out);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (sir_cmd->parsed()) return run_sir(sir);
    if (energy_cmd->parsed()) return run_energy(energy_out);
    if (kcov_cmd->parsed()) return run_kcov(kcov_dim, kcov_kmax, kcov_tail, kcov_out);
    if (route_cmd->parsed()) return run_route(route);
  } catch (const uwsn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
