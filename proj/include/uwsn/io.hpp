#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "uwsn/core.hpp"
#include "uwsn/placement.hpp"
#include "uwsn/routing.hpp"

namespace uwsn {

/// Lengths print at 9 significant digits, probabilities at 7 decimals.
inline std::string format_length(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline std::string format_probability(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.7f", v);
  return buf;
}

inline std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline void write_placement_csv(std::ostream& os, const Placement& placement) {
  os << "u,v,w,x,y,z\n";
  for (const auto& p : placement.points) {
    os << p.u << ',' << p.v << ',' << p.w << ',' << format_length(p.position.x) << ','
       << format_length(p.position.y) << ',' << format_length(p.position.z) << '\n';
  }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

inline double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw ParseError(std::string("trailing junk in ") + what);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected a number for ") + what + ", got '" + s + "'");
  }
}

inline long long parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw ParseError(std::string("trailing junk in ") + what);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

}  // namespace detail

/// Reads a placement CSV (u,v,w,x,y,z with header) back into points.
inline std::vector<LatticePoint> read_placement_csv(std::istream& is) {
  std::vector<LatticePoint> points;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("u,", 0) == 0) continue;  // header
    }
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != 6) throw ParseError("placement row needs 6 fields: " + line);
    LatticePoint p;
    p.u = detail::parse_int(fields[0], "u");
    p.v = detail::parse_int(fields[1], "v");
    p.w = detail::parse_int(fields[2], "w");
    p.position = {detail::parse_double(fields[3], "x"), detail::parse_double(fields[4], "y"),
                  detail::parse_double(fields[5], "z")};
    points.push_back(p);
  }
  return points;
}

/// Field CSV: u,v,w,alive,energy (header optional).
inline Field read_field_csv(std::istream& is) {
  Field field;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("u,", 0) == 0) continue;
    }
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != 5) throw ParseError("field row needs 5 fields: " + line);
    NodeState node;
    node.id = {detail::parse_int(fields[0], "u"), detail::parse_int(fields[1], "v"),
               detail::parse_int(fields[2], "w")};
    const long long alive = detail::parse_int(fields[3], "alive");
    if (alive != 0 && alive != 1) throw ParseError("alive must be 0 or 1: " + line);
    node.alive = alive == 1;
    node.energy = detail::parse_double(fields[4], "energy");
    field.add(node);
  }
  return field;
}

}  // namespace uwsn
