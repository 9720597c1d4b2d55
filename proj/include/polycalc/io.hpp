#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "diagnostics.hpp"

namespace polycalc {

// File formats: body JSON ({"dim":n,"vertices":[...]} or
// {"dim":n,"halfspaces":[{"normal":[...],"offset":a},...]}), direction-set
// JSON, curve CSV at full 17-digit precision, and a minimal SVG line chart.

inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline Vec vec_from_json(const nlohmann::json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError("coordinate array must have length " + std::to_string(dim));
  for (const auto& x : j)
    if (!x.is_number()) throw ParseError("coordinates must be numbers");
  return dim == 2 ? Vec(j[0].get<double>(), j[1].get<double>())
                  : Vec(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

inline int dim_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("missing integer field 'dim'");
  int dim = j["dim"].get<int>();
  if (dim != 2 && dim != 3) throw ParseError("'dim' must be 2 or 3");
  return dim;
}

}  // namespace detail

inline Polytope body_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("body file must hold a JSON object");
  int dim = detail::dim_from_json(j);
  bool has_v = j.contains("vertices"), has_h = j.contains("halfspaces");
  if (has_v == has_h) throw ParseError("exactly one of 'vertices'/'halfspaces' must be present");
  if (has_v) {
    if (!j["vertices"].is_array() || j["vertices"].empty()) throw ParseError("'vertices' must be a nonempty array");
    std::vector<Vec> pts;
    for (const auto& v : j["vertices"]) pts.push_back(detail::vec_from_json(v, dim));
    return hull(pts);
  }
  if (!j["halfspaces"].is_array() || j["halfspaces"].empty())
    throw ParseError("'halfspaces' must be a nonempty array");
  std::vector<HalfSpace> hs;
  for (const auto& h : j["halfspaces"]) {
    if (!h.is_object() || !h.contains("normal") || !h.contains("offset") || !h["offset"].is_number())
      throw ParseError("each halfspace needs 'normal' and numeric 'offset'");
    hs.emplace_back(detail::vec_from_json(h["normal"], dim), h["offset"].get<double>());
  }
  return intersect_halfspaces(hs);
}

inline nlohmann::json body_to_json(const Polytope& P, const std::string& label = "") {
  nlohmann::json j;
  j["dim"] = P.dim;
  nlohmann::json verts = nlohmann::json::array();
  for (const Vec& v : P.vertices) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < P.dim; ++i) row.push_back(v[i]);
    verts.push_back(row);
  }
  j["vertices"] = verts;
  if (!label.empty()) j["label"] = label;
  return j;
}

inline Polytope read_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open body file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return body_from_json(j);
}

inline void write_body(const Polytope& P, const std::string& path, const std::string& label = "") {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write body file: " + path);
  out << body_to_json(P, label).dump(2) << "\n";
}

// Direction sets: a JSON file with "directions", a body file (its facet
// normals are used), or the literal "axes".
inline DirectionSet read_directions(const std::string& spec, int dim) {
  if (spec == "axes") return DirectionSet::axes(dim);
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot open direction file: " + spec);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(spec + ": " + e.what());
  }
  if (j.contains("directions")) {
    int d = j.contains("dim") ? detail::dim_from_json(j) : dim;
    std::vector<Vec> ds;
    for (const auto& v : j["directions"]) ds.push_back(detail::vec_from_json(v, d));
    return DirectionSet(d, ds, j.value("label", spec));
  }
  return DirectionSet::of_normals(body_from_json(j), spec);
}

// ---------------------------------------------------------------- curves

inline std::vector<std::string> curve_header(const FamilyCurve& c) {
  const int n = c.dim;
  std::vector<std::string> cols = {"lambda"};
  for (int i = 0; i <= n; ++i) cols.push_back("W" + std::to_string(i));
  cols.push_back("S");
  cols.push_back("I");
  if (!c.samples.empty() && c.samples.front().IOmega) cols.push_back("IOmega");
  if (!c.samples.empty() && !c.samples.front().Ii.empty())
    for (int i = 0; i <= n - 2; ++i) cols.push_back("I" + std::to_string(i));
  if (!c.samples.empty() && !c.samples.front().Iij.empty())
    for (auto [i, j] : quermass_pairs(n)) cols.push_back("I" + std::to_string(i) + std::to_string(j));
  return cols;
}

inline void write_curve_csv(const FamilyCurve& c, std::ostream& out) {
  std::vector<std::string> cols = curve_header(c);
  for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  for (const CurveSample& s : c.samples) {
    std::vector<double> row = {s.lambda};
    for (int i = 0; i <= c.dim; ++i) row.push_back(s.W[i]);
    row.push_back(s.S);
    row.push_back(s.I);
    if (s.IOmega) row.push_back(*s.IOmega);
    for (double v : s.Ii) row.push_back(v);
    for (double v : s.Iij) row.push_back(v);
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_full(row[i]);
    out << "\n";
  }
}

struct CurveTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

inline CurveTable read_curve_csv(std::istream& in) {
  CurveTable t;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty curve file");
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) t.header.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    if (row.size() != t.header.size()) throw ParseError("curve row width disagrees with header");
    t.rows.push_back(row);
  }
  return t;
}

// Minimal self-contained SVG line chart: axes plus one polyline per quotient
// column, lambda on the x axis.
inline void write_curve_svg(const FamilyCurve& c, std::ostream& out) {
  const int W = 720, H = 480, ML = 70, MR = 20, MT = 20, MB = 45;
  std::vector<std::string> cols = curve_header(c);
  size_t first_q = static_cast<size_t>(c.dim) + 2;  // skip lambda and W0..Wn
  std::vector<std::vector<double>> series;
  std::vector<std::string> names;
  for (size_t col = first_q; col < cols.size(); ++col) {
    names.push_back(cols[col]);
    series.push_back({});
  }
  for (const CurveSample& s : c.samples) {
    std::vector<double> tail = {s.S, s.I};
    if (s.IOmega) tail.push_back(*s.IOmega);
    for (double v : s.Ii) tail.push_back(v);
    for (double v : s.Iij) tail.push_back(v);
    for (size_t k = 0; k < tail.size(); ++k) series[k].push_back(tail[k]);
  }
  double xlo = c.samples.front().lambda, xhi = c.samples.back().lambda;
  double ylo = std::numeric_limits<double>::infinity(), yhi = -ylo;
  for (const auto& s : series)
    for (double v : s) {
      ylo = std::min(ylo, v);
      yhi = std::max(yhi, v);
    }
  if (yhi <= ylo) yhi = ylo + 1.0;
  auto px = [&](double x) { return ML + (x - xlo) / (xhi - xlo) * (W - ML - MR); };
  auto py = [&](double y) { return H - MB - (y - ylo) / (yhi - ylo) * (H - MT - MB); };
  const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\"" << H - MB
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << ML << "\" y=\"" << H - 10 << "\" font-size=\"12\">lambda=" << xlo << "</text>\n";
  out << "<text x=\"" << W - MR - 90 << "\" y=\"" << H - 10 << "\" font-size=\"12\">lambda=" << xhi
      << "</text>\n";
  out << "<text x=\"5\" y=\"" << py(ylo) << "\" font-size=\"12\">" << ylo << "</text>\n";
  out << "<text x=\"5\" y=\"" << py(yhi) + 10 << "\" font-size=\"12\">" << yhi << "</text>\n";
  for (size_t k = 0; k < series.size(); ++k) {
    out << "<polyline fill=\"none\" stroke=\"" << palette[k % 7] << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < series[k].size(); ++i)
      out << px(c.samples[i].lambda) << "," << py(series[k][i]) << " ";
    out << "\"/>\n";
    out << "<text x=\"" << W - MR - 60 << "\" y=\"" << MT + 16 * (k + 1) << "\" font-size=\"12\" fill=\""
        << palette[k % 7] << "\">" << names[k] << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace polycalc
