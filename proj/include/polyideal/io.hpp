// Text formats: ASCII grids, JSON cell lists and evidence, SVG figures,
// computer-algebra scripts, and budget configuration.

#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "classify.hpp"
#include "sweep.hpp"

namespace polyideal {

using json = nlohmann::json;

struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : Error(what + " at line " + std::to_string(line_) + ", column " + std::to_string(column_)),
        line(line_),
        column(column_) {}
};

// ---------------------------------------------------------------------------
// ASCII grids: '#' is a cell, '.' is not; the top row has the largest y and
// the bottom row is y = 0.

inline CellCollection parse_ascii(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(line);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw ParseError("empty grid", 1, 1);
  const std::size_t width = rows.front().size();
  std::vector<Cell> cells;
  const int height = static_cast<int>(rows.size());
  for (int r = 0; r < height; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (row.size() != width)
      throw ParseError("ragged row (expected " + std::to_string(width) + " columns)", r + 1,
                       static_cast<int>(std::min(row.size(), width)) + 1);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] == '#')
        cells.emplace_back(static_cast<int>(c), height - 1 - r);
      else if (row[c] != '.')
        throw ParseError(std::string("illegal character '") + row[c] + "'", r + 1,
                         static_cast<int>(c) + 1);
    }
  }
  if (cells.empty()) throw ParseError("grid has no cells", 1, 1);
  return CellCollection(std::move(cells));
}

namespace detail {

inline std::vector<std::string> ascii_canvas(const CellCollection& p) {
  const Point lo = p.min_cell(), hi = p.max_cell();
  std::vector<std::string> rows(static_cast<std::size_t>(hi.y - lo.y + 1),
                                std::string(static_cast<std::size_t>(hi.x - lo.x + 1), '.'));
  for (Cell c : p) rows[static_cast<std::size_t>(hi.y - c.y())][static_cast<std::size_t>(c.x() - lo.x)] = '#';
  return rows;
}

inline std::string join_rows(const std::vector<std::string>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += '\n';
    out += rows[i];
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline Point point_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error(std::string(what) + ": expected an integer pair [x, y]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace detail

struct JsonCells {
  CellCollection collection;
  std::vector<std::string> warnings;
};

/// {"cells": [[x, y], ...]}; repeated cells are dropped with a warning.
inline JsonCells parse_json_cells(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
    throw Error("expected an object with a \"cells\" array");
  if (j["cells"].empty()) throw Error("\"cells\" is empty");
  JsonCells out;
  std::set<Cell> seen;
  std::vector<Cell> cells;
  for (const auto& e : j["cells"]) {
    Cell c{detail::point_from_json(e, "cell")};
    if (!seen.insert(c).second) {
      out.warnings.push_back("duplicate cell " + to_string(c));
      continue;
    }
    cells.push_back(c);
  }
  out.collection = CellCollection(std::move(cells));
  return out;
}

inline CellCollection parse_json(const std::string& text) { return parse_json_cells(text).collection; }

/// JSON when the first non-blank character is '{', ASCII otherwise.
inline CellCollection parse_collection(const std::string& text, std::vector<std::string>* warnings = nullptr) {
  const auto k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') {
    auto r = parse_json_cells(text);
    if (warnings) *warnings = r.warnings;
    return r.collection;
  }
  return parse_ascii(text);
}

inline json to_json(Point p) { return json::array({p.x, p.y}); }
inline json to_json(Cell c) { return to_json(c.lower_left); }

inline json to_json(const CellCollection& p) {
  json cells = json::array();
  for (Cell c : p) cells.push_back(to_json(c));
  return {{"cells", cells}};
}

inline json to_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (Point q : pts) a.push_back(to_json(q));
  return a;
}

inline json to_json(const Block& b) {
  json cells = json::array();
  for (Cell c : b.cells) cells.push_back(to_json(c));
  return {{"orientation", to_string(b.orientation)}, {"cells", cells}};
}

inline json to_json(const ZigZagWalk& w) {
  json steps = json::array();
  for (const auto& s : w.steps)
    steps.push_back({{"interval", {to_json(s.interval.lo), to_json(s.interval.hi)}},
                     {"entry", to_json(s.v_entry)},
                     {"exit", to_json(s.v_exit)},
                     {"z", to_json(s.z)},
                     {"u", to_json(s.u)}});
  return {{"length", w.length()}, {"steps", steps}};
}

inline ZigZagWalk walk_from_json(const json& j) {
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
    throw Error("walk: expected an object with a \"steps\" array");
  ZigZagWalk w;
  for (const auto& s : j["steps"]) {
    if (!s.contains("interval") || !s["interval"].is_array() || s["interval"].size() != 2)
      throw Error("walk step: expected \"interval\": [lo, hi]");
    LatticeInterval i{detail::point_from_json(s["interval"][0], "interval"),
                      detail::point_from_json(s["interval"][1], "interval")};
    const Point v = detail::point_from_json(s.at("entry"), "entry");
    const Point x = detail::point_from_json(s.at("exit"), "exit");
    if (!i.proper() || !i.is_corner(v) || !i.is_corner(x))
      throw Error("walk step corners do not fit its interval");
    w.steps.push_back(OrientedStep::make(i, v, x));
  }
  return w;
}

inline json to_json(const ConfigurationWitness& w) {
  json j{{"kind", kind_name(w)}, {"frame", frame_of(w).index}};
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LConfiguration>) {
          json cells = json::array();
          for (Cell c : x.cells) cells.push_back(to_json(c));
          j["cells"] = cells;
        } else if constexpr (std::is_same_v<T, WeakLConfiguration>) {
          j["C"] = to_json(x.c);
          j["AB"] = to_json(x.ab);
          j["DF"] = to_json(x.df);
          j["a1"] = to_json(x.a1);
          j["a2"] = to_json(x.a2);
          j["b2"] = to_json(x.b2);
        } else if constexpr (std::is_same_v<T, Ladder>) {
          json blocks = json::array(), contacts = json::array();
          for (const auto& b : x.blocks) blocks.push_back(to_json(b));
          for (const auto& [a, b] : x.contacts) contacts.push_back({to_json(a), to_json(b)});
          j["steps"] = x.steps();
          j["blocks"] = blocks;
          j["contacts"] = contacts;
        } else {
          j["C"] = to_json(x.c);
          j["D"] = to_json(x.d);
          j["AB"] = to_json(x.ab);
          j["a1"] = to_json(x.a1);
          j["a2"] = to_json(x.a2);
          j["b2"] = to_json(x.b2);
          j["C_block"] = to_string(x.c_block);
        }
      },
      w);
  return j;
}

inline json to_json(const ToricEqualityReport& r) {
  json j{{"degree", r.degree},
         {"passed", r.passed()},
         {"minors_in_kernel", r.minors_in_kernel},
         {"minors_checked", r.minors_checked},
         {"kernel_in_ideal", r.kernel_in_ideal},
         {"basis_size", r.basis_size},
         {"standard_monomials", r.standard_monomials}};
  if (r.minor_witness) j["minor_witness"] = to_string(*r.minor_witness);
  if (r.kernel_witness) j["kernel_witness"] = to_string(*r.kernel_witness);
  return j;
}

inline json to_json(const WeaklyClosedPathWitness& w) {
  json order = json::array();
  for (Cell c : w.ordering) order.push_back(to_json(c));
  return {{"ordering", order}, {"hooking_corner", to_json(w.hooking_corner)}};
}

inline json to_json(const Verdict& v) {
  json j{{"status", to_string(v.status)}, {"rule", to_string(v.rule)}, {"citation", v.citation()}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          j["evidence"] = {{"type", "none"}};
        } else if constexpr (std::is_same_v<T, ChordalityCertificate>) {
          j["evidence"] = {{"type", "weak-chordality"},
                           {"vertical_intervals", e.v_nodes},
                           {"horizontal_intervals", e.h_nodes},
                           {"edges", e.edges},
                           {"weakly_chordal", e.weakly_chordal}};
        } else if constexpr (std::is_same_v<T, ZigZagWalk>) {
          j["evidence"] = to_json(e);
          j["evidence"]["type"] = "zigzag-walk";
        } else {
          j["evidence"] = to_json(e);
          j["evidence"]["type"] = "configuration";
        }
      },
      v.evidence);
  if (v.path) j["weakly_closed_path"] = to_json(*v.path);
  if (v.oracle) {
    j["oracle"] = to_json(*v.oracle);
    j["oracle"]["marked"] = to_json(v.marked);
  }
  j["search_nodes"] = v.search_nodes;
  return j;
}

inline json to_json(const SweepReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json violations = json::array(), inconclusive = json::array();
    for (const auto& f : row.violations)
      violations.push_back({{"cells", to_json(f.collection)["cells"]},
                            {"check", f.violation.check},
                            {"detail", f.violation.detail}});
    for (const auto& p : row.inconclusive) inconclusive.push_back(to_json(p)["cells"]);
    json totals;
    for (Status s : {Status::prime, Status::not_prime, Status::conjecturally_prime, Status::inconclusive})
      totals[to_string(s)] = row.count(s);
    rows.push_back({{"n", row.n},
                    {"collections", row.collections},
                    {"totals", totals},
                    {"weakly_closed_paths", row.weakly_closed_paths},
                    {"oracle", {{"runs", row.oracle_runs},
                                {"passed", row.oracle_passed},
                                {"skipped", row.oracle_skipped}}},
                    {"violations", violations},
                    {"inconclusive", inconclusive},
                    {"seconds", row.seconds}});
  }
  return {{"n_max", r.n_max}, {"degree", r.degree}, {"jobs", r.jobs},
          {"rows", rows},     {"violations", r.violation_count()}, {"seconds", r.seconds}};
}

inline std::string sweep_table(const SweepReport& r) {
  std::ostringstream os;
  os << std::setw(3) << "n" << std::setw(9) << "total" << std::setw(8) << "Prime" << std::setw(10)
     << "NotPrime" << std::setw(10) << "ConjPrime" << std::setw(8) << "Inconc" << std::setw(7) << "wcp"
     << std::setw(12) << "oracle" << std::setw(6) << "viol" << std::setw(10) << "seconds" << '\n';
  for (const auto& row : r.rows) {
    os << std::setw(3) << row.n << std::setw(9) << row.collections << std::setw(8)
       << row.count(Status::prime) << std::setw(10) << row.count(Status::not_prime) << std::setw(10)
       << row.count(Status::conjecturally_prime) << std::setw(8) << row.count(Status::inconclusive)
       << std::setw(7) << row.weakly_closed_paths << std::setw(12)
       << (std::to_string(row.oracle_passed) + "/" + std::to_string(row.oracle_runs)) << std::setw(6)
       << row.violations.size() << std::setw(10) << std::fixed << std::setprecision(2) << row.seconds
       << '\n';
  }
  os << "degree " << r.degree << ", jobs " << r.jobs << ", violations " << r.violation_count() << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Rendering

enum class Overlay { holes, edge_intervals, witness, walk };

inline Overlay overlay_from_string(const std::string& s) {
  if (s == "holes") return Overlay::holes;
  if (s == "edge-intervals") return Overlay::edge_intervals;
  if (s == "witness") return Overlay::witness;
  if (s == "walk") return Overlay::walk;
  throw Error("unknown overlay: " + s);
}

struct RenderEvidence {
  std::optional<ConfigurationWitness> witness;
  std::vector<Point> marked;
  std::optional<ZigZagWalk> walk;
};

/// Cells named by a configuration witness.
inline std::vector<Cell> witness_cells(const ConfigurationWitness& w) {
  std::vector<Cell> out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LConfiguration>) {
          out.assign(x.cells.begin(), x.cells.end());
        } else if constexpr (std::is_same_v<T, WeakLConfiguration>) {
          out.push_back(x.c);
          out.insert(out.end(), x.ab.cells.begin(), x.ab.cells.end());
          out.insert(out.end(), x.df.cells.begin(), x.df.cells.end());
        } else if constexpr (std::is_same_v<T, Ladder>) {
          for (const auto& b : x.blocks) out.insert(out.end(), b.cells.begin(), b.cells.end());
        } else {
          out.push_back(x.c);
          out.push_back(x.d);
          out.insert(out.end(), x.ab.cells.begin(), x.ab.cells.end());
        }
      },
      w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline void require_overlay_evidence(const std::vector<Overlay>& overlays, const RenderEvidence& ev) {
  for (Overlay o : overlays) {
    if (o == Overlay::witness && !ev.witness) throw Error("witness overlay needs a configuration witness");
    if (o == Overlay::walk && !ev.walk) throw Error("walk overlay needs a zig-zag walk");
  }
}

}  // namespace detail

/// '#' cells, '.' empty; overlays mark hole cells 'o' and witness cells '@'.
inline std::string render_ascii(const CellCollection& p, const std::vector<Overlay>& overlays = {},
                                const RenderEvidence& ev = {}) {
  detail::require_overlay_evidence(overlays, ev);
  auto rows = detail::ascii_canvas(p);
  const Point lo = p.min_cell(), hi = p.max_cell();
  auto put = [&](Cell c, char ch) {
    if (c.x() < lo.x || c.x() > hi.x || c.y() < lo.y || c.y() > hi.y) return;
    rows[static_cast<std::size_t>(hi.y - c.y())][static_cast<std::size_t>(c.x() - lo.x)] = ch;
  };
  for (Overlay o : overlays) {
    switch (o) {
      case Overlay::holes:
        for (const auto& h : holes(p))
          for (Cell c : h) put(c, 'o');
        break;
      case Overlay::witness:
        for (Cell c : witness_cells(*ev.witness)) put(c, '@');
        break;
      case Overlay::edge_intervals:
      case Overlay::walk:
        throw Error("overlay not available in ascii output");
    }
  }
  return detail::join_rows(rows);
}

inline constexpr int kSvgUnit = 24;

/// Fixed scale of kSvgUnit pixels per lattice unit, one unit of margin; each
/// overlay is a <g> layer with a stable id.
inline std::string render_svg(const CellCollection& p, const std::vector<Overlay>& overlays = {},
                              const RenderEvidence& ev = {}) {
  detail::require_overlay_evidence(overlays, ev);
  const auto box = p.bounding_box();
  const int w = (box.hi.x - box.lo.x + 2) * kSvgUnit;
  const int h = (box.hi.y - box.lo.y + 2) * kSvgUnit;
  auto sx = [&](int x) { return (x - box.lo.x + 1) * kSvgUnit; };
  auto sy = [&](int y) { return (box.hi.y - y + 1) * kSvgUnit; };
  std::ostringstream os;
  auto rect = [&](Cell c, const char* cls) {
    os << "    <rect class=\"" << cls << "\" x=\"" << sx(c.x()) << "\" y=\"" << sy(c.y() + 1)
       << "\" width=\"" << kSvgUnit << "\" height=\"" << kSvgUnit << "\"/>\n";
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  os << "  <style>.cell{fill:#dde6f0;stroke:#334;stroke-width:1}.hole{fill:#f4c7a1}"
        ".interval{stroke:#2a7;stroke-width:3}.witness{fill:#7ab87a;fill-opacity:0.6}"
        ".marked{fill:#b22}.walk{fill:none;stroke:#c22;stroke-width:2}"
        ".path{fill:none;stroke:#c22;stroke-width:1.5;stroke-dasharray:4 3}</style>\n";
  os << "  <g id=\"cells\">\n";
  for (Cell c : p) rect(c, "cell");
  os << "  </g>\n";
  for (Overlay o : overlays) {
    switch (o) {
      case Overlay::holes:
        os << "  <g id=\"holes\">\n";
        for (const auto& hole : holes(p))
          for (Cell c : hole) rect(c, "hole");
        os << "  </g>\n";
        break;
      case Overlay::edge_intervals:
        os << "  <g id=\"edge-intervals\">\n";
        for (Orientation orient : {Orientation::horizontal, Orientation::vertical})
          for (const auto& e : maximal_edge_intervals(p, orient)) {
            const Point a = e.start(), b = e.end();
            os << "    <line class=\"interval\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\""
               << sx(b.x) << "\" y2=\"" << sy(b.y) << "\"/>\n";
          }
        os << "  </g>\n";
        break;
      case Overlay::witness:
        os << "  <g id=\"witness\">\n";
        for (Cell c : witness_cells(*ev.witness)) rect(c, "witness");
        for (Point q : ev.marked)
          os << "    <circle class=\"marked\" cx=\"" << sx(q.x) << "\" cy=\"" << sy(q.y) << "\" r=\"4\"/>\n";
        os << "  </g>\n";
        break;
      case Overlay::walk:
        os << "  <g id=\"walk\">\n";
        for (const auto& s : ev.walk->steps) {
          const auto& i = s.interval;
          os << "    <rect class=\"walk\" x=\"" << sx(i.lo.x) << "\" y=\"" << sy(i.hi.y) << "\" width=\""
             << (i.hi.x - i.lo.x) * kSvgUnit << "\" height=\"" << (i.hi.y - i.lo.y) * kSvgUnit << "\"/>\n";
        }
        os << "    <polygon class=\"path\" points=\"";
        for (std::size_t k = 0; k < ev.walk->steps.size(); ++k) {
          const Point v = ev.walk->steps[k].v_entry;
          os << (k ? " " : "") << sx(v.x) << ',' << sy(v.y);
        }
        os << "\"/>\n  </g>\n";
        break;
    }
  }
  os << "</svg>\n";
  return os.str();
}

enum class RenderFormat { ascii, svg };

inline std::string render(const CellCollection& p, RenderFormat f, const std::vector<Overlay>& overlays = {},
                          const RenderEvidence& ev = {}) {
  return f == RenderFormat::ascii ? render_ascii(p, overlays, ev) : render_svg(p, overlays, ev);
}

// ---------------------------------------------------------------------------
// Computer-algebra export (Macaulay2 syntax; grammar in docs/cas-export.md).

inline std::string export_cas(const CellCollection& p, const std::optional<MonomialMap>& map = {}) {
  std::ostringstream os;
  const auto minors = inner_2_minors(p);
  os << "-- collection with " << p.size() << " cells, " << minors.size() << " inner 2-minors\n";
  os << "-- cells:";
  for (Cell c : p) os << ' ' << to_string(c);
  os << "\nR = QQ[";
  const auto vars = vertex_variables(p);
  for (std::size_t k = 0; k < vars.size(); ++k) os << (k ? ", " : "") << name(vars[k]);
  os << "];\nI = ideal(\n";
  for (std::size_t k = 0; k < minors.size(); ++k)
    os << "  " << to_string(minors[k]) << (k + 1 < minors.size() ? ",\n" : "\n");
  os << ");\n";
  if (!map) return os.str();

  std::set<VariableId> targets;
  for (const auto& [q, img] : map->images)
    for (const auto& [v, e] : img.terms()) targets.insert(v);
  os << "-- image table: vertex variable -> interval and hole variables\n";
  os << "S = QQ[";
  bool first = true;
  for (const auto& v : targets) {
    os << (first ? "" : ", ") << name(v);
    first = false;
  }
  os << "];\nphi = map(S, R, {\n";
  for (std::size_t k = 0; k < vars.size(); ++k)
    os << "  " << to_string(map->image(vars[k].point)) << (k + 1 < vars.size() ? ",\n" : "\n");
  os << "});\nJ = ker phi;\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Budget configuration. Files hold `key = value` lines; '#' starts a comment.
// The environment variable carries the same pairs separated by ',' or ';'.

inline constexpr const char* kBudgetEnvironmentVariable = "POLYIDEAL_BUDGET";

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
}

inline void apply_budget_pair(Budget& b, const std::string& key, const std::string& value, const std::string& where) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    if (!value.empty() && value[0] == '-') throw std::invalid_argument("negative");
    x = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw Error(where + ": value of " + key + " is not a non-negative integer");
  if (key == "zigzag_nodes")
    b.zigzag_nodes = x;
  else if (key == "zigzag_max_len")
    b.zigzag_max_len = x;
  else if (key == "oracle_degree")
    b.oracle_degree = static_cast<unsigned>(x);
  else if (key == "monomial_cap")
    b.monomial_cap = x;
  else
    throw Error(where + ": unknown key " + key);
}

}  // namespace detail

inline void apply_budget_text(Budget& b, const std::string& text, const std::string& origin) {
  std::istringstream is(text);
  int lineno = 0;
  for (std::string line; std::getline(is, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw Error(where + ": expected key = value");
    detail::apply_budget_pair(b, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)), where);
  }
}

inline void apply_budget_environment(Budget& b, const char* value) {
  if (!value) return;
  std::string text = value;
  std::replace(text.begin(), text.end(), ',', '\n');
  std::replace(text.begin(), text.end(), ';', '\n');
  apply_budget_text(b, text, kBudgetEnvironmentVariable);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace polyideal
