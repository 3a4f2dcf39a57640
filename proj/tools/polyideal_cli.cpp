// Command-line front end. Exit status: 0 verdict or result produced,
// 2 inconclusive, 1 error.

#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "polyideal/polyideal.hpp"

using namespace polyideal;

namespace {

constexpr int kExitInconclusive = 2;

struct Common {
  std::string input;
  std::string config;
  bool json = false;
  std::size_t zigzag_nodes = 0;
  std::size_t max_len = 0;
};

void add_common(CLI::App* sub, Common& c, bool needs_input = true) {
  if (needs_input) sub->add_option("--input", c.input, "collection file, ASCII grid or JSON; - for stdin")->required();
  sub->add_option("--config", c.config, "key = value file with search limits");
  sub->add_flag("--json", c.json, "machine-readable output");
  sub->add_option("--zigzag-nodes", c.zigzag_nodes, "node budget of the zig-zag search");
  sub->add_option("--max-len", c.max_len, "longest zig-zag walk searched");
}

CellCollection load(const Common& c) {
  std::string text;
  if (c.input == "-")
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  else
    text = read_file(c.input);
  std::vector<std::string> warnings;
  auto p = parse_collection(text, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return p;
}

// Defaults, then the config file, then the environment, then flags.
Budget budget_of(const Common& c) {
  Budget b;
  if (!c.config.empty()) apply_budget_text(b, read_file(c.config), c.config);
  apply_budget_environment(b, std::getenv(kBudgetEnvironmentVariable));
  if (c.zigzag_nodes) b.zigzag_nodes = c.zigzag_nodes;
  if (c.max_len) b.zigzag_max_len = c.max_len;
  return b;
}

std::vector<Point> parse_point_list(const std::string& s) {
  // "x,y;x,y;..."
  std::vector<Point> out;
  std::istringstream is(s);
  for (std::string item; std::getline(is, item, ';');) {
    if (item.empty()) continue;
    std::istringstream ps(item);
    Point q;
    char comma = 0;
    if (!(ps >> q.x >> comma >> q.y) || comma != ',' || !(ps >> std::ws).eof())
      throw Error("malformed vertex '" + item + "' (expected x,y)");
    out.push_back(q);
  }
  return out;
}

std::vector<Point> marked_from(const CellCollection& p, const std::string& text) {
  if (text.empty() || text == "none") return {};
  if (text != "auto") return parse_point_list(text);
  if (!is_polyomino(p) || !recognize_weakly_closed_path(p))
    throw Error("--marked auto needs a weakly closed path");
  auto w = find_any_prime_configuration(p);
  if (!w) throw Error("--marked auto: no configuration found");
  return marked_set_for_configuration(p, *w);
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "status: " << to_string(v.status) << "\nrule: " << to_string(v.rule) << "\ncitation: " << v.citation()
     << '\n';
  if (!v.reason.empty()) os << "reason: " << v.reason << '\n';
  if (v.path) os << "weakly closed path, hooking corner " << to_string(v.path->hooking_corner) << '\n';
  if (const auto* c = std::get_if<ChordalityCertificate>(&v.evidence))
    os << "G(P): " << c->v_nodes << " vertical + " << c->h_nodes << " horizontal intervals, " << c->edges
       << " edges, weakly chordal: " << (c->weakly_chordal ? "yes" : "no") << '\n';
  if (const auto* w = std::get_if<ZigZagWalk>(&v.evidence))
    os << "zig-zag walk (lo.x lo.y hi.x hi.y v.x v.y z.x z.y):\n" << to_text(*w);
  if (const auto* w = std::get_if<ConfigurationWitness>(&v.evidence)) os << "configuration: " << kind_name(*w) << '\n';
  if (v.oracle) {
    os << "marked:";
    for (Point q : v.marked) os << ' ' << to_string(q);
    os << '\n' << to_string(*v.oracle) << '\n';
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Inner 2-minor ideals of cell collections: primality evidence and tools"};
  app.require_subcommand(1);

  Common classify_opts, zigzag_opts, graph_opts, minors_opts, toric_opts, render_opts, sweep_opts, cas_opts;
  auto* cmd_classify = app.add_subcommand("classify", "primality verdict with evidence");
  add_common(cmd_classify, classify_opts);
  bool audit = false;
  cmd_classify->add_flag("--audit", audit, "also run the consistency audit");

  auto* cmd_zigzag = app.add_subcommand("zigzag", "search for a zig-zag walk");
  add_common(cmd_zigzag, zigzag_opts);

  auto* cmd_graph = app.add_subcommand("graph", "bipartite graph of maximal edge intervals");
  add_common(cmd_graph, graph_opts);

  auto* cmd_minors = app.add_subcommand("minors", "list the inner 2-minors");
  add_common(cmd_minors, minors_opts);

  auto* cmd_toric = app.add_subcommand("toric-check", "compare I_P with a toric kernel up to a degree");
  add_common(cmd_toric, toric_opts);
  unsigned degree = 3;
  std::string marked_arg;
  cmd_toric->add_option("--degree", degree, "degree bound")->required();
  cmd_toric->add_option("--marked", marked_arg, "auto, none, or x,y;x,y;... (default none: edge ring)");

  auto* cmd_render = app.add_subcommand("render", "draw a collection");
  add_common(cmd_render, render_opts);
  std::string format = "ascii";
  std::vector<std::string> overlays;
  cmd_render->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  cmd_render->add_option("--overlay", overlays, "holes, edge-intervals, witness, walk")->delimiter(',');

  auto* cmd_sweep = app.add_subcommand("sweep", "classify and audit all fixed polyominoes up to a size");
  add_common(cmd_sweep, sweep_opts, false);
  int max_n = 8;
  unsigned sweep_degree = 3;
  unsigned jobs = 1;
  cmd_sweep->add_option("--max-n", max_n, "largest cell count");
  cmd_sweep->add_option("--degree", sweep_degree, "degree bound of the toric comparison");
  cmd_sweep->add_option("--jobs", jobs, "worker threads");

  auto* cmd_cas = app.add_subcommand("export-cas", "Macaulay2 script for I_P and optionally a toric map");
  add_common(cmd_cas, cas_opts);
  std::string cas_marked;
  cmd_cas->add_option("--marked", cas_marked, "auto, none, or x,y;x,y;...; adds the image table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (cmd_classify->parsed()) {
    const auto p = load(classify_opts);
    const auto b = budget_of(classify_opts);
    const Verdict v = classify(p, b);
    std::vector<Violation> violations;
    if (audit) violations = consistency_audit(p, v, b);
    if (classify_opts.json) {
      json j = to_json(v);
      if (audit) {
        j["audit"] = json::array();
        for (const auto& x : violations) j["audit"].push_back({{"check", x.check}, {"detail", x.detail}});
      }
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << verdict_text(v);
      if (audit) {
        std::cout << "audit: " << violations.size() << " violations\n";
        for (const auto& x : violations) std::cout << "  " << x.check << ": " << x.detail << '\n';
      }
    }
    return v.status == Status::inconclusive ? kExitInconclusive : 0;
  }

  if (cmd_zigzag->parsed()) {
    const auto p = load(zigzag_opts);
    const auto b = budget_of(zigzag_opts);
    const auto r = find_zigzag_walk(p, b.zigzag_max_len, b.zigzag_nodes);
    if (zigzag_opts.json) {
      json j{{"status", to_string(r.status)}, {"nodes", r.nodes}, {"max_len", r.max_len}};
      if (r.walk) j["walk"] = to_json(*r.walk);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "status: " << to_string(r.status) << " (" << r.nodes << " nodes, max length " << r.max_len
                << ")\n";
      if (r.walk) std::cout << to_text(*r.walk);
    }
    return r.status == SearchStatus::inconclusive ? kExitInconclusive : 0;
  }

  if (cmd_graph->parsed()) {
    const auto p = load(graph_opts);
    const auto g = build_graph(p);
    const bool chordal = is_weakly_chordal(g);
    if (graph_opts.json) {
      json v = json::array(), h = json::array(), e = json::array();
      for (const auto& x : g.v_nodes()) v.push_back({x.line, x.lo, x.hi});
      for (const auto& x : g.h_nodes()) h.push_back({x.line, x.lo, x.hi});
      for (const auto& x : g.edges()) e.push_back({x.v, x.h, to_json(x.witness)});
      std::cout << json{{"vertical", v}, {"horizontal", h}, {"edges", e}, {"weakly_chordal", chordal}}.dump(2)
                << '\n';
    } else {
      std::cout << dump_graph(g) << "weakly chordal: " << (chordal ? "yes" : "no") << '\n';
    }
    return 0;
  }

  if (cmd_minors->parsed()) {
    const auto p = load(minors_opts);
    const auto m = inner_2_minors(p);
    if (minors_opts.json) {
      json a = json::array();
      for (const auto& f : m) a.push_back(to_string(f));
      std::cout << json{{"count", m.size()}, {"minors", a}}.dump(2) << '\n';
    } else {
      for (const auto& f : m) std::cout << to_string(f) << '\n';
      std::cout << m.size() << " inner 2-minors\n";
    }
    return 0;
  }

  if (cmd_toric->parsed()) {
    const auto p = load(toric_opts);
    const auto b = budget_of(toric_opts);
    const auto marked = marked_from(p, marked_arg);
    const auto r = toric_equality_report(p, hole_toric_map(p, marked), degree, b.monomial_cap);
    if (toric_opts.json) {
      json j = to_json(r);
      j["marked"] = to_json(marked);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "marked:";
      for (Point q : marked) std::cout << ' ' << to_string(q);
      std::cout << '\n' << to_string(r) << '\n';
    }
    return 0;
  }

  if (cmd_render->parsed()) {
    const auto p = load(render_opts);
    const auto b = budget_of(render_opts);
    std::vector<Overlay> ov;
    for (const auto& s : overlays) ov.push_back(overlay_from_string(s));
    RenderEvidence ev;
    if (std::find(ov.begin(), ov.end(), Overlay::witness) != ov.end()) {
      if (is_polyomino(p) && recognize_weakly_closed_path(p)) ev.witness = find_any_prime_configuration(p);
      if (!ev.witness) throw Error("witness overlay: no configuration witness for this collection");
      ev.marked = marked_set_for_configuration(p, *ev.witness);
    }
    if (std::find(ov.begin(), ov.end(), Overlay::walk) != ov.end()) {
      auto r = find_zigzag_walk(p, b.zigzag_max_len, b.zigzag_nodes);
      if (!r.walk) throw Error(std::string("walk overlay: zig-zag search returned ") + to_string(r.status));
      ev.walk = r.walk;
    }
    const auto out = render(p, format == "svg" ? RenderFormat::svg : RenderFormat::ascii, ov, ev);
    std::cout << out;
    if (format == "ascii") std::cout << '\n';
    return 0;
  }

  if (cmd_sweep->parsed()) {
    const auto b = budget_of(sweep_opts);
    const auto r = conjecture_sweep(max_n, sweep_degree, jobs, b);
    if (sweep_opts.json)
      std::cout << to_json(r).dump(2) << '\n';
    else
      std::cout << sweep_table(r);
    std::size_t inconclusive = 0;
    for (const auto& row : r.rows) inconclusive += row.count(Status::inconclusive);
    return inconclusive ? kExitInconclusive : 0;
  }

  if (cmd_cas->parsed()) {
    const auto p = load(cas_opts);
    std::optional<MonomialMap> map;
    if (!cas_marked.empty()) map = hole_toric_map(p, marked_from(p, cas_marked));
    std::cout << export_cas(p, map);
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
