#include "mckay/cli.hpp"

#include "mckay/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <locale>
#include <numeric>
#include <optional>
#include <sstream>

namespace mckay {

namespace {

struct Config {
  std::string command;
  std::string group;
  std::string json_path;
  std::string svg_path;
  std::size_t max_order = 200;
  std::int64_t r = 0;
  bool quiet = false;
};

// Thrown for errors that map directly to an exit code.
struct Exit {
  int code;
  std::string message;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Exit{kExitUsage, "cannot write " + path};
  f << text;
  if (!f) throw Exit{kExitUsage, "cannot write " + path};
}

GroupSpec load_group(const Config& cfg) {
  GroupSpec g;
  try {
    g = parse_group(cfg.group);
  } catch (const ParseError& e) {
    throw Exit{kExitBadGroup, std::string("invalid group: ") + e.what()};
  } catch (const DomainError& e) {
    throw Exit{kExitBadGroup, std::string("invalid group: ") + e.what()};
  }
  if (g.order() > cfg.max_order)
    throw Exit{kExitBadGroup, "group order " + std::to_string(g.order()) + " exceeds --max-order " +
                                  std::to_string(cfg.max_order)};
  return g;
}

void need_dim(const GroupSpec& g, int n, const std::string& command) {
  if (g.dim() != n)
    throw Exit{kExitBadGroup, command + " needs a group acting on C^" + std::to_string(n) + ", got " + g.to_string()};
}

// Left-aligned column of at least w characters, always followed by a space.
std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

int cmd_info(const Config& cfg, std::ostream& out) {
  auto g = load_group(cfg);
  const bool sl = is_gorenstein(g);
  out << "group              " << g.to_string() << "\n";
  out << "dimension          " << g.dim() << "\n";
  out << "order              " << g.order() << "\n";
  out << "exponent           " << g.exponent() << "\n";
  out << "cyclic generator   " << yes(g.is_cyclic_single()) << "\n";
  out << "gorenstein         " << yes(sl) << "\n";
  if (sl) out << "junior elements    " << junior_elements(g).size() << "\n";
  out << "fixes only origin  " << yes(g.fixes_only_origin()) << "\n";
  out << "quasireflections   " << yes(g.has_quasireflections()) << "\n";
  auto se = stringy_euler(g);
  out << "stringy euler      " << se.value << (se.stratified ? " (stratified case, not applied)" : "") << "\n";
  std::vector<std::string> cs;
  for (const auto& c : g.characters()) cs.push_back(c.to_string());
  out << "characters         " << join(cs, " ") << "\n";
  return kExitOk;
}

int cmd_surface(const Config& cfg, std::ostream& out) {
  auto g = load_group(cfg);
  need_dim(g, 2, "surface");
  if (!g.is_cyclic_single()) throw Exit{kExitBadGroup, "surface needs a cyclic group 1/r(a,b)"};
  const auto& gen = g.generators().front();
  std::int64_t r = gen.r, a = gen.weights[0], b = gen.weights[1];
  if (std::gcd(a, r) != 1 || std::gcd(b, r) != 1)
    throw Exit{kExitBadGroup, "surface needs weights prime to r, got " + g.to_string()};
  // rewrite as 1/r(1,q) with q = b / a mod r
  std::int64_t inv = 1;
  while (mod(inv * a, r) != 1) ++inv;
  std::int64_t q = mod(b * inv, r);
  SurfaceResolution s;
  try {
    s = resolve_surface(r, q);
  } catch (const DomainError& e) {
    throw Exit{kExitBadGroup, e.what()};
  }
  if (!cfg.json_path.empty()) write_file(cfg.json_path, surface_to_json(s).dump(2) + "\n");
  if (cfg.quiet) return kExitOk;

  std::vector<std::string> terms;
  for (auto t : s.fraction.terms) terms.push_back(std::to_string(t));
  out << "1/" << r << "(1," << q << ")\n";
  out << "continued fraction  " << r << "/" << q << " = [" << join(terms, ",") << "]\n";
  std::vector<std::string> pts;
  for (const auto& p : s.boundary_points) pts.push_back(p.to_string());
  out << "newton boundary     " << join(pts, " ") << "\n\n";
  out << pad("curve", 6) << pad("ray", 12) << pad("E^2", 4) << pad("ratio", 12) << "character\n";
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    const auto& c = s.curves[i];
    out << pad("E" + std::to_string(i + 1), 6) << pad(c.ray.to_string(), 12)
        << pad(std::to_string(c.self_intersection), 4) << pad(c.ratio_x.to_string() + " : " + c.ratio_y.to_string(), 12)
        << c.character << "\n";
  }
  out << "\ncharts\n";
  for (const auto& ch : s.charts) {
    std::vector<std::string> eqs;
    for (const auto& e : ch.equations) eqs.push_back(SurfaceChart::format(e));
    out << "  " << ch.v.to_string() << " " << ch.w.to_string() << ": " << join(eqs, ", ") << "\n";
  }
  out << "\ndual degrees (rows: curve characters, columns: curves)\n";
  for (const auto& row : dual_degrees_2d(r, q)) {
    std::vector<std::string> v;
    for (const auto& d : row) v.push_back(to_decimal(d));
    out << "  " << join(v, " ") << "\n";
  }
  return kExitOk;
}

Fan3 load_fan(const GroupSpec& g, const Config& cfg) {
  try {
    return build_fan(g, {cfg.max_order, 1, true});
  } catch (const VerificationError& e) {
    throw Exit{kExitVerification, e.what()};
  }
}

void print_cones(const Fan3& f, std::ostream& out) {
  const GroupSpec& g = f.group();
  out << "cone  rays / chart\n";
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    std::vector<LatticePoint> rays;
    std::vector<std::string> names;
    for (auto v : f.cones()[i]) {
      rays.push_back(f.vertices()[v]);
      names.push_back(f.vertices()[v].to_string());
    }
    out << pad(std::to_string(i), 5) << join(names, " ") << "\n";
    if (f.tripods().empty()) continue;
    auto chart = chart_of_tripod(f.tripods()[i], g, rays);
    std::vector<std::string> eqs;
    for (const auto& e : chart.equations) eqs.push_back(Chart::format(e));
    out << "      " << orientation_name(chart.orientation) << ": " << join(eqs, ", ") << "\n";
  }
}

int cmd_resolve(const Config& cfg, std::ostream& out, std::ostream& err) {
  auto g = load_group(cfg);
  need_dim(g, 3, "resolve");
  auto f = load_fan(g, cfg);
  if (!cfg.json_path.empty()) {
    Json j = fan_to_json(f);
    Json checks = Json::array();
    for (const auto& c : f.report().checks)
      checks.push_back({{"name", c.name},
                        {"status", c.passed ? "PASS" : (c.warning_only ? "WARN" : "FAIL")},
                        {"failures", c.failures}});
    j["checks"] = checks;
    write_file(cfg.json_path, j.dump(2) + "\n");
  }
  if (!cfg.svg_path.empty()) write_file(cfg.svg_path, emit_svg(f));
  if (!cfg.quiet) {
    out << "G-Hilb fan of " << g.to_string() << ": " << f.cones().size() << " cones, " << f.vertices().size()
        << " rays, " << interior_edges(f).size() << " interior edges, " << hexagon_census(f).size()
        << " hexagons\n\n";
    print_cones(f, out);
    out << "\n" << f.report().to_string();
  }
  if (!f.report().ok()) {
    err << "fan verification failed\n" << f.report().to_string();
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_mckay(const Config& cfg, std::ostream& out, std::ostream& err) {
  auto g = load_group(cfg);
  need_dim(g, 3, "mckay");
  if (!is_gorenstein(g)) throw Exit{kExitNotGorenstein, "mckay needs a Gorenstein group; " + g.to_string() + " is not"};
  auto f = load_fan(g, cfg);
  std::optional<Correspondence> c;
  try {
    c = mckay_correspondence(f);
  } catch (const Error& e) {
    throw Exit{kExitVerification, e.what()};
  }
  auto report = verify_all(g, {cfg.max_order, 1});
  if (!cfg.json_path.empty()) {
    Json j = correspondence_to_json(f, *c);
    j["verification"] = report.to_json();
    write_file(cfg.json_path, j.dump(2) + "\n");
  }
  if (!cfg.svg_path.empty()) write_file(cfg.svg_path, emit_svg(f));
  if (!cfg.quiet) {
    const auto& verts = f.vertices();
    out << "McKay correspondence for " << g.to_string() << "\n\ncurves\n";
    auto inner = interior_edges(f);
    std::vector<std::string> ends, ratios;
    std::size_t we = 0, wr = 0, wv = 0;
    for (std::size_t k = 0; k < inner.size(); ++k) {
      const auto& e = f.edges()[inner[k]];
      ends.push_back(verts[e.rays[0]].to_string() + " -- " + verts[e.rays[1]].to_string());
      ratios.push_back(c->labels[k].ratio());
      we = std::max(we, ends.back().size());
      wr = std::max(wr, ratios.back().size());
    }
    for (std::size_t k = 0; k < inner.size(); ++k)
      out << "  " << pad(ends[k], we + 2) << pad(ratios[k], wr + 2) << "character "
          << g.characters()[c->labels[k].character].to_string() << "\n";
    out << "\nsurfaces\n";
    for (const auto& s : c->surfaces) wv = std::max(wv, verts[s.vertex].to_string().size());
    for (const auto& s : c->surfaces) {
      std::vector<std::string> si;
      for (auto x : s.self_intersections) si.push_back(std::to_string(x));
      out << "  " << pad(verts[s.vertex].to_string(), wv + 2) << "self-intersections " << join(si, " ");
      if (s.relation) {
        const auto& h = *s.relation;
        auto ch = [&](std::size_t a) { return g.characters()[a].to_string(); };
        out << "   hexagon e = {" << ch(h.e[0]) << " " << ch(h.e[1]) << " " << ch(h.e[2]) << "} f = {" << ch(h.f[0])
            << " " << ch(h.f[1]) << "}" << (h.ambiguous ? " (ambiguous)" : "") << " c2 = " << to_decimal(*s.c2_value);
      }
      out << "\n";
    }
    out << "\n" << pad("character", 10) << pad("role", 13) << pad("edges", 6) << pad("hexagons", 9) << "relations\n";
    for (const auto& row : c->table) {
      std::string ch = g.characters()[row.character].to_string();
      std::string role(role_name(row.role));
      std::vector<std::string> rel;
      for (const auto& p : row.relations)
        rel.push_back(std::to_string(p.i) + "+" + std::to_string(p.j) + "=" + std::to_string(p.k));
      out << pad(ch, 10) << pad(role, 13) << pad(std::to_string(row.edges.size()), 6)
          << pad(std::to_string(row.hexagons.size()), 9) << join(rel, " ") << "\n";
    }
    out << "\n" << report.to_string();
  }
  if (!report.ok()) {
    err << "verification failed\n" << report.to_string();
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_oracle(const Config& cfg, std::ostream& out, std::ostream& err) {
  auto g = load_group(cfg);
  std::vector<Tripod> brute, search;
  try {
    brute = enumerate_tripods_oracle(g, cfg.max_order);
    search = enumerate_tripods(g, {cfg.max_order, 1});
  } catch (const DomainError& e) {
    throw Exit{kExitBadGroup, e.what()};
  }
  bool agree = brute == search;
  bool count = brute.size() == g.order();
  std::string fan = "not built (n = " + std::to_string(g.dim()) + ")";
  bool fan_ok = true;
  if (g.dim() == 3) {
    auto f = load_fan(g, cfg);
    fan_ok = f.report().ok();
    fan = fan_ok ? "verified, " + std::to_string(f.cones().size()) + " cones" : "FAILED";
  }
  if (!cfg.quiet) {
    out << "oracle for " << g.to_string() << "\n";
    out << "  exhaustive tripods  " << brute.size() << "\n";
    out << "  search tripods      " << search.size() << "\n";
    out << "  |G|                 " << g.order() << "\n";
    out << "  sets agree          " << yes(agree) << "\n";
    out << "  fan                 " << fan << "\n";
  }
  if (!agree || !count || !fan_ok) {
    err << "oracle disagreement for " << g.to_string() << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_heuristic(const Config& cfg, std::ostream& out) {
  Heuristic4d h;
  try {
    h = heuristic_4d(cfg.r);
  } catch (const DomainError& e) {
    throw Exit{kExitBadGroup, e.what()};
  }
  if (!cfg.quiet) {
    out << "1/" << cfg.r << "(1,1,1," << cfg.r - 3 << ")\n";
    out << "  junior elements     " << h.junior_count << "\n";
    out << "  basic               " << yes(h.basic) << "\n";
    out << "  heuristic predicts  " << yes(h.heuristic_predicts) << "\n";
  }
  return kExitOk;
}

int dispatch(const Config& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "info") return cmd_info(cfg, out);
    if (cfg.command == "surface") return cmd_surface(cfg, out);
    if (cfg.command == "resolve") return cmd_resolve(cfg, out, err);
    if (cfg.command == "mckay") return cmd_mckay(cfg, out, err);
    if (cfg.command == "oracle") return cmd_oracle(cfg, out, err);
    return cmd_heuristic(cfg, out);
  } catch (const Exit& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return kExitBadGroup;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"G-Hilbert scheme resolutions and the McKay correspondence for abelian quotient singularities", "mckay"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--max-order", cfg.max_order, "largest group order accepted")->capture_default_str();
  app.add_flag("--quiet", cfg.quiet, "suppress the human-readable output");

  auto group_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("group", cfg.group, "e.g. 1/13(1,2,10) or 1/5(1,4,0);1/5(0,1,4)")->required();
    return sub;
  };
  group_cmd("info", "group order, age data and characters");
  group_cmd("surface", "minimal resolution of 1/r(a,b)")->add_option("--json", cfg.json_path, "write JSON");
  for (const char* name : {"resolve", "mckay"}) {
    auto* sub = group_cmd(name, std::string(name) == "resolve" ? "the G-Hilb fan with its charts"
                                                               : "curve labels, bundle degrees and surfaces");
    sub->add_option("--json", cfg.json_path, "write JSON");
    sub->add_option("--svg", cfg.svg_path, "write an SVG drawing");
  }
  group_cmd("oracle", "exhaustive tripod enumeration against the search");
  app.add_subcommand("heuristic4d", "crepancy heuristic for 1/r(1,1,1,r-3)")
      ->add_option("--r", cfg.r, "r >= 4")
      ->required();

  std::vector<std::string> argv_s{"mckay"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_s) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  // numbers must not pick up separators from the caller's or the global locale
  std::ostringstream o, e;
  o.imbue(std::locale::classic());
  e.imbue(std::locale::classic());
  int code = dispatch(cfg, o, e);
  out << o.str();
  err << e.str();
  return code;
}

}  // namespace mckay
