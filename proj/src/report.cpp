#include "mckay/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <locale>
#include <sstream>

namespace mckay {

namespace {

Json int_json(const Int& v) { return to_i64(v); }

Json ints_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

Json index_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer in JSON, got " + j.dump());
  return j.get<std::int64_t>();
}

LatticePoint point_from_json(const Json& j, const GroupSpec& g) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(g.dim()) + 1)
    throw ParseError("a point is [num..., den] with " + std::to_string(g.dim() + 1) + " entries");
  std::vector<Int> num;
  for (std::size_t i = 0; i + 1 < j.size(); ++i) num.emplace_back(as_int(j[i]));
  Int den(as_int(j.back()));
  if (den <= 0) throw ParseError("point denominator must be positive");
  return g.point(std::move(num), den);
}

Monomial monomial_from_json(const Json& j, int n) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) throw ParseError("bad monomial " + j.dump());
  std::array<int, 3> e{};
  for (int i = 0; i < n; ++i) {
    auto v = as_int(j[static_cast<std::size_t>(i)]);
    if (v < 0) throw ParseError("negative exponent in " + j.dump());
    e[static_cast<std::size_t>(i)] = static_cast<int>(v);
  }
  return Monomial(n, e);
}

CheckStatus from_fan_check(const FanCheck& c) {
  if (c.passed) return CheckStatus::Pass;
  return c.warning_only ? CheckStatus::Warn : CheckStatus::Fail;
}

// SVG geometry

constexpr double kSide = 1000.0;
constexpr double kMarginX = 80.0;
constexpr double kMarginTop = 60.0;
constexpr double kLegend = 150.0;
constexpr double kVertexRadius = 3.5;
constexpr double kEdgeLabelOffset = 10.0;

const double kHeight = kSide * std::sqrt(3.0) / 2.0;

struct Pt {
  double x = 0, y = 0;
};

Pt place(const LatticePoint& p) {
  double c[3];
  double s = 0;
  for (std::size_t i = 0; i < 3; ++i) s += c[i] = p.coord(i).convert_to<double>();
  for (double& v : c) v /= s;
  return {kMarginX + c[0] * kSide / 2 + c[2] * kSide, kMarginTop + (c[1] + c[2]) * kHeight};
}

std::string num(double v) {
  if (std::fabs(v) < 0.005) v = 0;
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string numerators(const LatticePoint& p, const GroupSpec& g) {
  auto v = p.scaled_to(g.exponent());
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_decimal(v[i]);
  return s;
}

}  // namespace

Json monomial_json(const Monomial& m) {
  Json out = Json::array();
  for (int e : m.exps()) out.push_back(e);
  return out;
}

Json point_json(const LatticePoint& p) {
  Json out = ints_json(p.num());
  out.push_back(int_json(p.den()));
  return out;
}

Json group_json(const GroupSpec& g) {
  Json j;
  j["spec"] = g.to_string();
  j["n"] = g.dim();
  j["order"] = g.order();
  j["exponent"] = g.exponent();
  j["gorenstein"] = is_gorenstein(g);
  j["fixes_only_origin"] = g.fixes_only_origin();
  j["quasireflections"] = g.has_quasireflections();
  Json chars = Json::array();
  for (const auto& c : g.characters()) chars.push_back(c.to_string());
  j["characters"] = chars;
  return j;
}

Json fan_to_json(const Fan3& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = f.group().to_string();
  Json verts = Json::array();
  for (const auto& v : f.vertices()) verts.push_back(point_json(v));
  j["vertices"] = verts;
  Json cones = Json::array();
  for (const auto& c : f.cones()) cones.push_back({c[0], c[1], c[2]});
  j["cones"] = cones;
  Json edges = Json::array();
  for (const auto& e : f.edges()) edges.push_back({{"rays", {e.rays[0], e.rays[1]}}, {"interior", e.interior}});
  j["edges"] = edges;
  Json trip = Json::array();
  for (const auto& t : f.tripods()) {
    Json basis = Json::array();
    for (const auto& m : t.chosen) basis.push_back(monomial_json(m));
    trip.push_back(basis);
  }
  j["tripods"] = trip;
  return j;
}

Fan3 fan_from_json(const Json& j) {
  const auto& version = field(j, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion)
    throw ParseError("unsupported schema_version " + version.dump());
  const auto& spec = field(j, "group");
  if (!spec.is_string()) throw ParseError("group must be a string");
  GroupSpec g = parse_group(spec.get<std::string>());
  if (g.dim() != 3) throw DomainError("fans are three-dimensional");

  std::vector<LatticePoint> verts;
  const auto& jv = field(j, "vertices");
  if (!jv.is_array()) throw ParseError("vertices must be an array");
  for (const auto& p : jv) verts.push_back(point_from_json(p, g));

  std::vector<std::array<std::size_t, 3>> cones;
  const auto& jc = field(j, "cones");
  if (!jc.is_array()) throw ParseError("cones must be an array");
  for (const auto& c : jc) {
    if (!c.is_array() || c.size() != 3) throw ParseError("a cone is three vertex indices");
    std::array<std::size_t, 3> k{};
    for (std::size_t i = 0; i < 3; ++i) {
      auto v = as_int(c[i]);
      if (v < 0 || static_cast<std::size_t>(v) >= verts.size()) throw ParseError("cone vertex index out of range");
      k[i] = static_cast<std::size_t>(v);
    }
    cones.push_back(k);
  }

  std::vector<Tripod> tripods;
  if (j.contains("tripods")) {
    const auto& jt = j.at("tripods");
    if (!jt.is_array()) throw ParseError("tripods must be an array");
    for (const auto& t : jt) {
      if (!t.is_array() || t.size() != g.order()) throw ParseError("a tripod lists one monomial per character");
      Tripod tr;
      tr.n = 3;
      for (const auto& m : t) tr.chosen.push_back(monomial_from_json(m, 3));
      tripods.push_back(std::move(tr));
    }
    if (!tripods.empty() && tripods.size() != cones.size()) throw ParseError("tripods and cones differ in number");
  }
  return fan_from_parts(g, std::move(verts), std::move(cones), std::move(tripods));
}

Json correspondence_to_json(const Fan3& f, const Correspondence& c) {
  const GroupSpec& g = f.group();
  Json j = fan_to_json(f);
  auto inner = interior_edges(f);
  for (std::size_t k = 0; k < inner.size(); ++k) {
    auto& e = j["edges"][inner[k]];
    const auto& l = c.labels[k];
    e["character"] = l.character;
    e["ratio"] = {{"pos", monomial_json(l.positive)}, {"neg", monomial_json(l.negative)}};
    e["in_generators"] = l.in_generators;
  }

  Json surfaces = Json::array();
  for (const auto& s : c.surfaces) {
    Json js;
    js["vertex"] = s.vertex;
    js["link"] = index_json(s.link);
    js["self_intersections"] = s.self_intersections;
    js["kind"] = s.kind == SurfaceKind::Hexagon ? "hexagon" : "other";
    if (s.relation) {
      js["e_chars"] = {s.relation->e[0], s.relation->e[1], s.relation->e[2]};
      js["f_chars"] = {s.relation->f[0], s.relation->f[1]};
      js["f1_candidates"] = index_json(s.relation->f1_candidates);
      js["f2_candidates"] = index_json(s.relation->f2_candidates);
      js["ambiguous"] = s.relation->ambiguous;
    } else {
      js["e_chars"] = Json::array();
      js["f_chars"] = Json::array();
    }
    js["c2"] = s.c2_value ? int_json(*s.c2_value) : Json(nullptr);
    surfaces.push_back(js);
  }
  j["surfaces"] = surfaces;

  Json bundles = Json::array();
  for (const auto& b : c.bundles) bundles.push_back({{"character", b.character}, {"degrees", ints_json(b.degrees)}});
  j["bundles"] = bundles;

  Json pairs = Json::array();
  for (const auto& p : c.pairs)
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"k", p.k},
                     {"bundle_additive", p.bundle_additive},
                     {"module_equal", p.module_equal}});
  j["pairs"] = pairs;

  Json table = Json::array();
  for (const auto& row : c.table) {
    Json rel = Json::array();
    for (const auto& p : row.relations) rel.push_back({p.i, p.j, p.k});
    table.push_back({{"character", row.character},
                     {"label", g.characters()[row.character].to_string()},
                     {"role", role_name(row.role)},
                     {"details", {{"edges", index_json(row.edges)}, {"hexagons", index_json(row.hexagons)}, {"relations", rel}}}});
  }
  j["table"] = table;
  j["dual_basis"] = {{"checked", c.dual.checked}, {"violations", c.dual.violations}};
  return j;
}

Json surface_to_json(const SurfaceResolution& s) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = s.group.to_string();
  j["r"] = s.r;
  j["q"] = s.q;
  j["terms"] = s.fraction.terms;
  Json pts = Json::array();
  for (const auto& p : s.boundary_points) pts.push_back(point_json(p));
  j["boundary_points"] = pts;
  Json curves = Json::array();
  for (const auto& c : s.curves)
    curves.push_back({{"ray", point_json(c.ray)},
                      {"self_intersection", c.self_intersection},
                      {"ratio", {{"x", monomial_json(c.ratio_x)}, {"y", monomial_json(c.ratio_y)}}},
                      {"character", c.character}});
  j["curves"] = curves;
  Json charts = Json::array();
  for (const auto& ch : s.charts) {
    Json eqs = Json::array();
    for (const auto& e : ch.equations)
      eqs.push_back({{"lhs", monomial_json(e.lhs)}, {"rhs", monomial_json(e.rhs)}, {"coeff", e.coeff}});
    charts.push_back({{"v", point_json(ch.v)}, {"w", point_json(ch.w)}, {"equations", eqs}});
  }
  j["charts"] = charts;
  Json dual = Json::array();
  for (const auto& row : dual_degrees_2d(s.r, s.q)) dual.push_back(ints_json(row));
  j["dual_degrees"] = dual;
  return j;
}

std::string emit_svg(const Fan3& f) {
  const GroupSpec& g = f.group();
  const double width = kSide + 2 * kMarginX;
  const double height = kMarginTop + kHeight + kLegend;
  std::vector<Pt> pos;
  for (const auto& v : f.vertices()) pos.push_back(place(v));

  std::ostringstream o;
  o.imbue(std::locale::classic());
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
    << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  o << "<title>G-Hilb fan of " << g.to_string() << "</title>\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";

  auto hexagons = hexagon_census(f);
  o << "<g id=\"hexagons\" fill=\"#e8b552\" fill-opacity=\"0.45\" stroke=\"none\">\n";
  for (auto v : hexagons) {
    std::vector<std::size_t> link;
    for (auto c : f.star(v))
      for (auto u : f.cones()[c])
        if (u != v && std::find(link.begin(), link.end(), u) == link.end()) link.push_back(u);
    const Pt c = pos[v];
    std::sort(link.begin(), link.end(), [&](std::size_t a, std::size_t b) {
      return std::atan2(pos[a].y - c.y, pos[a].x - c.x) < std::atan2(pos[b].y - c.y, pos[b].x - c.x);
    });
    o << "<polygon points=\"";
    for (std::size_t i = 0; i < link.size(); ++i) o << (i ? " " : "") << num(pos[link[i]].x) << "," << num(pos[link[i]].y);
    o << "\"/>\n";
  }
  o << "</g>\n";

  o << "<g id=\"edges\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& e : f.edges()) {
    const Pt a = pos[e.rays[0]], b = pos[e.rays[1]];
    o << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
      << "\"/>\n";
  }
  o << "</g>\n";

  o << "<g id=\"vertices\" fill=\"black\">\n";
  for (const auto& p : pos)
    o << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(kVertexRadius) << "\"/>\n";
  o << "</g>\n";

  // label at the midpoint, pushed along the normal that points up (or right
  // for horizontal normals)
  std::ostringstream edge_text;
  edge_text.imbue(std::locale::classic());
  for (auto i : interior_edges(f)) {
    const auto& e = f.edges()[i];
    const Pt a = pos[e.rays[0]], b = pos[e.rays[1]];
    double dx = b.x - a.x, dy = b.y - a.y, len = std::hypot(dx, dy);
    double nx = -dy / len, ny = dx / len;
    if (ny > 0 || (ny == 0 && nx < 0)) nx = -nx, ny = -ny;
    auto l = edge_label(f.vertices()[e.rays[0]], f.vertices()[e.rays[1]], g);
    edge_text << "<text x=\"" << num((a.x + b.x) / 2 + kEdgeLabelOffset * nx) << "\" y=\""
              << num((a.y + b.y) / 2 + kEdgeLabelOffset * ny) << "\">" << g.characters()[l.character].to_string()
              << "</text>\n";
  }

  std::string vertex_text;
  for (std::size_t v = 0; v < pos.size(); ++v) {
    const auto& p = f.vertices()[v];
    std::string text = numerators(p, g);
    double dy = -7;
    if (p.is_coordinate_ray()) {
      text = std::string(1, "xyz"[p.num()[0] != 0 ? 0 : p.num()[1] != 0 ? 1 : 2]);
      dy = p.num()[0] != 0 ? -10 : 18;
    }
    vertex_text += "<text x=\"" + num(pos[v].x) + "\" y=\"" + num(pos[v].y + dy) + "\">" + text + "</text>\n";
  }

  // each label group is drawn twice: a white outline keeps lines off the text
  const std::string edge_font = "font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
                                "dominant-baseline=\"central\"";
  const std::string vertex_font = "font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\"";
  const std::string halo = " fill=\"white\" stroke=\"white\" stroke-width=\"3\">\n";
  o << "<g id=\"edge-label-halo\" " << edge_font << halo << edge_text.str() << "</g>\n";
  o << "<g id=\"edge-labels\" " << edge_font << " fill=\"#1f4e9c\">\n" << edge_text.str() << "</g>\n";
  o << "<g id=\"vertex-label-halo\" " << vertex_font << halo << vertex_text << "</g>\n";
  o << "<g id=\"vertex-labels\" " << vertex_font << " fill=\"#555555\">\n" << vertex_text << "</g>\n";

  const double ly = kMarginTop + kHeight + 40;
  o << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"13\" fill=\"black\">\n";
  o << "<text x=\"" << num(kMarginX) << "\" y=\"" << num(ly) << "\">" << g.to_string() << ": " << f.cones().size()
    << " cones, " << interior_edges(f).size() << " interior edges, " << hexagons.size() << " hexagons</text>\n";
  o << "<text x=\"" << num(kMarginX) << "\" y=\"" << num(ly + 22)
    << "\">vertices: numerators of the junior points; edges: character of the curve's ratio</text>\n";
  o << "<rect x=\"" << num(kMarginX) << "\" y=\"" << num(ly + 34) << "\" width=\"16\" height=\"12\" fill=\"#e8b552\" fill-opacity=\"0.45\"/>\n";
  o << "<text x=\"" << num(kMarginX + 24) << "\" y=\"" << num(ly + 45)
    << "\">star of a vertex whose surface is a hexagon</text>\n";
  o << "</g>\n";
  o << "</svg>\n";
  return o.str();
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Warn:
      return "WARN";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "SKIP";
  }
  return "?";
}

bool VerifyReport::ok() const {
  return std::none_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.status == CheckStatus::Fail; });
}

const VerifyItem* VerifyReport::find(std::string_view name) const {
  for (const auto& i : items)
    if (i.name == name) return &i;
  return nullptr;
}

std::string VerifyReport::to_string() const {
  std::string s;
  for (const auto& i : items) {
    s += std::string(status_name(i.status)) + "  " + i.name;
    if (!i.detail.empty()) s += ": " + i.detail;
    s += "\n";
  }
  return s;
}

Json VerifyReport::to_json() const {
  Json items_j = Json::array();
  for (const auto& i : items) items_j.push_back({{"name", i.name}, {"status", status_name(i.status)}, {"detail", i.detail}});
  return {{"group", group}, {"ok", ok()}, {"checks", items_j}};
}

VerifyReport verify_all(const GroupSpec& g, const VerifyOptions& opts) {
  VerifyReport r;
  r.group = g.to_string();
  if (g.dim() != 3) {
    r.items.push_back({"dimension", CheckStatus::Fail, "the fan checks need n = 3"});
    return r;
  }
  const bool sl = is_gorenstein(g);
  std::optional<Fan3> fan;
  try {
    fan = build_fan(g, {opts.max_order, opts.threads, true});
  } catch (const Error& e) {
    r.items.push_back({"fan", CheckStatus::Fail, e.what()});
    return r;
  }
  const Fan3& f = *fan;

  r.items.push_back({"tripod count",
                     f.tripods().size() == g.order() ? CheckStatus::Pass : CheckStatus::Fail,
                     std::to_string(f.tripods().size()) + " tripods, |G| = " + std::to_string(g.order())});
  for (const auto& c : f.report().checks)
    r.items.push_back({c.name, from_fan_check(c), c.failures.empty() ? "" : c.failures.front()});

  // a family that throws fails; without SL the failure is only a warning
  auto run = [&](const std::string& name, auto&& body) {
    VerifyItem item{name, CheckStatus::Pass, ""};
    try {
      body(item);
    } catch (const Error& e) {
      item.status = CheckStatus::Fail;
      item.detail = e.what();
    }
    if (item.status == CheckStatus::Fail && !sl) {
      item.status = CheckStatus::Warn;
      item.detail = "not Gorenstein: " + item.detail;
    }
    r.items.push_back(std::move(item));
  };

  run("chart agreement", [&](VerifyItem& item) {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < f.cones().size(); ++i) {
      std::vector<LatticePoint> rays;
      for (auto v : f.cones()[i]) rays.push_back(f.vertices()[v]);
      auto chart = chart_of_tripod(f.tripods()[i], g, rays);
      if (chart.orientation == Orientation::Degenerate) continue;
      ++checked;
      auto got = vertices_from_chart(chart, g);
      std::vector<LatticePoint> sorted(got.begin(), got.end());
      std::sort(sorted.begin(), sorted.end());
      if (sorted != rays) {
        item.status = CheckStatus::Fail;
        item.detail = "chart vertices differ from the cone rays at cone " + std::to_string(i);
        return;
      }
    }
    item.detail = std::to_string(checked) + " nondegenerate charts";
  });

  std::optional<Correspondence> corr;
  run("dual basis", [&](VerifyItem& item) {
    corr = mckay_correspondence(f);
    item.detail = std::to_string(corr->dual.checked) + " interior edges";
    if (!corr->dual.ok()) {
      item.status = CheckStatus::Fail;
      item.detail = corr->dual.violations.front();
    }
  });
  if (!corr) {
    for (const char* name : {"nefness", "hexagon relations", "c2 normalization", "module-product witnesses"})
      r.items.push_back({name, CheckStatus::Skip, "no correspondence"});
  } else {
    const Correspondence& c = *corr;
    run("nefness", [&](VerifyItem& item) {
      for (const auto& b : c.bundles)
        for (const auto& d : b.degrees)
          if (d < 0) {
            item.status = CheckStatus::Fail;
            item.detail = "L(" + std::to_string(b.character) + ") has degree " + to_decimal(d);
            return;
          }
    });
    std::size_t hexes = 0;
    for (const auto& s : c.surfaces) hexes += s.relation.has_value();
    run("hexagon relations", [&](VerifyItem& item) {
      for (const auto& s : c.surfaces) {
        if (!s.relation) continue;
        const auto& h = *s.relation;
        auto lhs = c.bundles[h.e[0]] + c.bundles[h.e[1]] + c.bundles[h.e[2]];
        auto rhs = c.bundles[h.f[0]] + c.bundles[h.f[1]];
        bool chars = g.char_add(g.char_add(h.e[0], h.e[1]), h.e[2]) == g.char_add(h.f[0], h.f[1]);
        if (lhs.degrees != rhs.degrees || !chars) {
          item.status = CheckStatus::Fail;
          item.detail = "relation at " + f.vertices()[s.vertex].to_string() + " does not balance";
          return;
        }
      }
      item.detail = std::to_string(hexes) + " hexagons";
    });
    run("c2 normalization", [&](VerifyItem& item) {
      for (const auto& s : c.surfaces)
        if (s.relation && s.c2_value != Int(1)) {
          item.status = CheckStatus::Fail;
          item.detail = "c2 of the relation at " + f.vertices()[s.vertex].to_string() + " is " + to_decimal(*s.c2_value);
          return;
        }
      item.detail = std::to_string(hexes) + " hexagons";
    });
    run("module-product witnesses", [&](VerifyItem& item) {
      for (const auto& s : c.surfaces) {
        if (!s.relation) continue;
        const auto& h = *s.relation;
        if (!module_equal(module_product({h.e[0], h.e[1], h.e[2]}, g, f.modules()),
                          module_product({h.f[0], h.f[1]}, g, f.modules()))) {
          item.status = CheckStatus::Fail;
          item.detail = "L(e1)L(e2)L(e3) differs from L(f1)L(f2) at " + f.vertices()[s.vertex].to_string();
          return;
        }
      }
      std::size_t both = 0;
      for (const auto& p : c.pairs) both += p.i != 0 && p.bundle_additive && p.module_equal;
      item.detail = std::to_string(hexes) + " hexagons, " + std::to_string(both) + " nontrivial pair relations";
    });
  }

  auto se = stringy_euler(g);
  VerifyItem euler{"stringy euler", CheckStatus::Pass, std::to_string(se.value)};
  if (se.stratified) {
    euler.status = CheckStatus::Warn;
    euler.detail = "stratified case, formula not applied";
  } else if (se.value != static_cast<std::int64_t>(g.order()) ||
             se.value != static_cast<std::int64_t>(f.cones().size())) {
    euler.status = sl ? CheckStatus::Fail : CheckStatus::Warn;
    euler.detail = std::to_string(se.value) + " against " + std::to_string(f.cones().size()) + " cones";
  }
  r.items.push_back(euler);
  return r;
}

}  // namespace mckay
