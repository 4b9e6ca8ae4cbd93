#include "doctest.h"
#include "sweep_groups.hpp"
#include "mckay/report.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

using namespace mckay;

namespace {

struct Circle {
  double x, y, r;
};

struct Label {
  double x, y, size;
  std::string text;
  bool centered;  // dominant-baseline central
};

std::string group_body(const std::string& svg, const std::string& id) {
  auto start = svg.find("<g id=\"" + id + "\"");
  REQUIRE(start != std::string::npos);
  auto end = svg.find("</g>", start);
  return svg.substr(start, end - start);
}

std::vector<Circle> circles(const std::string& svg) {
  std::vector<Circle> out;
  std::regex re("<circle cx=\"([-0-9.]+)\" cy=\"([-0-9.]+)\" r=\"([0-9.]+)\"/>");
  for (std::sregex_iterator it(svg.begin(), svg.end(), re), end; it != end; ++it)
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3])});
  return out;
}

std::vector<Label> labels(const std::string& svg, const std::string& id, double size, bool centered) {
  std::vector<Label> out;
  auto body = group_body(svg, id);
  std::regex re("<text x=\"([-0-9.]+)\" y=\"([-0-9.]+)\">([^<]*)</text>");
  for (std::sregex_iterator it(body.begin(), body.end(), re), end; it != end; ++it)
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), size, (*it)[3], centered});
  return out;
}

// Text box from the usual 0.6 em advance per character; circle hits the box?
bool overlaps(const Label& l, const Circle& c) {
  double w = 0.6 * l.size * static_cast<double>(l.text.size());
  double x0 = l.x - w / 2, x1 = l.x + w / 2;
  double y0 = l.centered ? l.y - l.size / 2 : l.y - 0.8 * l.size;
  double y1 = l.centered ? l.y + l.size / 2 : l.y + 0.2 * l.size;
  double dx = std::max({x0 - c.x, 0.0, c.x - x1});
  double dy = std::max({y0 - c.y, 0.0, c.y - y1});
  return dx * dx + dy * dy < c.r * c.r;
}

void check_labels_clear(const std::string& svg) {
  auto cs = circles(svg);
  auto ls = labels(svg, "edge-labels", 11, true);
  auto vs = labels(svg, "vertex-labels", 9, false);
  ls.insert(ls.end(), vs.begin(), vs.end());
  for (const auto& l : ls)
    for (const auto& c : cs) {
      CAPTURE(l.text);
      CHECK_FALSE(overlaps(l, c));
    }
}

bool balanced(const std::string& svg) {
  auto count = [&](const std::string& s) {
    std::size_t n = 0;
    for (auto p = svg.find(s); p != std::string::npos; p = svg.find(s, p + 1)) ++n;
    return n;
  };
  return count("<g ") == count("</g>") && count("<text ") == count("</text>") && count("<svg ") == 1 &&
         count("</svg>") == 1;
}

Monomial mono(int x, int y, int z) { return Monomial(3, {x, y, z}); }

std::size_t vertex(const Fan3& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r) {
  return *f.vertex_index(f.group().point(std::vector<std::int64_t>{a, b, c}, r));
}

}  // namespace

TEST_CASE("fan JSON schema and round trip") {
  for (const char* spec : {"1/3(1,1,1)", "1/13(1,2,10)", "1/37(1,5,31)", "1/5(1,4,0);1/5(0,1,4)", "1/6(1,2,3)"}) {
    CAPTURE(spec);
    auto f = build_fan(parse_group(spec));
    Json j = fan_to_json(f);
    CHECK(j["schema_version"] == "1");
    CHECK(j["cones"].size() == f.cones().size());
    CHECK(j["edges"].size() == f.edges().size());
    for (const auto& v : j["vertices"]) CHECK(v.size() == 4);

    auto text = j.dump(2);
    auto back = fan_from_json(Json::parse(text));
    CHECK(back.vertices() == f.vertices());
    CHECK(back.cones() == f.cones());
    CHECK(back.tripods() == f.tripods());
    CHECK(verify_fan(back).ok());
    CHECK(fan_to_json(back).dump(2) == text);

    // tripods are optional
    j.erase("tripods");
    auto bare = fan_from_json(j);
    CHECK(bare.cones() == f.cones());
    CHECK(bare.tripods().empty());
  }
  for (const auto& spec : sweep_groups()) {
    auto f = build_fan(parse_group(spec));
    CHECK(fan_from_json(Json::parse(fan_to_json(f).dump())).cones() == f.cones());
  }
}

TEST_CASE("fan JSON rejects malformed input") {
  auto f = build_fan(parse_group("1/3(1,1,1)"));
  Json good = fan_to_json(f);

  auto without = [&](const char* key) {
    Json j = good;
    j.erase(key);
    return j;
  };
  CHECK_THROWS_AS(fan_from_json(without("vertices")), ParseError);
  CHECK_THROWS_AS(fan_from_json(without("schema_version")), ParseError);
  CHECK_THROWS_AS(fan_from_json(Json::array()), ParseError);

  Json j = good;
  j["schema_version"] = "2";
  CHECK_THROWS_AS(fan_from_json(j), ParseError);
  j = good;
  j["cones"][0][0] = 99;
  CHECK_THROWS_AS(fan_from_json(j), ParseError);
  j = good;
  j["vertices"][0] = {1, 1, 0, 3};  // (1,1,0)/3 is not in L
  CHECK_THROWS_AS(fan_from_json(j), DomainError);
  j = good;
  j["vertices"][0] = {1, 1, 0};
  CHECK_THROWS_AS(fan_from_json(j), ParseError);
  j = good;
  j["group"] = "1/3(1,1";
  CHECK_THROWS_AS(fan_from_json(j), ParseError);
}

TEST_CASE("McKay JSON for 1/13(1,2,10)") {
  auto f = build_fan(parse_group("1/13(1,2,10)"));
  auto c = mckay_correspondence(f);
  Json j = correspondence_to_json(f, c);
  auto e = *f.edge_index(vertex(f, 8, 3, 2, 13), vertex(f, 2, 4, 7, 13));
  const auto& je = j["edges"][e];
  CHECK(je["interior"] == true);
  CHECK(je["character"] == 8);
  CHECK(je["ratio"]["pos"] == Json::array({1, 0, 2}));
  CHECK(je["ratio"]["neg"] == Json::array({0, 4, 0}));
  CHECK(j["surfaces"].size() == 6);
  CHECK(j["bundles"].size() == 13);
  CHECK(j["table"].size() == 13);
  CHECK(j["table"][8]["role"] == "edge label");
  CHECK(j["table"][3]["role"] == "non-active");
  for (const auto& s : j["surfaces"]) {
    CHECK(s["kind"] == "other");
    CHECK(s["c2"].is_null());
  }
  bool found = false;
  for (const auto& p : j["pairs"]) found = found || (p["i"] == 1 && p["j"] == 2 && p["k"] == 3 && p["bundle_additive"] == true);
  CHECK(found);
  // the fan part still reads back
  CHECK(fan_from_json(j).cones() == f.cones());
}

TEST_CASE("McKay JSON for the (Z/5)^2 hexagon") {
  auto f = build_fan(parse_group("1/5(1,4,0);1/5(0,1,4)"));
  const auto& g = f.group();
  auto c = mckay_correspondence(f);
  Json j = correspondence_to_json(f, c);
  auto v = vertex(f, 2, 2, 1, 5);
  std::size_t hexagons = 0;
  for (const auto& s : j["surfaces"]) {
    if (s["kind"] != "hexagon") continue;
    ++hexagons;
    CHECK(s["c2"] == 1);
    if (s["vertex"] != v) continue;
    std::set<std::size_t> e, fc;
    for (const auto& x : s["e_chars"]) e.insert(x.get<std::size_t>());
    for (const auto& x : s["f_chars"]) fc.insert(x.get<std::size_t>());
    CHECK(e == std::set<std::size_t>{g.char_index_of(mono(3, 0, 0).exps()), g.char_index_of(mono(0, 3, 0).exps()),
                                     g.char_index_of(mono(0, 0, 4).exps())});
    CHECK(fc == std::set<std::size_t>{g.char_index_of(mono(3, 1, 0).exps()), g.char_index_of(mono(1, 3, 0).exps())});
  }
  CHECK(hexagons == 6);
}

TEST_CASE("surface JSON") {
  auto s = resolve_surface(5, 2);
  Json j = surface_to_json(s);
  CHECK(j["schema_version"] == "1");
  CHECK(j["terms"] == Json::array({3, 2}));
  CHECK(j["boundary_points"].size() == 4);
  REQUIRE(j["curves"].size() == 2);
  CHECK(j["curves"][0]["self_intersection"] == -2);
  CHECK(j["curves"][1]["self_intersection"] == -3);
  CHECK(j["curves"][0]["ratio"]["y"] == Json::array({0, 3}));
  CHECK(j["charts"][1]["equations"][0]["coeff"] == "λ");
  CHECK(j["dual_degrees"] == Json::array({Json::array({1, 0}), Json::array({0, 1})}));
}

TEST_CASE("SVG drawing") {
  auto f13 = build_fan(parse_group("1/13(1,2,10)"));
  auto svg = emit_svg(f13);
  CHECK(svg == emit_svg(f13));
  CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg ", 0) == 0);
  CHECK(balanced(svg));
  check_labels_clear(svg);

  // positions invert to barycentric coordinates: corners 1000 apart, and
  // each vertex is the weighted sum of the corners
  auto cs = circles(svg);
  REQUIRE(cs.size() == f13.vertices().size());
  const Circle& X = cs[vertex(f13, 13, 0, 0, 13)];
  const Circle& Y = cs[vertex(f13, 0, 13, 0, 13)];
  const Circle& Z = cs[vertex(f13, 0, 0, 13, 13)];
  CHECK(std::hypot(X.x - Y.x, X.y - Y.y) == doctest::Approx(1000).epsilon(1e-4));
  CHECK(std::hypot(Y.x - Z.x, Y.y - Z.y) == doctest::Approx(1000).epsilon(1e-4));
  CHECK(std::hypot(Z.x - X.x, Z.y - X.y) == doctest::Approx(1000).epsilon(1e-4));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto num = f13.vertices()[i].scaled_to(13);
    double a = num[0].convert_to<double>() / 13, b = num[1].convert_to<double>() / 13,
           c = num[2].convert_to<double>() / 13;
    CHECK(cs[i].x == doctest::Approx(a * X.x + b * Y.x + c * Z.x).epsilon(1e-4));
    CHECK(cs[i].y == doctest::Approx(a * X.y + b * Y.y + c * Z.y).epsilon(1e-4));
  }

  // the edge (8,3,2) -- (2,4,7) is drawn
  auto p = cs[vertex(f13, 8, 3, 2, 13)], q = cs[vertex(f13, 2, 4, 7, 13)];
  auto fmt = [](double v) {
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(2);
    o << v;
    return o.str();
  };
  std::string l1 = "x1=\"" + fmt(q.x) + "\" y1=\"" + fmt(q.y) + "\" x2=\"" + fmt(p.x) + "\" y2=\"" + fmt(p.y) + "\"";
  std::string l2 = "x1=\"" + fmt(p.x) + "\" y1=\"" + fmt(p.y) + "\" x2=\"" + fmt(q.x) + "\" y2=\"" + fmt(q.y) + "\"";
  CHECK((svg.find(l1) != std::string::npos || svg.find(l2) != std::string::npos));

  // 1/3(1,1,1): the centre meets three edges
  auto f3 = build_fan(parse_group("1/3(1,1,1)"));
  auto s3 = emit_svg(f3);
  auto c3 = circles(s3)[vertex(f3, 1, 1, 1, 3)];
  std::size_t lines = 0;
  auto edges = group_body(s3, "edges");
  for (const char* end : {"1", "2"}) {
    std::string centre = "x" + std::string(end) + "=\"" + fmt(c3.x) + "\" y" + end + "=\"" + fmt(c3.y) + "\"";
    for (auto pos = edges.find(centre); pos != std::string::npos; pos = edges.find(centre, pos + 1)) ++lines;
  }
  CHECK(lines == 3);
  CHECK(f3.edges().size() == 6);

  // 1/37(1,5,31): three shaded hexagon stars
  auto f37 = build_fan(parse_group("1/37(1,5,31)"));
  auto s37 = emit_svg(f37);
  auto hex = group_body(s37, "hexagons");
  std::size_t polys = 0;
  for (auto pos = hex.find("<polygon"); pos != std::string::npos; pos = hex.find("<polygon", pos + 1)) ++polys;
  CHECK(polys == 3);
  check_labels_clear(s37);
  check_labels_clear(emit_svg(build_fan(parse_group("1/5(1,4,0);1/5(0,1,4)"))));
}

TEST_CASE("SVG snapshots of the printed figures") {
  const std::string dir = std::string(MCKAY_SOURCE_DIR) + "/docs/";
  for (auto [spec, name] : std::vector<std::pair<std::string, std::string>>{{"1/3(1,1,1)", "fan_1_3_111.svg"},
                                                                            {"1/13(1,2,10)", "fan_1_13_1_2_10.svg"},
                                                                            {"1/37(1,5,31)", "fan_1_37_1_5_31.svg"},
                                                                            {"1/5(1,4,0);1/5(0,1,4)", "fan_z5_z5.svg"}}) {
    CAPTURE(name);
    auto svg = emit_svg(build_fan(parse_group(spec)));
    std::ifstream old(dir + name, std::ios::binary);
    if (old) {
      std::stringstream buf;
      buf << old.rdbuf();
      // a difference means the drawing changed; the file is rewritten below
      CHECK(buf.str() == svg);
    }
    std::ofstream(dir + name, std::ios::binary) << svg;
  }
}

TEST_CASE("verify_all") {
  auto r13 = verify_all(parse_group("1/13(1,2,10)"));
  CHECK(r13.ok());
  for (const auto& i : r13.items) {
    CAPTURE(i.name);
    CHECK(i.status == CheckStatus::Pass);
  }
  for (const char* name : {"tripod count", "coverage", "crepancy", "basic cones", "chart agreement", "dual basis",
                           "nefness", "hexagon relations", "c2 normalization", "module-product witnesses",
                           "stringy euler"})
    CHECK(r13.find(name) != nullptr);

  auto r55 = verify_all(parse_group("1/5(1,4,0);1/5(0,1,4)"));
  CHECK(r55.ok());
  CHECK(r55.find("stringy euler")->status == CheckStatus::Warn);
  CHECK(r55.find("stringy euler")->detail.find("stratified") != std::string::npos);
  CHECK(r55.find("hexagon relations")->detail == "6 hexagons");

  // weights with a repeat: every check still runs
  auto r122 = verify_all(parse_group("1/5(1,2,2)"));
  CHECK(r122.ok());
  CHECK(r122.items.size() == r13.items.size());

  // not Gorenstein: crepancy is a warning, nothing fails
  auto r112 = verify_all(parse_group("1/5(1,1,2)"));
  CHECK(r112.ok());
  CHECK(r112.find("crepancy")->status == CheckStatus::Warn);

  auto r2 = verify_all(parse_group("1/5(1,2)"));
  CHECK_FALSE(r2.ok());

  Json j = r13.to_json();
  CHECK(j["ok"] == true);
  CHECK(j["checks"].size() == r13.items.size());
  CHECK(j["checks"][0]["status"] == "PASS");

  for (const auto& spec : sweep_groups()) {
    CAPTURE(spec);
    auto r = verify_all(parse_group(spec));
    CHECK(r.ok());
    for (const auto& i : r.items) CHECK(i.status == CheckStatus::Pass);
  }
}
