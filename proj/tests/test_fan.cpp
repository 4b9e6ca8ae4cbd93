#include "doctest.h"
#include "sweep_groups.hpp"
#include "mckay/fan.hpp"

#include <numeric>
#include <set>

using namespace mckay;

namespace {

Monomial mono(int x, int y, int z) { return Monomial(3, {x, y, z}); }

LatticePoint pt(const GroupSpec& g, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r) {
  return g.point(std::vector<std::int64_t>{a, b, c}, r);
}

bool has_edge(const Fan3& f, const LatticePoint& a, const LatticePoint& b) {
  auto ia = f.vertex_index(a), ib = f.vertex_index(b);
  return ia && ib && f.edge_index(*ia, *ib).has_value();
}

std::set<LatticePoint> cone_rays(const Fan3& f, std::size_t c) {
  std::set<LatticePoint> out;
  for (auto v : f.cones()[c]) out.insert(f.vertices()[v]);
  return out;
}

// Coprime Gorenstein cyclic groups 1/r(a,b,c) with r <= 15, up to permuting
// the weights, plus a few fixed examples.

}  // namespace

TEST_CASE("tripod search agrees with breadth-first growth") {
  for (const char* spec : {"1/3(1,1,1)", "1/7(1,2,4)", "1/13(1,2,10)", "1/5(1,4,0);1/5(0,1,4)", "1/6(1,2,3)",
                           "1/2(1,1,0);1/2(0,1,1)", "1/5(1,2)", "1/9(1,2,6)", "1/4(1,1,2)"}) {
    CAPTURE(spec);
    auto g = parse_group(spec);
    auto fast = enumerate_tripods(g);
    CHECK(fast == enumerate_tripods_oracle(g));
    CHECK(fast == enumerate_tripods(g, {200, 4}));
    for (const auto& t : fast) CHECK_NOTHROW(validate_tripod(t, g));
  }
  CHECK(enumerate_tripods(parse_group("1/3(1,1,1)")).size() == 3);
  CHECK(enumerate_tripods(parse_group("1/13(1,2,10)")).size() == 13);
  CHECK_THROWS_AS(enumerate_tripods(parse_group("1/37(1,5,31)"), {20, 1}), DomainError);
}

TEST_CASE("tripod validation") {
  auto g = parse_group("1/3(1,1,1)");
  Tripod t{3, {mono(0, 0, 0), mono(1, 0, 0), mono(2, 0, 0)}};
  CHECK_NOTHROW(validate_tripod(t, g));
  Tripod gap{3, {mono(0, 0, 0), mono(0, 1, 0), mono(2, 0, 0)}};
  CHECK_THROWS_AS(validate_tripod(gap, g), VerificationError);
  Tripod wrong{3, {mono(0, 0, 0), mono(2, 0, 0), mono(1, 0, 0)}};
  CHECK_THROWS_AS(validate_tripod(wrong, g), VerificationError);
}

TEST_CASE("1/3(1,1,1) fan") {
  auto g = parse_group("1/3(1,1,1)");
  auto f = build_fan(g);
  CHECK(f.report().ok());
  CHECK(f.cones().size() == 3);
  CHECK(f.vertices().size() == 4);
  auto centre = pt(g, 1, 1, 1, 3);
  auto ic = f.vertex_index(centre);
  REQUIRE(ic);
  CHECK(f.star(*ic).size() == 3);
  CHECK(hexagon_census(f).empty());

  Tripod tz{3, {mono(0, 0, 0), mono(0, 0, 1), mono(0, 0, 2)}};
  auto rays = cone_of_tripod(tz, g);
  CHECK(std::set<LatticePoint>(rays.begin(), rays.end()) ==
        std::set<LatticePoint>{pt(g, 1, 0, 0, 1), pt(g, 0, 1, 0, 1), centre});

  // the x-tripod's interior walls lead to the y- and z-tripods
  Tripod tx{3, {mono(0, 0, 0), mono(1, 0, 0), mono(2, 0, 0)}};
  Tripod ty{3, {mono(0, 0, 0), mono(0, 1, 0), mono(0, 2, 0)}};
  CHECK(wall_cross(tx, centre, pt(g, 0, 0, 1, 1), f) == ty);
  CHECK(wall_cross(tx, centre, pt(g, 0, 1, 0, 1), f) == tz);
  CHECK_THROWS_AS(wall_cross(tx, pt(g, 0, 1, 0, 1), pt(g, 0, 0, 1, 1), f), DomainError);

  auto c = chart_of_tripod(tx, g, cone_of_tripod(tx, g));
  CHECK(c.orientation == Orientation::Degenerate);
  std::set<std::string> lines;
  for (const auto& e : c.equations) lines.insert(e.lhs.to_string() + "=" + e.rhs.to_string());
  CHECK(lines == std::set<std::string>{"y=x", "z=x", "x^3=1"});
}

TEST_CASE("1/13(1,2,10) fan") {
  auto g = parse_group("1/13(1,2,10)");
  auto f = build_fan(g);
  CHECK(f.report().ok());
  CHECK(f.cones().size() == 13);
  for (const auto& v : f.vertices()) CHECK((v.is_coordinate_ray() || age(v) == 1));
  for (const auto& k : f.cones())
    CHECK(is_basic_simplex({f.vertices()[k[0]], f.vertices()[k[1]], f.vertices()[k[2]]}, g));
  CHECK(has_edge(f, pt(g, 8, 3, 2, 13), pt(g, 2, 4, 7, 13)));
  CHECK_FALSE(has_edge(f, pt(g, 7, 1, 5, 13), pt(g, 3, 6, 4, 13)));

  // across {(8,3,2),(2,4,7)} the character 8 monomial flips between xz^2 and y^4
  auto a = pt(g, 8, 3, 2, 13), b = pt(g, 2, 4, 7, 13);
  auto e = f.edges()[*f.edge_index(*f.vertex_index(a), *f.vertex_index(b))];
  REQUIRE(e.cones.size() == 2);
  const Tripod& t0 = f.tripods()[e.cones[0]];
  const Tripod& t1 = f.tripods()[e.cones[1]];
  CHECK(std::set<Monomial>{t0.chosen[8], t1.chosen[8]} == std::set<Monomial>{mono(1, 0, 2), mono(0, 4, 0)});
  CHECK(wall_cross(t0, a, b, f) == t1);
  CHECK(wall_cross(t1, a, b, f) == t0);
  for (std::size_t ch = 0; ch < 13; ++ch)
    if (ch != 8) CHECK(t0.chosen[ch] == t1.chosen[ch]);
}

TEST_CASE("1/37(1,5,31) fan and the starred chart") {
  auto g = parse_group("1/37(1,5,31)");
  auto f = build_fan(g);
  CHECK(f.report().ok());
  CHECK(f.cones().size() == 37);
  CHECK(hexagon_census(f).size() == 3);

  std::optional<Chart> starred;
  std::size_t starred_cone = 0;
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    auto rays = cone_of_tripod(f.tripods()[i], g);
    auto c = chart_of_tripod(f.tripods()[i], g, rays);
    if (c.orientation != Orientation::Up) continue;
    if (c.equations[0].lhs == mono(4, 0, 0) && c.equations[0].rhs == mono(0, 2, 1) &&
        c.equations[1].lhs == mono(0, 4, 0) && c.equations[1].rhs == mono(1, 0, 3) &&
        c.equations[2].lhs == mono(0, 0, 5) && c.equations[2].rhs == mono(2, 1, 0)) {
      starred = c;
      starred_cone = i;
    }
  }
  REQUIRE(starred);
  CHECK(starred->params == std::array<int, 6>{2, 2, 3, 1, 1, 1});
  CHECK(Chart::format(starred->equations[0]) == "x^4 = λ y^2 z");
  CHECK(Chart::format(starred->equations[1]) == "y^4 = μ x z^3");
  CHECK(Chart::format(starred->equations[2]) == "z^5 = ν x^2 y");
  CHECK(Chart::format(starred->equations[6]) == "x y z = λμν");
  auto pqr = vertices_from_chart(*starred, g);
  CHECK(pqr[0] == pt(g, 17, 11, 9, 37));
  CHECK(pqr[1] == pt(g, 11, 18, 8, 37));
  CHECK(pqr[2] == pt(g, 10, 13, 14, 37));
  for (const auto& p : pqr) CHECK(p.num()[0] + p.num()[1] + p.num()[2] == 37);
  CHECK(std::set<LatticePoint>(pqr.begin(), pqr.end()) == cone_rays(f, starred_cone));

  // the same chart from its parameters alone
  auto from_params = chart_from_params(Orientation::Up, {2, 2, 3, 1, 1, 1});
  REQUIRE(from_params.equations.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(from_params.equations[i].lhs == starred->equations[i].lhs);
    CHECK(from_params.equations[i].rhs == starred->equations[i].rhs);
    CHECK(from_params.equations[i].coeff_name == starred->equations[i].coeff_name);
  }
}

TEST_CASE("(Z/5)^2 fan") {
  auto g = parse_group("1/5(1,4,0);1/5(0,1,4)");
  auto f = build_fan(g);
  CHECK(f.report().ok());
  CHECK(f.cones().size() == 25);
  auto hex = hexagon_census(f);
  CHECK(hex.size() == 6);
  std::set<LatticePoint> hv;
  for (auto v : hex) hv.insert(f.vertices()[v]);
  CHECK(hv.count(pt(g, 2, 2, 1, 5)) == 1);

  bool found = false;
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    auto c = chart_of_tripod(f.tripods()[i], g, cone_of_tripod(f.tripods()[i], g));
    if (c.orientation == Orientation::Up && c.params == std::array<int, 6>{1, 2, 1, 1, 1, 2}) {
      found = true;
      CHECK(Chart::format(c.equations[0]) == "x^3 = λ y^2 z^2");
      CHECK(Chart::format(c.equations[1]) == "y^4 = μ x z");
      CHECK(Chart::format(c.equations[2]) == "z^4 = ν x y");
    }
  }
  CHECK(found);
}

TEST_CASE("charts from parameters") {
  auto g = parse_group("1/37(1,5,31)");
  auto c = chart_from_params(Orientation::Up, {0, 0, 0, 0, 0, 0});
  auto pqr = vertices_from_chart(c, g);
  CHECK(pqr[0].num() == std::vector<Int>{1, 0, 0});
  CHECK(pqr[1].num() == std::vector<Int>{0, 1, 0});
  CHECK(pqr[2].num() == std::vector<Int>{0, 0, 1});
  CHECK_THROWS_AS(chart_from_params(Orientation::Down, {0, 1, 1, 1, 1, 1}), DomainError);
  CHECK_THROWS_AS(chart_from_params(Orientation::Degenerate, {}), DomainError);
  Chart d;
  CHECK_THROWS_AS(vertices_from_chart(d, g), DomainError);
}

TEST_CASE("fan properties over the sweep") {
  for (const auto& spec : sweep_groups()) {
    CAPTURE(spec);
    auto g = parse_group(spec);
    auto f = build_fan(g);
    CHECK(f.report().ok());
    CHECK(f.tripods().size() == g.order());
    CHECK(f.cones().size() == g.order());

    // determinism across thread counts
    auto f4 = build_fan(g, {200, 4, false});
    CHECK(f4.vertices() == f.vertices());
    CHECK(f4.cones() == f.cones());
    CHECK(f4.tripods() == f.tripods());

    std::vector<Orientation> orient;
    for (std::size_t i = 0; i < f.cones().size(); ++i) {
      const auto& t = f.tripods()[i];
      auto rays = cone_of_tripod(t, g);
      CHECK(std::set<LatticePoint>(rays.begin(), rays.end()) == cone_rays(f, i));
      auto c = chart_of_tripod(t, g, rays);
      orient.push_back(c.orientation);
      for (const auto& e : c.equations) {
        CHECK(g.char_index_of(e.lhs.exps()) == g.char_index_of(e.rhs.exps()));
        // lhs / rhs is the coefficient monomial: <ray, lhs - rhs> = its exponent
        for (int j = 0; j < 3; ++j) CHECK(rays[j].pair(e.lhs.exps()) - rays[j].pair(e.rhs.exps()) == Rational(e.coeff[j]));
      }
      if (c.orientation == Orientation::Degenerate) continue;
      CHECK(c.equations.size() == 7);
      int base = c.orientation == Orientation::Up ? 0 : 3;
      for (int col = 0; col < 3; ++col) {
        int sum = 0;
        for (int row = 0; row < 3; ++row) {
          const auto& e = c.equations[base + row];
          sum += e.lhs.e[col] - e.rhs.e[col];
        }
        CHECK(sum == 1);
      }
      auto pqr = vertices_from_chart(c, g);
      CHECK(std::set<LatticePoint>(pqr.begin(), pqr.end()) == cone_rays(f, i));
      for (const auto& p : pqr) CHECK(age(p) == 1);
    }

    for (const auto& e : f.edges()) {
      if (!e.interior) continue;
      REQUIRE(e.cones.size() == 2);
      const auto& a = f.vertices()[e.rays[0]];
      const auto& b = f.vertices()[e.rays[1]];
      for (int s = 0; s < 2; ++s) {
        const auto& t = f.tripods()[e.cones[s]];
        auto across = wall_cross(t, a, b, f);
        CHECK(across == f.tripods()[e.cones[1 - s]]);
        CHECK(wall_cross(across, a, b, f) == t);
      }
      // neighbouring charts with all parameters positive alternate up and down
      auto full = [&](std::size_t c) {
        auto ch = chart_of_tripod(f.tripods()[c], g, cone_of_tripod(f.tripods()[c], g));
        return ch.orientation != Orientation::Degenerate &&
               std::all_of(ch.params.begin(), ch.params.end(), [](int p) { return p >= 1; });
      };
      if (full(e.cones[0]) && full(e.cones[1])) CHECK(orient[e.cones[0]] != orient[e.cones[1]]);
    }
  }
}

TEST_CASE("fans of non-Gorenstein groups carry warnings") {
  auto g = parse_group("1/5(1,1,2)");
  FanOptions opts;
  opts.allow_failures = true;
  auto f = build_fan(g, opts);
  bool crepancy_warned = false;
  for (const auto& c : f.report().checks)
    if (c.name == "crepancy") crepancy_warned = c.warning_only && !c.passed;
  CHECK(crepancy_warned);
}

TEST_CASE("fan from parts reproduces the built fan") {
  auto g = parse_group("1/13(1,2,10)");
  auto f = build_fan(g);
  auto verts = f.vertices();
  std::reverse(verts.begin(), verts.end());
  std::vector<std::array<std::size_t, 3>> cones;
  std::size_t last = verts.size() - 1;
  for (const auto& k : f.cones()) cones.push_back({last - k[2], last - k[0], last - k[1]});
  auto h = fan_from_parts(g, verts, cones, {});
  CHECK(h.vertices() == f.vertices());
  CHECK(h.cones() == f.cones());
  CHECK(verify_fan(h).ok());
  CHECK(hexagon_census(h) == hexagon_census(f));
}
