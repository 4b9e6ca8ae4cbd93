#include "mckay/fan.hpp"

#include "mckay/section.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mckay {

namespace {

section::Vec direction(const LatticePoint& p) {
  section::Vec v{0, 0, 0};
  for (std::size_t i = 0; i < p.dim(); ++i) v[i] = p.num()[i];
  return section::normalize(v);
}

}  // namespace

std::vector<LatticePoint> cone_of_tripod(const Tripod& t, const GroupSpec& g,
                                         const std::vector<CharacterModule>& modules) {
  const int n = g.dim();
  section::HalfspaceSet hs;
  for (std::size_t a = 0; a < g.order(); ++a) {
    const Monomial& c = t.chosen.at(a);
    if (!modules.at(a).contains(c))
      throw VerificationError("tripod monomial " + c.to_string() + " is not a minimal generator of its character");
    for (const auto& m : modules[a].generators())
      if (!(m == c)) hs.add({m.e[0] - c.e[0], m.e[1] - c.e[1], m.e[2] - c.e[2]});
  }
  auto corners = section::corners(hs.intersect(section::full_section(n)));
  if (static_cast<int>(corners.size()) < n) throw VerificationError("cone of tripod is not full-dimensional");
  if (static_cast<int>(corners.size()) > n)
    throw VerificationError("cone of tripod is not simplicial (" + std::to_string(corners.size()) + " rays)");
  std::vector<LatticePoint> rays;
  for (const auto& c : corners) rays.push_back(g.primitive_on_ray(std::vector<Int>(c.begin(), c.begin() + n)));
  std::sort(rays.begin(), rays.end());
  return rays;
}

std::vector<LatticePoint> cone_of_tripod(const Tripod& t, const GroupSpec& g) {
  return cone_of_tripod(t, g, all_minimal_generators(g));
}

bool FanReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FanCheck& c) { return c.passed || c.warning_only; });
}

std::string FanReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS" : (c.warning_only ? "WARN" : "FAIL")) << ' ' << c.name << '\n';
    for (const auto& f : c.failures) os << "  " << f << '\n';
  }
  return os.str();
}

std::optional<std::size_t> Fan3::vertex_index(const LatticePoint& p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Fan3::edge_index(std::size_t a, std::size_t b) const {
  auto it = edge_lookup_.find({std::min(a, b), std::max(a, b)});
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Fan3::cone_of(const Tripod& t) const {
  for (std::size_t i = 0; i < tripods_.size(); ++i)
    if (tripods_[i] == t) return i;
  return std::nullopt;
}

std::vector<std::size_t> Fan3::star(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (std::find(cones_[i].begin(), cones_[i].end(), vertex) != cones_[i].end()) out.push_back(i);
  return out;
}

std::size_t Fan3::opposite(std::size_t cone, const FanEdge& e) const {
  for (auto v : cones_.at(cone))
    if (v != e.rays[0] && v != e.rays[1]) return v;
  throw DomainError("edge is not in the cone");
}

void Fan3::index_edges() {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> adj;
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const auto& k = cones_[c];
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) adj[{std::min(k[i], k[j]), std::max(k[i], k[j])}].push_back(c);
  }
  edges_.clear();
  edge_lookup_.clear();
  for (auto& [key, cones] : adj) {
    FanEdge e;
    e.rays = {key.first, key.second};
    e.cones = cones;
    const auto& a = vertices_[key.first];
    const auto& b = vertices_[key.second];
    e.interior = true;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.num()[i] == 0 && b.num()[i] == 0) e.interior = false;
    edge_lookup_[key] = edges_.size();
    edges_.push_back(std::move(e));
  }
}

Fan3 fan_from_parts(const GroupSpec& g, std::vector<LatticePoint> vertices, std::vector<std::array<std::size_t, 3>> cones,
                    std::vector<Tripod> tripods) {
  if (g.dim() != 3) throw DomainError("fans are built for n = 3");
  Fan3 f;
  f.group_ = g;
  f.modules_ = all_minimal_generators(g);
  // canonical order: sorted vertices, sorted index triples, cones sorted
  std::vector<std::size_t> perm(vertices.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
  std::vector<std::size_t> where(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    where[perm[i]] = i;
    f.vertices_.push_back(vertices[perm[i]]);
  }
  for (std::size_t i = 1; i < f.vertices_.size(); ++i)
    if (f.vertices_[i] == f.vertices_[i - 1]) throw VerificationError("repeated fan vertex " + f.vertices_[i].to_string());
  std::vector<std::pair<std::array<std::size_t, 3>, std::size_t>> keyed;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    std::array<std::size_t, 3> k{};
    for (int i = 0; i < 3; ++i) k[i] = where.at(cones[c][i]);
    std::sort(k.begin(), k.end());
    keyed.emplace_back(k, c);
  }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [k, c] : keyed) {
    f.cones_.push_back(k);
    if (!tripods.empty()) f.tripods_.push_back(tripods.at(c));
  }
  f.index_edges();
  return f;
}

FanReport verify_fan(const Fan3& f) {
  const GroupSpec& g = f.group();
  const bool sl = is_gorenstein(g);
  FanReport rep;

  FanCheck count{"cone count"};
  if (f.cones().size() != g.order())
    count.failures.push_back(std::to_string(f.cones().size()) + " cones for |G| = " + std::to_string(g.order()));
  if (!f.tripods().empty() && f.tripods().size() != g.order())
    count.failures.push_back(std::to_string(f.tripods().size()) + " tripods for |G| = " + std::to_string(g.order()));

  FanCheck prim{"primitive rays"};
  FanCheck crep{"crepancy"};
  crep.warning_only = !sl;
  for (const auto& v : f.vertices()) {
    if (!v.in_closed_orthant() || !g.contains(v) || !g.is_primitive(v))
      prim.failures.push_back(v.to_string() + " is not a primitive point of L in the orthant");
    else if (!v.is_coordinate_ray() && age(v) != 1)
      crep.failures.push_back(v.to_string() + " has age " + mckay::to_string(age(v)));
  }

  FanCheck basic{"basic cones"};
  basic.warning_only = !sl;
  FanCheck cover{"coverage"};
  Rational area = 0;
  std::vector<std::array<section::Vec, 3>> dirs;
  for (const auto& k : f.cones()) {
    std::vector<LatticePoint> rays{f.vertices()[k[0]], f.vertices()[k[1]], f.vertices()[k[2]]};
    std::array<section::Vec, 3> d{direction(rays[0]), direction(rays[1]), direction(rays[2])};
    dirs.push_back(d);
    Rational a = section::section_area(d[0], d[1], d[2]);
    if (a == 0) {
      basic.failures.push_back("degenerate cone " + rays[0].to_string() + " " + rays[1].to_string() + " " +
                               rays[2].to_string());
      continue;
    }
    area += a;
    if (!is_basic_simplex(rays, g))
      basic.failures.push_back("cone " + rays[0].to_string() + " " + rays[1].to_string() + " " + rays[2].to_string() +
                               " is not basic");
  }
  if (area != 1) cover.failures.push_back("cone sections cover area " + mckay::to_string(area) + " of 1");

  // Pairwise: the intersection of two cones is spanned by their common rays.
  FanCheck faces{"face to face"};
  std::vector<std::array<section::Vec, 3>> inward;
  for (const auto& d : dirs) {
    std::array<section::Vec, 3> h;
    for (int i = 0; i < 3; ++i) {
      const auto& p = d[(i + 1) % 3];
      const auto& q = d[(i + 2) % 3];
      h[i] = section::cross(p, q);
      if (section::dot(h[i], d[i]) < 0)
        for (auto& x : h[i]) x = -x;
    }
    inward.push_back(h);
  }
  auto separated = [](const std::array<section::Vec, 3>& pts, const std::array<section::Vec, 3>& hs) {
    for (const auto& h : hs) {
      bool all_out = true;
      for (const auto& p : pts) all_out = all_out && section::dot(h, p) < 0;
      if (all_out) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      if (separated(dirs[i], inward[j]) || separated(dirs[j], inward[i])) continue;
      section::Polygon p{{dirs[i].begin(), dirs[i].end()}};
      for (const auto& h : inward[j]) section::clip(p, h);
      std::set<section::Vec> shared;
      for (const auto& a : dirs[i])
        for (const auto& b : dirs[j])
          if (a == b) shared.insert(a);
      for (const auto& c : section::corners(p))
        if (!shared.count(c)) {
          faces.failures.push_back("cones " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
          break;
        }
    }

  FanCheck adjacency{"edge adjacency"};
  for (const auto& e : f.edges()) {
    std::size_t want = e.interior ? 2 : 1;
    if (e.cones.size() != want)
      adjacency.failures.push_back("edge " + f.vertices()[e.rays[0]].to_string() + " " +
                                   f.vertices()[e.rays[1]].to_string() + " has " + std::to_string(e.cones.size()) +
                                   " cones");
  }

  for (FanCheck* c : {&count, &prim, &crep, &basic, &cover, &faces, &adjacency}) {
    c->passed = c->failures.empty();
    rep.checks.push_back(std::move(*c));
  }
  return rep;
}

Fan3 build_fan(const GroupSpec& g, const FanOptions& opts) {
  if (g.dim() != 3) throw DomainError("build_fan requires n = 3");
  auto modules = all_minimal_generators(g);
  auto tripods = enumerate_tripods(g, {opts.max_order, opts.threads});

  FanCheck cone_check{"tripod cones"};
  std::vector<LatticePoint> verts;
  std::vector<std::vector<LatticePoint>> cone_rays;
  std::vector<Tripod> kept;
  for (const auto& t : tripods) {
    try {
      auto rays = cone_of_tripod(t, g, modules);
      cone_rays.push_back(rays);
      kept.push_back(t);
      verts.insert(verts.end(), rays.begin(), rays.end());
    } catch (const VerificationError& e) {
      std::string basis;
      for (const auto& m : t.basis()) basis += (basis.empty() ? "" : ",") + m.to_string();
      cone_check.failures.push_back(std::string(e.what()) + ": {" + basis + "}");
    }
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<std::array<std::size_t, 3>> cones;
  for (const auto& rays : cone_rays) {
    std::array<std::size_t, 3> k{};
    for (int i = 0; i < 3; ++i)
      k[i] = static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), rays[i]) - verts.begin());
    cones.push_back(k);
  }
  Fan3 f = fan_from_parts(g, std::move(verts), std::move(cones), std::move(kept));
  f.modules_ = std::move(modules);
  f.report_ = verify_fan(f);
  cone_check.passed = cone_check.failures.empty();
  f.report_.checks.insert(f.report_.checks.begin(), std::move(cone_check));
  if (!f.report_.ok() && !opts.allow_failures)
    throw VerificationError("fan verification failed for " + g.to_string() + "\n" + f.report_.to_string());
  return f;
}

std::vector<std::size_t> hexagon_census(const Fan3& f) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < f.vertices().size(); ++v) {
    if (!f.is_interior_vertex(v)) continue;
    if (f.star(v).size() != 6) continue;
    std::vector<std::size_t> nbrs;
    for (const auto& e : f.edges())
      if ((e.rays[0] == v || e.rays[1] == v) && e.interior) nbrs.push_back(e.rays[0] == v ? e.rays[1] : e.rays[0]);
    if (nbrs.size() != 6) continue;
    // Regular: the link is centrally symmetric modulo v, so each neighbour u
    // has a partner u' with u + u' on the ray of v.
    Int den = f.vertices()[v].den();
    for (auto u : nbrs) den = den / gcd(den, f.vertices()[u].den()) * f.vertices()[u].den();
    auto lift = [&](std::size_t i) {
      auto p = f.vertices()[i].scaled_to(den);
      return section::Vec{p[0], p[1], p[2]};
    };
    const section::Vec c = lift(v);
    bool regular = true;
    for (std::size_t i = 0; i < 6 && regular; ++i) {
      bool partner = false;
      for (std::size_t j = 0; j < 6 && !partner; ++j) {
        if (i == j) continue;
        section::Vec a = lift(nbrs[i]), b = lift(nbrs[j]), sum{};
        for (int k = 0; k < 3; ++k) sum[k] = a[k] + b[k];
        partner = section::cross(sum, c) == section::Vec{0, 0, 0};
      }
      regular = partner;
    }
    if (regular) out.push_back(v);
  }
  return out;
}

Tripod wall_cross(const Tripod& t, const LatticePoint& a, const LatticePoint& b, const Fan3& f) {
  auto cone = f.cone_of(t);
  if (!cone) throw DomainError("tripod is not a cone of the fan");
  auto ia = f.vertex_index(a), ib = f.vertex_index(b);
  if (!ia || !ib) throw DomainError("wall rays are not fan vertices");
  auto ei = f.edge_index(*ia, *ib);
  const auto& k = f.cones()[*cone];
  if (!ei || std::find(k.begin(), k.end(), *ia) == k.end() || std::find(k.begin(), k.end(), *ib) == k.end())
    throw DomainError("not a wall of the tripod's cone");
  const FanEdge& e = f.edges()[*ei];
  if (!e.interior) throw DomainError("boundary wall has no neighbouring cone");
  const LatticePoint& c = f.vertices()[f.opposite(*cone, e)];

  Int den = 1;
  for (const auto* p : {&a, &b, &c}) den = den / gcd(den, p->den()) * p->den();
  auto pa = a.scaled_to(den), pb = b.scaled_to(den), pc = c.scaled_to(den);
  const GroupSpec& g = f.group();
  for (Int kk = 1; kk < (Int(1) << 40); kk *= 2) {
    std::vector<Int> v(3);
    bool positive = true;
    for (int i = 0; i < 3; ++i) {
      v[i] = kk * (pa[i] + pb[i]) - pc[i];
      positive = positive && v[i] > 0;
    }
    if (!positive) continue;
    auto next = tripod_at_weight(v, g, f.modules());
    if (!next || *next == t) continue;
    auto nc = f.cone_of(*next);
    if (!nc) continue;
    const auto& nk = f.cones()[*nc];
    if (std::find(nk.begin(), nk.end(), *ia) != nk.end() && std::find(nk.begin(), nk.end(), *ib) != nk.end())
      return *next;
  }
  throw VerificationError("no neighbouring tripod found across the wall");
}

// Charts.

std::string_view orientation_name(Orientation o) {
  switch (o) {
    case Orientation::Up:
      return "up";
    case Orientation::Down:
      return "down";
    case Orientation::Degenerate:
      return "degenerate";
  }
  return "?";
}

std::string Chart::format(const ChartEquation& e) {
  std::string rhs = e.rhs.is_one() ? "" : e.rhs.to_string();
  std::string coeff = e.coeff_name;
  if (coeff.empty() && rhs.empty()) rhs = "1";
  std::string right = coeff.empty() ? rhs : (rhs.empty() ? coeff : coeff + " " + rhs);
  return e.lhs.to_string() + " = " + right;
}

namespace {

Monomial m3(int x, int y, int z) { return Monomial(3, {x, y, z}); }

struct Pattern {
  Monomial lhs, rhs;
  const char* name;
};

std::vector<Pattern> pattern(Orientation o, const std::array<int, 6>& p) {
  auto [a, b, c, d, e, f] = p;
  if (o == Orientation::Up)
    return {{m3(a + d + 1, 0, 0), m3(0, b, f), "λ"},
            {m3(0, b + e + 1, 0), m3(d, 0, c), "μ"},
            {m3(0, 0, c + f + 1), m3(a, e, 0), "ν"},
            {m3(0, b + 1, f + 1), m3(a + d, 0, 0), "μν"},
            {m3(d + 1, 0, c + 1), m3(0, b + e, 0), "λν"},
            {m3(a + 1, e + 1, 0), m3(0, 0, c + f), "λμ"},
            {m3(1, 1, 1), m3(0, 0, 0), "λμν"}};
  return {{m3(a + d, 0, 0), m3(0, b - 1, f - 1), "βγ"},
          {m3(0, b + e, 0), m3(d - 1, 0, c - 1), "αγ"},
          {m3(0, 0, c + f), m3(a - 1, e - 1, 0), "αβ"},
          {m3(0, b, f), m3(a + d - 1, 0, 0), "α"},
          {m3(d, 0, c), m3(0, b + e - 1, 0), "β"},
          {m3(a, e, 0), m3(0, 0, c + f - 1), "γ"},
          {m3(1, 1, 1), m3(0, 0, 0), "αβγ"}};
}

bool params_valid(Orientation o, const std::array<int, 6>& p) {
  int lo = o == Orientation::Up ? 0 : 1;
  return std::all_of(p.begin(), p.end(), [lo](int x) { return x >= lo; });
}

std::string coeff_string(const std::array<Int, 3>& exps, const std::array<std::string, 3>& names) {
  static const std::vector<std::string> order{"λ", "μ", "ν", "α", "β", "γ", "u", "v", "w"};
  std::array<int, 3> idx{0, 1, 2};
  auto rank = [&](int i) { return std::find(order.begin(), order.end(), names[i]) - order.begin(); };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return rank(a) < rank(b); });
  std::string out;
  for (int i : idx) {
    if (exps[i] == 0) continue;
    out += names[i];
    if (exps[i] != 1) out += "^" + to_decimal(exps[i]);
  }
  return out;
}

}  // namespace

Chart chart_from_params(Orientation o, const std::array<int, 6>& params) {
  if (o == Orientation::Degenerate || !params_valid(o, params)) throw DomainError("invalid chart parameters");
  Chart c;
  c.orientation = o;
  c.params = params;
  for (const auto& p : pattern(o, params)) c.equations.push_back({p.lhs, p.rhs, {}, p.name});
  return c;
}

Chart chart_of_tripod(const Tripod& t, const GroupSpec& g, const std::vector<LatticePoint>& rays) {
  if (g.dim() != 3 || rays.size() != 3) throw DomainError("charts are defined for n = 3 cones");
  std::set<Monomial> basis(t.chosen.begin(), t.chosen.end());
  std::set<Monomial> gens;
  for (const auto& s : basis)
    for (int i = 0; i < 3; ++i) {
      Monomial m = s;
      ++m.e[i];
      if (basis.count(m)) continue;
      bool closed = true;
      for (int j = 0; j < 3 && closed; ++j) {
        if (m.e[j] == 0) continue;
        Monomial d = m;
        --d.e[j];
        closed = basis.count(d) > 0;
      }
      if (closed) gens.insert(m);
    }

  std::map<Monomial, ChartEquation> eqs;
  for (const auto& m : gens) {
    ChartEquation e;
    e.lhs = m;
    e.rhs = t.chosen.at(g.char_index_of(m.exps()));
    for (int j = 0; j < 3; ++j) {
      Rational v = rays[j].pair(m.exps()) - rays[j].pair(e.rhs.exps());
      if (denominator(v) != 1 || v < 0)
        throw VerificationError("chart coefficient of " + m.to_string() + " is not a regular monomial on the cone");
      e.coeff[j] = numerator(v);
    }
    eqs[m] = e;
  }

  Chart c;
  c.rays = rays;
  auto pure = [&](int i) -> const ChartEquation* {
    for (const auto& [m, e] : eqs)
      if (m.e[i] > 0 && m.e[(i + 1) % 3] == 0 && m.e[(i + 2) % 3] == 0) return &e;
    return nullptr;
  };
  const ChartEquation *ex = pure(0), *ey = pure(1), *ez = pure(2);
  if (ex && ey && ez && eqs.size() == 7) {
    const Monomial &rx = ex->rhs, &ry = ey->rhs, &rz = ez->rhs;
    std::array<std::pair<Orientation, std::array<int, 6>>, 2> tries{
        {{Orientation::Up, {rz.e[0], rx.e[1], ry.e[2], ry.e[0], rz.e[1], rx.e[2]}},
         {Orientation::Down, {rz.e[0] + 1, rx.e[1] + 1, ry.e[2] + 1, ry.e[0] + 1, rz.e[1] + 1, rx.e[2] + 1}}}};
    for (const auto& [o, p] : tries) {
      if (!params_valid(o, p)) continue;
      auto pat = pattern(o, p);
      bool match = true;
      for (const auto& q : pat) {
        auto it = eqs.find(q.lhs);
        match = match && it != eqs.end() && it->second.rhs == q.rhs;
      }
      if (!match) continue;
      c.orientation = o;
      c.params = p;
      // Coordinate names: up charts name the coefficient of each pure power
      // (λ, μ, ν); down charts name those of the second triple (α, β, γ).
      std::array<std::string, 3> names{"u", "v", "w"};
      const char* greek[3] = {o == Orientation::Up ? "λ" : "α", o == Orientation::Up ? "μ" : "β",
                              o == Orientation::Up ? "ν" : "γ"};
      int base = o == Orientation::Up ? 0 : 3;
      bool units = true;
      for (int i = 0; i < 3; ++i) {
        const auto& ce = eqs.at(pat[base + i].lhs).coeff;
        int hot = -1, total = 0;
        for (int j = 0; j < 3; ++j)
          if (ce[j] != 0) {
            hot = j;
            total += static_cast<int>(ce[j]);
          }
        if (total != 1) units = false;
        else names[hot] = greek[i];
      }
      for (const auto& q : pat) {
        ChartEquation e = eqs.at(q.lhs);
        e.coeff_name = units ? coeff_string(e.coeff, names) : q.name;
        c.equations.push_back(e);
      }
      return c;
    }
  }
  c.orientation = Orientation::Degenerate;
  std::vector<ChartEquation> list;
  for (auto& [m, e] : eqs) list.push_back(e);
  std::sort(list.begin(), list.end(), [](const ChartEquation& a, const ChartEquation& b) {
    return a.lhs.degree() != b.lhs.degree() ? a.lhs.degree() < b.lhs.degree() : b.lhs < a.lhs;
  });
  for (auto& e : list) e.coeff_name = coeff_string(e.coeff, {"u", "v", "w"});
  c.equations = std::move(list);
  return c;
}

std::array<LatticePoint, 3> vertices_from_chart(const Chart& c, const GroupSpec& g) {
  if (c.orientation == Orientation::Degenerate) throw DomainError("degenerate charts have no minor formula");
  int base = c.orientation == Orientation::Up ? 0 : 3;
  std::array<section::Vec, 3> rows;
  for (int i = 0; i < 3; ++i) {
    const auto& e = c.equations.at(static_cast<std::size_t>(base + i));
    for (int j = 0; j < 3; ++j) rows[i][j] = e.lhs.e[j] - e.rhs.e[j];
  }
  if (section::det(rows[0], rows[1], rows[2]) == 0) throw DomainError("singular exponent matrix");
  std::array<LatticePoint, 3> out;
  for (int i = 0; i < 3; ++i) {
    auto v = section::cross(rows[(i + 1) % 3], rows[(i + 2) % 3]);
    bool neg = v[0] <= 0 && v[1] <= 0 && v[2] <= 0;
    bool pos = v[0] >= 0 && v[1] >= 0 && v[2] >= 0;
    if (!neg && !pos) throw VerificationError("minor vector leaves the orthant");
    if (neg)
      for (auto& x : v) x = -x;
    out[i] = g.primitive_on_ray({v[0], v[1], v[2]});
  }
  return out;
}

}  // namespace mckay
