#include "mckay/labels.hpp"

#include "mckay/section.hpp"

#include <algorithm>
#include <map>

namespace mckay {

namespace {

section::Vec lift(const LatticePoint& p, const GroupSpec& g) {
  auto v = p.scaled_to(g.exponent());
  return {v[0], v[1], v[2]};
}

section::Vec add(const section::Vec& a, const section::Vec& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Int pairing(const LatticePoint& p, const Monomial& a, const Monomial& b) {
  Rational d = p.pair(a.exps()) - p.pair(b.exps());
  if (denominator(d) != 1) throw VerificationError("non-integral pairing of " + p.to_string());
  return numerator(d);
}

// Integers b, c with w = b u + c v; throws if there are none.
std::pair<Int, Int> decompose(const section::Vec& w, const section::Vec& u, const section::Vec& v) {
  auto uv = section::cross(u, v), wv = section::cross(w, v);
  Int b = 0;
  bool found = false;
  for (int k = 0; k < 3 && !found; ++k)
    if (uv[k] != 0) {
      if (wv[k] % uv[k] != 0) throw VerificationError("link relation is not integral");
      b = wv[k] / uv[k];
      found = true;
    }
  if (!found) throw VerificationError("link ray is parallel to the vertex");
  section::Vec rest{w[0] - b * u[0], w[1] - b * u[1], w[2] - b * u[2]};
  Int c = 0;
  for (int k = 0; k < 3; ++k)
    if (v[k] != 0) {
      if (rest[k] % v[k] != 0) throw VerificationError("link relation is not integral");
      c = rest[k] / v[k];
      break;
    }
  for (int k = 0; k < 3; ++k)
    if (rest[k] != c * v[k]) throw VerificationError("link rays are not coplanar with the vertex");
  return {b, c};
}

// Coefficients of the restriction of L(a) to the surface on its link curves.
std::vector<Int> restricted(std::size_t a, const SurfaceRecord& surf, const Fan3& f, const SupportTable& s) {
  const Monomial& m0 = s.marked(surf.star.front(), a);
  std::vector<Int> out;
  for (std::size_t i = 0; i < surf.link.size(); ++i)
    out.push_back(-pairing(f.vertices()[surf.link[i]], s.marked(surf.star[i], a), m0));
  return out;
}

bool sums_equal(const std::vector<std::size_t>& e, const std::vector<std::size_t>& fchars, const Fan3& f,
                const SupportTable& s) {
  const std::size_t m = interior_edges(f).size();
  std::vector<Int> lhs(m, 0), rhs(m, 0);
  for (auto a : e) {
    auto c = bundle_class(f, s, a);
    for (std::size_t i = 0; i < m; ++i) lhs[i] += c.degrees[i];
  }
  for (auto a : fchars) {
    auto c = bundle_class(f, s, a);
    for (std::size_t i = 0; i < m; ++i) rhs[i] += c.degrees[i];
  }
  return lhs == rhs;
}

}  // namespace

EdgeLabel edge_label(const LatticePoint& a, const LatticePoint& b, const GroupSpec& g) {
  if (a.dim() != 3 || b.dim() != 3) throw DomainError("edge labels are defined for n = 3");
  section::Vec w = section::cross({a.num()[0], a.num()[1], a.num()[2]}, {b.num()[0], b.num()[1], b.num()[2]});
  if (w == section::Vec{0, 0, 0}) throw DomainError("collinear rays have no edge label");
  Int c = content(std::vector<Int>(w.begin(), w.end()));
  for (auto& x : w) x /= c;
  for (const auto& x : w)
    if (x != 0) {
      if (x < 0)
        for (auto& y : w) y = -y;
      break;
    }
  std::array<int, 3> pos{}, neg{};
  for (int i = 0; i < 3; ++i) {
    int x = static_cast<int>(to_i64(w[i]));
    (x > 0 ? pos[i] : neg[i]) = x > 0 ? x : -x;
  }
  // primitive among G-invariant exponent vectors, not just in Z^3
  int t = 1;
  auto scaled = [&](const std::array<int, 3>& e) {
    return Monomial(3, {t * e[0], t * e[1], t * e[2]});
  };
  while (g.char_index_of(scaled(pos).exps()) != g.char_index_of(scaled(neg).exps())) {
    if (++t > g.exponent()) throw VerificationError("edge ratio is not homogeneous");
  }
  EdgeLabel l;
  l.positive = scaled(pos);
  l.negative = scaled(neg);
  l.character = g.char_index_of(l.positive.exps());
  auto mod = minimal_generators(l.character, g);
  l.in_generators = mod.contains(l.positive) && mod.contains(l.negative);
  return l;
}

SupportTable::SupportTable(const Fan3& f) {
  const GroupSpec& g = f.group();
  marked_.resize(f.cones().size());
  const bool have_tripods = f.tripods().size() == f.cones().size();
  for (std::size_t c = 0; c < f.cones().size(); ++c) {
    if (have_tripods) {
      marked_[c] = f.tripods()[c].chosen;
      continue;
    }
    const auto& k = f.cones()[c];
    auto v = add(add(lift(f.vertices()[k[0]], g), lift(f.vertices()[k[1]], g)), lift(f.vertices()[k[2]], g));
    std::vector<Int> w(v.begin(), v.end());
    for (std::size_t a = 0; a < g.order(); ++a) {
      auto mm = marked_minimum(f.modules().at(a), w);
      if (mm.is_tie()) throw VerificationError("tie in the marked minimum of character " + std::to_string(a));
      marked_[c].push_back(mm.minimizers.front());
    }
  }
}

std::vector<std::size_t> interior_edges(const Fan3& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.edges().size(); ++i)
    if (f.edges()[i].interior) out.push_back(i);
  return out;
}

Int curve_degree(const Fan3& f, const SupportTable& s, std::size_t character, std::size_t edge) {
  const FanEdge& e = f.edges().at(edge);
  if (!e.interior || e.cones.size() != 2) throw DomainError("curve degrees need an interior edge with two cones");
  const auto& c1 = f.vertices()[f.opposite(e.cones[0], e)];
  const auto& c2 = f.vertices()[f.opposite(e.cones[1], e)];
  const Monomial& m1 = s.marked(e.cones[0], character);
  const Monomial& m2 = s.marked(e.cones[1], character);
  Int d = pairing(c2, m1, m2);
  if (d != pairing(c1, m2, m1)) throw VerificationError("bend differs between the two sides of an edge");
  return d;
}

BundleClass bundle_class(const Fan3& f, const SupportTable& s, std::size_t character) {
  BundleClass b{character, {}};
  for (auto e : interior_edges(f)) b.degrees.push_back(curve_degree(f, s, character, e));
  return b;
}

BundleClass operator+(const BundleClass& a, const BundleClass& b) {
  if (a.degrees.size() != b.degrees.size()) throw DomainError("bundle classes of different fans");
  BundleClass out{0, a.degrees};
  for (std::size_t i = 0; i < b.degrees.size(); ++i) out.degrees[i] += b.degrees[i];
  return out;
}

DualBasisReport dual_basis_check(const Fan3& f, const SupportTable& s) {
  DualBasisReport r;
  for (auto i : interior_edges(f)) {
    const auto& e = f.edges()[i];
    const auto& a = f.vertices()[e.rays[0]];
    const auto& b = f.vertices()[e.rays[1]];
    auto l = edge_label(a, b, f.group());
    ++r.checked;
    Int d = curve_degree(f, s, l.character, i);
    if (d != 1)
      r.violations.push_back("edge " + a.to_string() + " " + b.to_string() + " has degree " + to_decimal(d) + " against L(" +
                             std::to_string(l.character) + ")");
  }
  return r;
}

SurfaceRecord surface_at_vertex(std::size_t v, const Fan3& f, const SupportTable& s) {
  if (!f.is_interior_vertex(v)) throw DomainError("surface records need an interior vertex");
  const GroupSpec& g = f.group();
  SurfaceRecord r;
  r.vertex = v;
  auto star = f.star(v);
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (auto c : star) {
    std::vector<std::size_t> other;
    for (auto u : f.cones()[c])
      if (u != v) other.push_back(u);
    adj[other[0]].push_back(other[1]);
    adj[other[1]].push_back(other[0]);
  }
  for (auto& [u, nb] : adj) {
    if (nb.size() != 2) throw VerificationError("link of " + f.vertices()[v].to_string() + " is not a cycle");
    std::sort(nb.begin(), nb.end());
  }
  std::size_t start = adj.begin()->first, prev = start, cur = adj.begin()->second.front();
  r.link.push_back(start);
  while (cur != start) {
    r.link.push_back(cur);
    const auto& nb = adj[cur];
    std::size_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (r.link.size() != adj.size()) throw VerificationError("link of " + f.vertices()[v].to_string() + " is not connected");

  const std::size_t n = r.link.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a = r.link[i], b = r.link[(i + 1) % n];
    auto e = f.edge_index(v, a);
    if (!e) throw VerificationError("missing link edge");
    r.link_edges.push_back(*e);
    for (auto c : star) {
      const auto& k = f.cones()[c];
      if (std::find(k.begin(), k.end(), a) != k.end() && std::find(k.begin(), k.end(), b) != k.end()) {
        r.star.push_back(c);
        break;
      }
    }
  }

  const auto cv = lift(f.vertices()[v], g);
  for (std::size_t i = 0; i < n; ++i) {
    auto w = add(lift(f.vertices()[r.link[(i + n - 1) % n]], g), lift(f.vertices()[r.link[(i + 1) % n]], g));
    auto [b, c] = decompose(w, lift(f.vertices()[r.link[i]], g), cv);
    (void)c;
    r.self_intersections.push_back(-static_cast<int>(to_i64(b)));
  }
  bool hex = n == 6 && std::all_of(r.self_intersections.begin(), r.self_intersections.end(), [](int x) { return x == -1; });
  r.kind = hex ? SurfaceKind::Hexagon : SurfaceKind::Other;
  if (hex) {
    r.relation = hexagon_relation(r, f, s);
    r.c2_value = c2_evaluate({r.relation->e.begin(), r.relation->e.end()}, {r.relation->f.begin(), r.relation->f.end()},
                             r, f, s);
  }
  return r;
}

HexagonRelation hexagon_relation(const SurfaceRecord& surf, const Fan3& f, const SupportTable& s) {
  if (surf.kind != SurfaceKind::Hexagon || surf.link.size() != 6) throw DomainError("not a hexagon");
  const GroupSpec& g = f.group();
  HexagonRelation h;
  auto label = [&](std::size_t i) {
    const auto& e = f.edges()[surf.link_edges[i]];
    return edge_label(f.vertices()[e.rays[0]], f.vertices()[e.rays[1]], g).character;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    h.e[i] = label(i);
    if (label(i + 3) != h.e[i]) throw VerificationError("opposite hexagon edges carry different characters");
  }
  std::size_t esum = g.char_add(g.char_add(h.e[0], h.e[1]), h.e[2]);

  for (std::size_t a = 0; a < g.order(); ++a) {
    std::array<Int, 6> d;
    for (std::size_t i = 0; i < 6; ++i) d[i] = curve_degree(f, s, a, surf.link_edges[i]);
    if (d == std::array<Int, 6>{1, 0, 1, 0, 1, 0}) h.f1_candidates.push_back(a);
    if (d == std::array<Int, 6>{0, 1, 0, 1, 0, 1}) h.f2_candidates.push_back(a);
  }
  std::size_t fits = 0;
  for (auto x : h.f1_candidates)
    for (auto y : h.f2_candidates) {
      if (g.char_add(x, y) != esum) continue;
      if (!sums_equal({h.e.begin(), h.e.end()}, {x, y}, f, s)) continue;
      if (fits++ == 0) h.f = {x, y};
    }
  if (fits == 0) throw VerificationError("no f-characters fit the hexagon at " + f.vertices()[surf.vertex].to_string());
  h.ambiguous = fits > 1;
  return h;
}

Int surface_intersection(std::size_t a, std::size_t b, const SurfaceRecord& surf, const Fan3& f,
                         const SupportTable& s) {
  auto da = restricted(a, surf, f, s), db = restricted(b, surf, f, s);
  const std::size_t n = surf.link.size();
  Int total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += da[i] * db[i] * surf.self_intersections[i];
    total += da[i] * db[(i + 1) % n] + da[(i + 1) % n] * db[i];
  }
  return total;
}

Int c2_evaluate(const std::vector<std::size_t>& e, const std::vector<std::size_t>& fchars, const SurfaceRecord& surf,
                const Fan3& f, const SupportTable& s) {
  if (!sums_equal(e, fchars, f, s)) throw DomainError("first Chern class of the relation is not zero");
  auto pairs = [&](const std::vector<std::size_t>& c) {
    Int t = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) t += surface_intersection(c[i], c[j], surf, f, s);
    return t;
  };
  return pairs(e) - pairs(fchars);
}

std::vector<PairRelation> pair_relations(const Fan3& f, const SupportTable& s) {
  const GroupSpec& g = f.group();
  std::vector<BundleClass> cls;
  for (std::size_t a = 0; a < g.order(); ++a) cls.push_back(bundle_class(f, s, a));
  std::vector<PairRelation> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i; j < g.order(); ++j) {
      PairRelation p{i, j, g.char_add(i, j)};
      p.bundle_additive = (cls[i] + cls[j]).degrees == cls[p.k].degrees;
      p.module_equal = module_equal(module_product({i, j}, g, f.modules()), f.modules()[p.k]);
      if (p.bundle_additive || p.module_equal) out.push_back(p);
    }
  return out;
}

std::string_view role_name(Role r) {
  switch (r) {
    case Role::Trivial:
      return "trivial";
    case Role::EdgeLabel:
      return "edge label";
    case Role::HexagonF:
      return "hexagon f";
    case Role::NonActive:
      return "non-active";
  }
  return "?";
}

Correspondence mckay_correspondence(const Fan3& f) {
  const GroupSpec& g = f.group();
  SupportTable s(f);
  Correspondence c;
  auto inner = interior_edges(f);
  for (auto i : inner) {
    const auto& e = f.edges()[i];
    auto l = edge_label(f.vertices()[e.rays[0]], f.vertices()[e.rays[1]], g);
    l.rays = e.rays;
    c.labels.push_back(l);
  }
  for (std::size_t a = 0; a < g.order(); ++a) c.bundles.push_back(bundle_class(f, s, a));
  for (std::size_t v = 0; v < f.vertices().size(); ++v)
    if (f.is_interior_vertex(v)) c.surfaces.push_back(surface_at_vertex(v, f, s));
  c.pairs = pair_relations(f, s);
  c.dual = dual_basis_check(f, s);

  for (std::size_t a = 0; a < g.order(); ++a) {
    TableRow row;
    row.character = a;
    for (std::size_t k = 0; k < inner.size(); ++k)
      if (c.labels[k].character == a) row.edges.push_back(inner[k]);
    for (const auto& surf : c.surfaces)
      if (surf.relation && std::find(surf.relation->f.begin(), surf.relation->f.end(), a) != surf.relation->f.end())
        row.hexagons.push_back(surf.vertex);
    for (const auto& p : c.pairs)
      if (p.i != 0 && p.bundle_additive && p.module_equal && (p.i == a || p.j == a || p.k == a))
        row.relations.push_back(p);
    if (a == 0)
      row.role = Role::Trivial;
    else if (!row.edges.empty())
      row.role = Role::EdgeLabel;
    else if (!row.hexagons.empty())
      row.role = Role::HexagonF;
    else
      row.role = Role::NonActive;
    c.table.push_back(std::move(row));
  }
  return c;
}

}  // namespace mckay
