#include "mckay/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mckay {

namespace {

void check_rq(std::int64_t r, std::int64_t q) {
  if (r < 2 || q <= 0 || q >= r) throw DomainError("need 0 < q < r");
  if (std::gcd(r, q) != 1) throw DomainError("r and q must be coprime");
}

using P2 = std::array<std::int64_t, 2>;

P2 numerators(const LatticePoint& p, std::int64_t r) {
  auto v = p.scaled_to(r);
  return {to_i64(v[0]), to_i64(v[1])};
}

// (alpha, beta) with the ray's ratio x^alpha : y^beta: the smallest multiple
// of (v2, v1)/gcd whose two monomials share a character.
std::pair<int, int> ratio_exponents(const LatticePoint& p, std::int64_t r, std::int64_t q) {
  auto [v1, v2] = numerators(p, r);
  if (v2 == 0) return {0, static_cast<int>(r)};
  if (v1 == 0) return {static_cast<int>(r), 0};
  std::int64_t g = std::gcd(v1, v2);
  std::int64_t a = v2 / g, b = v1 / g;
  std::int64_t t = 1;
  while ((t * (a - q * b)) % r != 0) ++t;
  return {static_cast<int>(t * a), static_cast<int>(t * b)};
}

Monomial xy(int i, int j) { return Monomial(2, {i, j, 0}); }

std::vector<LatticePoint> chain_from_x_axis(const SurfaceResolution& s) {
  return {s.boundary_points.rbegin(), s.boundary_points.rend()};
}

Int bend(const std::vector<LatticePoint>& rays, std::size_t i, const CharacterModule& mod, std::int64_t r) {
  auto at = [&](std::size_t j) {
    auto a = numerators(rays[j], r), b = numerators(rays[j + 1], r);
    auto mm = marked_minimum(mod, std::vector<Int>{a[0] + b[0], a[1] + b[1]});
    if (mm.is_tie()) throw VerificationError("marked minimum is not unique inside a cone");
    return mm.minimizers.front();
  };
  Monomial m1 = at(i), m2 = at(i + 1);
  Rational d = rays[i + 2].pair(m1.exps()) - rays[i + 2].pair(m2.exps());
  Rational check = rays[i].pair(m2.exps()) - rays[i].pair(m1.exps());
  if (d != check || denominator(d) != 1) throw VerificationError("inconsistent bend across a curve");
  return numerator(d);
}

}  // namespace

std::pair<std::int64_t, std::int64_t> ContinuedFraction::evaluate() const {
  if (terms.empty()) throw DomainError("empty continued fraction");
  std::int64_t p = terms.back(), d = 1;
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    std::int64_t np = *it * p - d;
    d = p;
    p = np;
  }
  return {p, d};
}

ContinuedFraction hj_expand(std::int64_t r, std::int64_t q) {
  check_rq(r, q);
  ContinuedFraction cf{r, q, {}};
  std::int64_t a = r, b = q;
  while (b > 0) {
    std::int64_t t = (a + b - 1) / b;
    cf.terms.push_back(t);
    std::int64_t nb = t * b - a;
    a = b;
    b = nb;
  }
  return cf;
}

GroupSpec surface_group(std::int64_t r, std::int64_t q) {
  check_rq(r, q);
  return GroupSpec::from_generators(2, {Generator{r, {1, q}}});
}

std::vector<LatticePoint> newton_boundary(std::int64_t r, std::int64_t q) {
  GroupSpec g = surface_group(r, q);
  std::vector<P2> pts{{0, r}};
  for (std::int64_t i = 1; i < r; ++i) pts.push_back({i, (i * q) % r});
  pts.push_back({r, 0});
  // lower hull from left to right, collinear points kept
  std::vector<P2> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      std::int64_t cr = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]);
      if (cr >= 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  std::vector<LatticePoint> out;
  for (const auto& p : hull) out.push_back(g.point(std::vector<std::int64_t>{p[0], p[1]}, r));
  return out;
}

SurfaceResolution resolve_surface(std::int64_t r, std::int64_t q) {
  SurfaceResolution s;
  s.r = r;
  s.q = q;
  s.group = surface_group(r, q);
  s.fraction = hj_expand(r, q);
  s.boundary_points = newton_boundary(r, q);
  const auto& b = s.boundary_points;
  const std::size_t k = s.fraction.terms.size();
  if (b.size() != k + 2)
    throw VerificationError("hull has " + std::to_string(b.size() - 2) + " interior points but the continued fraction has " +
                            std::to_string(k) + " terms");

  // The continued fraction generates the same chain: u(i+1) = b_i u(i) - u(i-1).
  P2 prev{0, r}, cur{1, q};
  for (std::size_t i = 0; i < k; ++i) {
    if (numerators(b[i], r) != prev || numerators(b[i + 1], r) != cur)
      throw VerificationError("hull and continued fraction chains differ");
    P2 next{s.fraction.terms[i] * cur[0] - prev[0], s.fraction.terms[i] * cur[1] - prev[1]};
    prev = cur;
    cur = next;
  }
  if (cur != P2{r, 0}) throw VerificationError("continued fraction chain does not end at (1,0)");

  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (!is_basic_simplex({b[i], b[i + 1]}, s.group))
      throw VerificationError("cone " + b[i].to_string() + " " + b[i + 1].to_string() + " is not basic");

  auto chain = chain_from_x_axis(s);
  for (std::size_t i = 1; i <= k; ++i) {
    auto u0 = numerators(chain[i - 1], r), u = numerators(chain[i], r), u1 = numerators(chain[i + 1], r);
    P2 sum{u0[0] + u1[0], u0[1] + u1[1]};
    std::int64_t t = u[0] != 0 ? sum[0] / u[0] : sum[1] / u[1];
    if (sum != P2{t * u[0], t * u[1]}) throw VerificationError("neighbouring rays do not sum to a multiple");
    if (t != s.fraction.terms[k - i]) throw VerificationError("self-intersection differs from the continued fraction");
    SurfaceCurve c;
    c.ray = chain[i];
    c.self_intersection = static_cast<int>(-t);
    auto [alpha, beta] = ratio_exponents(chain[i], r, q);
    c.ratio_x = xy(alpha, 0);
    c.ratio_y = xy(0, beta);
    c.character = s.group.char_index_of(c.ratio_x.exps());
    if (s.group.char_index_of(c.ratio_y.exps()) != c.character)
      throw VerificationError("ratio monomials of " + c.ray.to_string() + " differ in character");
    s.curves.push_back(c);
  }

  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    SurfaceChart c;
    c.v = chain[j];
    c.w = chain[j + 1];
    auto [av, bv] = ratio_exponents(c.v, r, q);
    auto [aw, bw] = ratio_exponents(c.w, r, q);
    if (aw < av || bv < bw) throw VerificationError("chart exponents are negative");
    c.equations = {{xy(aw, 0), xy(0, bw), "λ"}, {xy(0, bv), xy(av, 0), "μ"}, {xy(aw - av, bv - bw), xy(0, 0), "λμ"}};
    s.charts.push_back(std::move(c));
  }
  return s;
}

std::string SurfaceChart::format(const SurfaceEquation& e) {
  std::string rhs = e.rhs.is_one() ? "" : " " + e.rhs.to_string();
  return e.lhs.to_string() + " = " + e.coeff + rhs;
}

std::vector<Monomial> cluster_basis_check(const SurfaceChart& c, std::int64_t r, std::int64_t q) {
  GroupSpec g = surface_group(r, q);
  std::vector<Monomial> out;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j) {
      Monomial m = xy(i, j);
      bool outside = std::none_of(c.equations.begin(), c.equations.end(),
                                  [&](const SurfaceEquation& e) { return e.lhs.divides(m); });
      if (outside) out.push_back(m);
    }
  std::sort(out.begin(), out.end());
  std::set<std::size_t> chars;
  for (const auto& m : out) chars.insert(g.char_index_of(m.exps()));
  if (out.size() != static_cast<std::size_t>(r) || chars.size() != out.size())
    throw VerificationError("chart quotient basis is not a transversal of the characters");
  return out;
}

Int curve_degree_2d(const SurfaceResolution& s, std::size_t a, std::size_t i) {
  if (i >= s.curves.size()) throw DomainError("curve index out of range");
  return bend(chain_from_x_axis(s), i, minimal_generators(a, s.group), s.r);
}

std::vector<std::vector<Int>> dual_degrees_2d(std::int64_t r, std::int64_t q) {
  auto s = resolve_surface(r, q);
  auto modules = all_minimal_generators(s.group);
  auto chain = chain_from_x_axis(s);
  std::vector<std::vector<Int>> out;
  for (const auto& row : s.curves) {
    std::vector<Int> degs;
    for (std::size_t j = 0; j < s.curves.size(); ++j) degs.push_back(bend(chain, j, modules[row.character], r));
    out.push_back(std::move(degs));
  }
  return out;
}

std::vector<Tripod> tripods_2d(std::int64_t r, std::int64_t q) {
  return enumerate_tripods(surface_group(r, q), {static_cast<std::size_t>(std::max<std::int64_t>(r, 200)), 1});
}

}  // namespace mckay
