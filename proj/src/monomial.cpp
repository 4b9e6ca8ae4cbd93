#include "mckay/monomial.hpp"

#include "mckay/kernels.hpp"
#include "mckay/section.hpp"

#include <algorithm>
#include <limits>

namespace mckay {

Monomial::Monomial(int n_, std::array<int, 3> exps) : e(exps), n(n_) {
  if (n < 2 || n > 3) throw DomainError("monomials are supported in 2 or 3 variables");
  if (n == 2 && e[2] != 0) throw DomainError("third exponent of a 2-variable monomial must be 0");
  for (int x : e)
    if (x < 0) throw DomainError("negative exponent");
}

Monomial Monomial::var(int n, int i) {
  std::array<int, 3> e{};
  e.at(static_cast<std::size_t>(i)) = 1;
  return Monomial(n, e);
}

bool Monomial::divides(const Monomial& o) const {
  return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (int i = 0; i < 3; ++i) m.e[i] += o.e[i];
  return m;
}

std::string Monomial::to_string() const {
  static const char* names[] = {"x", "y", "z"};
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += names[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

CharacterModule::CharacterModule(std::size_t character, std::vector<Monomial> generators)
    : character_(character), gens_(std::move(generators)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (auto& c : cols_) c.reserve(gens_.size());
  for (const auto& m : gens_)
    for (int i = 0; i < 3; ++i) cols_[static_cast<std::size_t>(i)].push_back(m.e[static_cast<std::size_t>(i)]);
}

bool CharacterModule::contains(const Monomial& m) const { return std::binary_search(gens_.begin(), gens_.end(), m); }

Character character_of_monomial(const Monomial& m, const GroupSpec& g) {
  if (m.n != g.dim()) throw DomainError("monomial and group have different dimensions");
  return g.character_of(m.exps());
}

namespace {

constexpr std::int32_t kNone = std::numeric_limits<std::int32_t>::max();

// Character arithmetic tables for the box search.
struct CharTables {
  std::size_t order = 0;
  std::vector<std::size_t> add;  // order x order
  std::vector<std::size_t> neg;
  std::array<std::vector<std::size_t>, 3> power;  // power[i][k] = char of x_i^k, k < exponent

  explicit CharTables(const GroupSpec& g) : order(g.order()), add(order * order), neg(order) {
    for (std::size_t a = 0; a < order; ++a) {
      neg[a] = g.char_neg(a);
      for (std::size_t b = a; b < order; ++b) add[a * order + b] = add[b * order + a] = g.char_add(a, b);
    }
    const auto d = static_cast<std::size_t>(g.exponent());
    for (int i = 0; i < g.dim(); ++i) {
      auto& p = power[static_cast<std::size_t>(i)];
      p.resize(d);
      p[0] = 0;
      for (std::size_t k = 1; k < d; ++k) p[k] = add[p[k - 1] * order + g.coordinate_char(static_cast<std::size_t>(i))];
    }
  }
  std::size_t plus(std::size_t a, std::size_t b) const { return add[a * order + b]; }
  std::size_t minus(std::size_t a, std::size_t b) const { return add[a * order + neg[b]]; }
};

// Smallest k in [0, exponent) with char(last^k) = b, for every b.
std::vector<std::int32_t> first_power(const CharTables& t, int last) {
  std::vector<std::int32_t> out(t.order, kNone);
  const auto& p = t.power[static_cast<std::size_t>(last)];
  for (std::size_t k = 0; k < p.size(); ++k)
    if (out[p[k]] == kNone) out[p[k]] = static_cast<std::int32_t>(k);
  return out;
}

// Every monomial of character a with prefix (x[, y]) has the form
// prefix * last^(k + j*ord), and only the smallest k can be minimal. The prefix
// with its k is minimal iff k is below the minimum over all strictly dominated
// prefixes.
std::vector<Monomial> generators_2d(std::size_t a, const CharTables& t, const std::vector<std::int32_t>& first,
                                    std::int64_t d) {
  std::vector<Monomial> out;
  std::int32_t best = kNone;
  for (std::int64_t x = 0; x < d && best > 0; ++x) {
    std::int32_t k = first[t.minus(a, t.power[0][static_cast<std::size_t>(x)])];
    if (k < best) {
      out.push_back(Monomial(2, {static_cast<int>(x), k, 0}));
      best = k;
    }
  }
  return out;
}

std::vector<Monomial> generators_3d(std::size_t a, const CharTables& t, const std::vector<std::int32_t>& first,
                                    std::int64_t d) {
  const auto n = static_cast<std::size_t>(d);
  std::vector<Monomial> out;
  std::vector<std::int32_t> prev(n, kNone), cur(n), krow(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t ax = t.minus(a, t.power[0][x]);
    for (std::size_t y = 0; y < n; ++y) krow[y] = first[t.minus(ax, t.power[1][y])];
    cur = prev;
    kernels::min_inplace(cur.data(), krow.data(), n);
    for (std::size_t y = 0; y < n; ++y) {
      std::int32_t strict = prev[y];
      if (y > 0) {
        strict = std::min(strict, cur[y - 1]);
        cur[y] = std::min(cur[y], cur[y - 1]);
      }
      if (krow[y] < strict)
        out.push_back(Monomial(3, {static_cast<int>(x), static_cast<int>(y), krow[y]}));
    }
    prev.swap(cur);
    if (prev[0] == 0) break;  // some x^i already has character a
  }
  return out;
}

void check_dim(const GroupSpec& g) {
  if (g.dim() != 2 && g.dim() != 3) throw DomainError("character modules require n = 2 or 3");
}

}  // namespace

CharacterModule minimal_generators(std::size_t a, const GroupSpec& g) {
  check_dim(g);
  if (a >= g.order()) throw DomainError("character index out of range");
  CharTables t(g);
  auto first = first_power(t, g.dim() - 1);
  auto gens = g.dim() == 2 ? generators_2d(a, t, first, g.exponent()) : generators_3d(a, t, first, g.exponent());
  return CharacterModule(a, std::move(gens));
}

std::vector<CharacterModule> all_minimal_generators(const GroupSpec& g) {
  check_dim(g);
  CharTables t(g);
  auto first = first_power(t, g.dim() - 1);
  std::vector<CharacterModule> out;
  out.reserve(g.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    out.emplace_back(a, g.dim() == 2 ? generators_2d(a, t, first, g.exponent())
                                     : generators_3d(a, t, first, g.exponent()));
  return out;
}

std::vector<Monomial> lower_hull_subset(const CharacterModule& mod) {
  const auto& gens = mod.generators();
  if (gens.size() <= 1) return gens;
  const int n = gens.front().n;
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    section::HalfspaceSet hs;
    for (const auto& o : gens)
      if (!(o == m)) hs.add({o.e[0] - m.e[0], o.e[1] - m.e[1], o.e[2] - m.e[2]});
    auto region = section::corners(hs.intersect(section::full_section(n)));
    if (static_cast<int>(region.size()) >= n) out.push_back(m);
  }
  return out;
}

const Monomial& MarkedMinimum::unique() const {
  if (minimizers.size() != 1) throw DomainError("marked minimum is a tie");
  return minimizers.front();
}

MarkedMinimum marked_minimum(const CharacterModule& mod, const std::vector<Int>& v) {
  const auto& gens = mod.generators();
  if (gens.empty()) throw DomainError("empty character module");
  if (v.size() != static_cast<std::size_t>(gens.front().n)) throw DomainError("weight has the wrong dimension");
  for (const auto& c : v)
    if (c < 0) throw DomainError("weight outside the closed orthant");

  MarkedMinimum out;
  bool fits = true;
  for (const auto& c : v) fits = fits && c < kernels::kInputBound;
  for (const auto& m : gens) fits = fits && m.degree() < kernels::kInputBound;
  if (fits) {
    std::int32_t w[3] = {0, 0, 0};
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = static_cast<std::int32_t>(v[i]);
    std::vector<std::int64_t> vals(gens.size());
    kernels::dot3(mod.column(0).data(), mod.column(1).data(), mod.column(2).data(), gens.size(), w, vals.data());
    auto mc = kernels::min_count(vals.data(), vals.size());
    out.value = Rational(mc.min);
    for (std::size_t i = mc.first; i < gens.size() && out.minimizers.size() < mc.count; ++i)
      if (vals[i] == mc.min) out.minimizers.push_back(gens[i]);
    return out;
  }
  std::vector<Int> vals;
  vals.reserve(gens.size());
  for (const auto& m : gens) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * m.e[i];
    vals.push_back(s);
  }
  Int best = *std::min_element(vals.begin(), vals.end());
  out.value = Rational(best);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (vals[i] == best) out.minimizers.push_back(gens[i]);
  return out;
}

MarkedMinimum marked_minimum(const CharacterModule& mod, const LatticePoint& v) {
  auto out = marked_minimum(mod, v.num());
  out.value /= Rational(v.den());
  return out;
}

namespace {

std::vector<Monomial> divisibility_minimal(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Monomial> keep;
  for (const auto& m : v) {
    bool covered = false;
    for (const auto& k : keep)
      if (k.divides(m)) {
        covered = true;
        break;
      }
    if (!covered) keep.push_back(m);
  }
  return keep;
}

}  // namespace

CharacterModule module_product(const std::vector<std::size_t>& chars, const GroupSpec& g,
                               const std::vector<CharacterModule>& modules) {
  if (chars.empty()) throw DomainError("module_product of an empty list");
  std::vector<Monomial> cur{Monomial::one(g.dim())};
  std::size_t ch = 0;
  for (auto c : chars) {
    const auto& f = modules.at(c).generators();
    std::vector<Monomial> next;
    next.reserve(cur.size() * f.size());
    for (const auto& a : cur)
      for (const auto& b : f) next.push_back(a * b);
    cur = divisibility_minimal(std::move(next));
    ch = g.char_add(ch, c);
  }
  return CharacterModule(ch, std::move(cur));
}

CharacterModule module_product(const std::vector<std::size_t>& chars, const GroupSpec& g) {
  return module_product(chars, g, all_minimal_generators(g));
}

bool module_equal(const CharacterModule& a, const CharacterModule& b) {
  if (a.character() != b.character()) throw DomainError("comparing modules of different characters");
  return a.generators() == b.generators();
}

}  // namespace mckay
