#include "mckay/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace mckay {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

// ---------------------------------------------------------------------------
// GroupElement / LatticePoint / Character

bool GroupElement::is_identity() const {
  return std::all_of(num.begin(), num.end(), [](std::int64_t v) { return v == 0; });
}

LatticePoint::LatticePoint(std::vector<Int> num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("lattice point with zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  Int g = gcd(content(num_), den_);
  if (g > 1) {
    for (auto& v : num_) v /= g;
    den_ /= g;
  }
}

LatticePoint LatticePoint::unit(std::size_t n, std::size_t i) {
  std::vector<Int> v(n, 0);
  v.at(i) = 1;
  return LatticePoint(std::move(v), 1);
}

bool LatticePoint::in_closed_orthant() const {
  return std::all_of(num_.begin(), num_.end(), [](const Int& v) { return v >= 0; });
}

bool LatticePoint::is_interior() const {
  return std::all_of(num_.begin(), num_.end(), [](const Int& v) { return v > 0; });
}

bool LatticePoint::is_coordinate_ray() const {
  return std::count_if(num_.begin(), num_.end(), [](const Int& v) { return v != 0; }) == 1;
}

Rational LatticePoint::pair(std::span<const int> exps) const {
  Int s = 0;
  for (std::size_t i = 0; i < num_.size(); ++i) s += num_[i] * exps[i];
  return Rational(s, den_);
}

std::vector<Int> LatticePoint::scaled_to(const Int& d) const {
  if (d % den_ != 0) throw DomainError("denominator " + to_decimal(den_) + " does not divide " + to_decimal(d));
  Int f = d / den_;
  std::vector<Int> out = num_;
  for (auto& v : out) v *= f;
  return out;
}

std::string LatticePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) s += ",";
    s += to_decimal(num_[i]);
  }
  s += ")";
  if (den_ != 1) s += "/" + to_decimal(den_);
  return s;
}

std::strong_ordering LatticePoint::operator<=>(const LatticePoint& other) const {
  for (std::size_t i = 0; i < std::min(num_.size(), other.num_.size()); ++i) {
    Int lhs = num_[i] * other.den_;
    Int rhs = other.num_[i] * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
  }
  return num_.size() <=> other.num_.size();
}

Character Character::operator+(const Character& other) const {
  Character out = *this;
  for (std::size_t j = 0; j < residues.size(); ++j)
    out.residues[j] = mod(residues[j] + other.residues.at(j), moduli[j]);
  return out;
}

Character Character::operator-() const {
  Character out = *this;
  for (std::size_t j = 0; j < residues.size(); ++j) out.residues[j] = mod(-residues[j], moduli[j]);
  return out;
}

bool Character::is_trivial() const {
  return std::all_of(residues.begin(), residues.end(), [](std::int64_t v) { return v == 0; });
}

std::string Character::to_string() const {
  if (residues.size() == 1) return std::to_string(residues[0]);
  std::string s = "[";
  for (std::size_t j = 0; j < residues.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(residues[j]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::from_generators(int n, std::vector<Generator> gens) {
  if (n < 2 || n > 4) throw DomainError("dimension must be between 2 and 4, got " + std::to_string(n));
  if (gens.empty()) throw DomainError("no generators");

  std::vector<Generator> canon;
  for (auto& g : gens) {
    if (g.r <= 0) throw DomainError("generator denominator must be positive");
    if (static_cast<int>(g.weights.size()) != n)
      throw DomainError("generator has " + std::to_string(g.weights.size()) + " weights, expected " +
                        std::to_string(n));
    std::int64_t c = g.r;
    for (auto& a : g.weights) {
      a = mod(a, g.r);
      c = std::gcd(c, a);
    }
    if (c == g.r) continue;  // zero generator, handled below
    g.r /= c;
    for (auto& a : g.weights) a /= c;
    canon.push_back(std::move(g));
  }
  if (canon.empty()) throw DomainError("trivial group: every generator acts trivially");
  if (canon.size() < gens.size())
    throw DomainError("a generator acts trivially; remove it from the group spec");
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  GroupSpec g;
  g.n_ = n;
  g.gens_ = std::move(canon);
  for (const auto& gen : g.gens_) g.exponent_ = lcm64(g.exponent_, gen.r);

  const std::int64_t d = g.exponent_;
  // Element closure by breadth-first search over generator steps.
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> queue;
  std::vector<std::int64_t> zero(n, 0);
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& gen : g.gens_) {
      auto next = cur;
      for (int i = 0; i < n; ++i) next[i] = mod(next[i] + gen.weights[i] * (d / gen.r), d);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  for (const auto& v : seen) {
    g.element_index_.emplace(v, g.elements_.size());
    g.elements_.push_back(GroupElement{v, d});
  }

  for (const auto& e : g.elements_) {
    if (e.is_identity()) continue;
    auto nonzero = std::count_if(e.num.begin(), e.num.end(), [](std::int64_t v) { return v != 0; });
    if (nonzero == 1) g.quasireflections_ = true;
    if (nonzero < n) g.only_origin_ = false;
  }

  // Characters: closure of the coordinate characters under addition.
  std::vector<std::int64_t> moduli;
  for (const auto& gen : g.gens_) moduli.push_back(gen.r);
  long double radix = 1;
  for (auto m : moduli) radix *= static_cast<long double>(m);
  if (radix > 4e18L) throw DomainError("character group too large to index");

  std::vector<Character> coords;
  for (int i = 0; i < n; ++i) {
    Character c{{}, moduli};
    for (const auto& gen : g.gens_) c.residues.push_back(gen.weights[i]);
    coords.push_back(std::move(c));
  }
  std::set<std::vector<std::int64_t>> chars;
  Character triv{std::vector<std::int64_t>(moduli.size(), 0), moduli};
  std::deque<Character> cq{triv};
  chars.insert(triv.residues);
  while (!cq.empty()) {
    auto cur = cq.front();
    cq.pop_front();
    for (const auto& c : coords) {
      auto next = cur + c;
      if (chars.insert(next.residues).second) cq.push_back(std::move(next));
    }
  }
  for (const auto& res : chars) {
    g.char_lookup_.emplace(g.residue_key(res), g.characters_.size());
    g.characters_.push_back(Character{res, moduli});
  }
  if (g.characters_.size() != g.elements_.size())
    throw VerificationError("character group size " + std::to_string(g.characters_.size()) +
                            " differs from group order " + std::to_string(g.elements_.size()));
  for (const auto& c : coords) g.coord_chars_.push_back(g.char_index(c));
  return g;
}

std::uint64_t GroupSpec::residue_key(std::span<const std::int64_t> residues) const {
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < gens_.size(); ++j)
    key = key * static_cast<std::uint64_t>(gens_[j].r) + static_cast<std::uint64_t>(residues[j]);
  return key;
}

bool GroupSpec::contains(const LatticePoint& p) const {
  if (static_cast<int>(p.dim()) != n_) return false;
  if (Int(exponent_) % p.den() != 0) return false;
  auto scaled = p.scaled_to(Int(exponent_));
  std::vector<std::int64_t> key(n_);
  for (int i = 0; i < n_; ++i) key[i] = to_i64(mod(scaled[i], Int(exponent_)));
  return element_index_.count(key) > 0;
}

LatticePoint GroupSpec::point(std::vector<Int> num, Int den) const {
  LatticePoint p(std::move(num), std::move(den));
  if (!contains(p)) throw DomainError("point " + p.to_string() + " is not in the lattice L of " + to_string());
  return p;
}

LatticePoint GroupSpec::point(const std::vector<std::int64_t>& num, std::int64_t den) const {
  std::vector<Int> v(num.begin(), num.end());
  return point(std::move(v), Int(den));
}

LatticePoint GroupSpec::primitive_on_ray(const std::vector<Int>& dir) const {
  Int c = content(dir);
  if (c == 0) throw DomainError("zero direction has no primitive point");
  std::vector<Int> prim = dir;
  for (auto& v : prim) v /= c;
  for (std::int64_t s = 1; s <= exponent_; ++s) {
    std::vector<Int> num = prim;
    for (auto& v : num) v *= s;
    LatticePoint p(std::move(num), Int(exponent_));
    if (contains(p)) return p;
  }
  throw VerificationError("no lattice point found on ray");  // unreachable: s = exponent gives prim
}

bool GroupSpec::is_primitive(const LatticePoint& p) const {
  if (!contains(p)) return false;
  return primitive_on_ray(p.num()) == p;
}

std::size_t GroupSpec::char_index(const Character& c) const {
  auto it = char_lookup_.find(residue_key(c.residues));
  if (it == char_lookup_.end()) throw DomainError("not a character of this group: " + c.to_string());
  return it->second;
}

Character GroupSpec::character_of(std::span<const int> exps) const {
  if (static_cast<int>(exps.size()) != n_) throw DomainError("monomial dimension mismatch");
  Character c{std::vector<std::int64_t>(gens_.size(), 0), {}};
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < n_; ++i) s += static_cast<std::int64_t>(exps[i]) * gens_[j].weights[i];
    c.residues[j] = mod(s, gens_[j].r);
    c.moduli.push_back(gens_[j].r);
  }
  return c;
}

std::size_t GroupSpec::char_index_of(std::span<const int> exps) const {
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < n_; ++i) s += static_cast<std::int64_t>(exps[i]) * gens_[j].weights[i];
    key = key * static_cast<std::uint64_t>(gens_[j].r) + static_cast<std::uint64_t>(mod(s, gens_[j].r));
  }
  return char_lookup_.at(key);
}

std::size_t GroupSpec::char_add(std::size_t a, std::size_t b) const {
  return char_index(characters_.at(a) + characters_.at(b));
}

std::size_t GroupSpec::char_neg(std::size_t a) const { return char_index(-characters_.at(a)); }

std::string GroupSpec::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (j) s += ";";
    s += "1/" + std::to_string(gens_[j].r) + "(";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string(gens_[j].weights[i]);
    }
    s += ")";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  GroupSpec parse() {
    if (s_.empty()) fail("empty group spec");
    std::vector<Generator> gens;
    int n = -1;
    while (true) {
      gens.push_back(generator());
      int dim = static_cast<int>(gens.back().weights.size());
      if (n < 0) n = dim;
      if (dim != n) fail("generators have different lengths");
      if (pos_ == s_.size()) break;
      expect(';');
    }
    if (n < 2 || n > 4) throw DomainError("dimension must be between 2 and 4, got " + std::to_string(n));
    return GroupSpec::from_generators(n, std::move(gens));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100000000000LL) fail("integer too large");
      v = v * 10 + (s_[pos_++] - '0');
    }
    if (pos_ == start) fail("expected integer");
    return neg ? -v : v;
  }

  Generator generator() {
    if (integer() != 1) fail("generator must start with 1/");
    expect('/');
    Generator g;
    g.r = integer();
    if (g.r <= 0) fail("denominator must be positive");
    expect('(');
    g.weights.push_back(integer());
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      g.weights.push_back(integer());
    }
    expect(')');
    return g;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group(std::string_view text) { return SpecParser(text).parse(); }

// ---------------------------------------------------------------------------
// Age and friends

bool is_gorenstein(const GroupSpec& g) {
  for (const auto& e : g.elements()) {
    std::int64_t s = 0;
    for (auto v : e.num) s += v;
    if (s % e.den != 0) return false;
  }
  return true;
}

Rational age(const GroupElement& e) {
  std::int64_t s = 0;
  for (auto v : e.num) s += v;
  return Rational(s, e.den);
}

Rational age(const LatticePoint& p) {
  if (!p.in_closed_orthant()) throw DomainError("age undefined for " + p.to_string() + ": negative coordinate");
  Int s = 0;
  for (const auto& v : p.num()) s += v;
  return Rational(s, p.den());
}

Rational discrepancy(const LatticePoint& b, const GroupSpec& g) {
  if (!g.is_primitive(b)) throw DomainError(b.to_string() + " is not a primitive point of L");
  return age(b) - 1;
}

std::vector<GroupElement> junior_elements(const GroupSpec& g) {
  if (!is_gorenstein(g)) throw DomainError("junior elements need a Gorenstein group; " + g.to_string() + " is not");
  std::vector<GroupElement> out;
  for (const auto& e : g.elements())
    if (age(e) == 1) out.push_back(e);
  return out;
}

StringyEuler stringy_euler(const GroupSpec& g) {
  return StringyEuler{static_cast<std::int64_t>(g.order()), !g.fixes_only_origin()};
}

Rational determinant(const std::vector<LatticePoint>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].dim() != n) throw DomainError("determinant needs n points in dimension n");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i].coord(j);
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

bool is_basic_simplex(const std::vector<LatticePoint>& vertices, const GroupSpec& g) {
  if (static_cast<int>(vertices.size()) != g.dim())
    throw DomainError("a simplex cone needs exactly n vertices");
  for (const auto& v : vertices)
    if (!g.contains(v)) throw DomainError(v.to_string() + " is not in L");
  Rational det = determinant(vertices);
  if (det == 0) throw DomainError("degenerate simplex: vertices are linearly dependent");
  // L has covolume 1/|G| in R^n.
  return boost::multiprecision::abs(det) * static_cast<std::int64_t>(g.order()) == 1;
}

Heuristic4d heuristic_4d(std::int64_t r) {
  if (r < 4) throw DomainError("heuristic_4d needs r >= 4");
  auto g = GroupSpec::from_generators(4, {Generator{r, {1, 1, 1, r - 3}}});
  Heuristic4d out;
  out.junior_count = junior_elements(g).size();
  const std::int64_t k = r / 3;
  std::vector<LatticePoint> verts{g.point(std::vector<std::int64_t>{k, k, k, r - 3 * k}, r),
                                  LatticePoint::unit(4, 0), LatticePoint::unit(4, 1), LatticePoint::unit(4, 2)};
  try {
    out.basic = is_basic_simplex(verts, g);
  } catch (const DomainError&) {
    out.basic = false;  // r divisible by 3: the apex lies in the span of e1, e2, e3
  }
  out.heuristic_predicts = r % 3 == 1;
  return out;
}

}  // namespace mckay
