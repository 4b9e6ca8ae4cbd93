#include "doctest.h"
#include "mckay/group.hpp"

#include <algorithm>
#include <numeric>

using namespace mckay;

namespace {

// Direct loop over multiples of a single generator, independent of the
// closure code in GroupSpec.
std::vector<std::vector<std::int64_t>> cyclic_residues(std::int64_t r, const std::vector<std::int64_t>& a) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t k = 0; k < r; ++k) {
    std::vector<std::int64_t> v;
    for (auto ai : a) v.push_back(((k * ai) % r + r) % r);
    out.push_back(v);
  }
  return out;
}

std::int64_t residue_sum(const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

TEST_CASE("parse canonical groups") {
  auto g = parse_group("1/13(1,2,10)");
  CHECK(g.dim() == 3);
  CHECK(g.order() == 13);
  CHECK(g.exponent() == 13);
  CHECK(g.is_cyclic_single());
  CHECK(g.to_string() == "1/13(1,2,10)");

  auto h = parse_group("1/5(1,4,0);1/5(0,1,4)");
  CHECK(h.order() == 25);
  CHECK(h.exponent() == 5);
  CHECK_FALSE(h.is_cyclic_single());

  CHECK(parse_group(" 1 / 13 ( 1 , 2 , -3 ) ") == g);
  CHECK(parse_group("1/5(0,1,4);1/5(1,4,0)") == h);
  CHECK(parse_group(h.to_string()) == h);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_group("1/1(0,0)"), DomainError);
  CHECK_THROWS_AS(parse_group("1/5(0,0,0)"), DomainError);
  CHECK_THROWS_AS(parse_group("1/5(1)"), DomainError);
  CHECK_THROWS_AS(parse_group("1/5(1,1,1,1,1)"), DomainError);
  CHECK_THROWS_AS(parse_group("2/5(1,4)"), ParseError);
  CHECK_THROWS_AS(parse_group("1/0(1,4)"), ParseError);
  CHECK_THROWS_AS(parse_group("1/5(1,4"), ParseError);
  CHECK_THROWS_AS(parse_group("1/5(1,4);1/5(1,2,2)"), ParseError);
  CHECK_THROWS_AS(parse_group("1/5(a,4)"), ParseError);
  CHECK_THROWS_AS(parse_group(""), ParseError);
}

TEST_CASE("element enumeration") {
  auto g = parse_group("1/13(1,2,10)");
  const auto& els = enumerate_elements(g);
  REQUIRE(els.size() == 13);
  CHECK(els.front().is_identity());
  auto expected = cyclic_residues(13, {1, 2, 10});
  std::sort(expected.begin(), expected.end());
  for (std::size_t i = 0; i < 13; ++i) CHECK(els[i].num == expected[i]);

  auto h = parse_group("1/5(1,4,0);1/5(0,1,4)");
  CHECK(enumerate_elements(h).size() == 25);
  // closure under addition
  std::set<std::vector<std::int64_t>> all;
  for (const auto& e : h.elements()) all.insert(e.num);
  for (const auto& a : h.elements())
    for (const auto& b : h.elements()) {
      std::vector<std::int64_t> s(3);
      for (int i = 0; i < 3; ++i) s[i] = (a.num[i] + b.num[i]) % 5;
      CHECK(all.count(s) == 1);
    }

  auto a1 = parse_group("1/2(1,1)");
  REQUIRE(a1.order() == 2);
  CHECK(a1.elements()[1].num == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("gorenstein and age") {
  CHECK(is_gorenstein(parse_group("1/13(1,2,10)")));
  CHECK_FALSE(is_gorenstein(parse_group("1/5(1,2)")));
  CHECK(is_gorenstein(parse_group("1/5(1,4)")));

  auto g = parse_group("1/13(1,2,10)");
  CHECK(age(g.point(std::vector<std::int64_t>{1, 2, 10}, 13)) == 1);
  CHECK(age(g.point(std::vector<std::int64_t>{8, 3, 2}, 13)) == 1);
  CHECK(age(g.elements().front()) == 0);
  CHECK_THROWS_AS(age(LatticePoint({-1, 2, 12}, 13)), DomainError);

  auto g37 = parse_group("1/37(1,5,31)");
  CHECK(discrepancy(g37.point(std::vector<std::int64_t>{1, 5, 31}, 37), g37) == 0);
  CHECK(discrepancy(LatticePoint::unit(3, 0), g37) == 0);
  auto g3 = parse_group("1/3(1,1,1)");
  // (2,2,2)/3 has age 2 but is twice (1,1,1)/3, so it is rejected; (4,1,1)/3
  // is a primitive point of the same age.
  CHECK(age(g3.point(std::vector<std::int64_t>{2, 2, 2}, 3)) == 2);
  CHECK_THROWS_AS(discrepancy(g3.point(std::vector<std::int64_t>{2, 2, 2}, 3), g3), DomainError);
  auto p411 = g3.point(std::vector<std::int64_t>{4, 1, 1}, 3);
  REQUIRE(g3.is_primitive(p411));
  CHECK(discrepancy(p411, g3) == 1);
}

TEST_CASE("lattice membership and primitivity") {
  auto g = parse_group("1/13(1,2,10)");
  CHECK(g.contains(LatticePoint({8, 3, 2}, 13)));
  CHECK_FALSE(g.contains(LatticePoint({7, 3, 3}, 13)));
  CHECK_THROWS_AS(g.point(std::vector<std::int64_t>{7, 3, 3}, 13), DomainError);
  CHECK(g.is_primitive(LatticePoint({8, 3, 2}, 13)));
  CHECK_FALSE(g.is_primitive(LatticePoint({16, 6, 4}, 13)));
  CHECK(g.primitive_on_ray({16, 6, 4}) == LatticePoint({8, 3, 2}, 13));
  CHECK(g.primitive_on_ray({1, 0, 0}) == LatticePoint::unit(3, 0));
}

TEST_CASE("junior census against a direct loop") {
  auto g = parse_group("1/13(1,2,10)");
  std::size_t expect = 0;
  for (const auto& v : cyclic_residues(13, {1, 2, 10}))
    if (residue_sum(v) == 13) ++expect;
  CHECK(expect == 6);
  CHECK(junior_elements(g).size() == expect);

  auto g3 = parse_group("1/3(1,1,1)");
  auto j3 = junior_elements(g3);
  REQUIRE(j3.size() == 1);
  CHECK(j3[0].num == std::vector<std::int64_t>{1, 1, 1});

  auto h = parse_group("1/5(1,4,0);1/5(0,1,4)");
  std::size_t interior = 0, boundary = 0;
  for (std::int64_t a = 0; a < 5; ++a)
    for (std::int64_t b = 0; b < 5; ++b) {
      std::vector<std::int64_t> v{a, (4 * a + b) % 5, (4 * b) % 5};
      if (residue_sum(v) != 5) continue;
      bool all_nonzero = v[0] && v[1] && v[2];
      (all_nonzero ? interior : boundary)++;
    }
  CHECK(interior == 6);
  CHECK(boundary == 12);
  CHECK(junior_elements(h).size() == interior + boundary);

  CHECK_THROWS_AS(junior_elements(parse_group("1/5(1,2)")), DomainError);
}

TEST_CASE("age pairing and census identities") {
  for (const char* spec : {"1/13(1,2,10)", "1/37(1,5,31)", "1/5(1,4,0);1/5(0,1,4)", "1/7(1,2,4)", "1/6(1,2,3)"}) {
    auto g = parse_group(spec);
    REQUIRE(is_gorenstein(g));
    std::size_t count = 0;
    for (const auto& e : g.elements()) {
      Rational a = age(e);
      CHECK(denominator(a) == 1);
      CHECK(a >= 0);
      CHECK(a <= g.dim() - 1);
      GroupElement neg = e;
      for (auto& x : neg.num) x = (e.den - x) % e.den;
      bool all_nonzero = std::all_of(e.num.begin(), e.num.end(), [](auto x) { return x != 0; });
      Rational sum = a + age(neg);
      if (e.is_identity())
        CHECK(sum == 0);
      else if (all_nonzero)
        CHECK(sum == g.dim());
      ++count;
    }
    CHECK(count == g.order());
  }
}

TEST_CASE("stringy euler") {
  auto g = parse_group("1/13(1,2,10)");
  CHECK(stringy_euler(g).value == 13);
  CHECK_FALSE(stringy_euler(g).stratified);
  auto h = parse_group("1/5(1,4,0);1/5(0,1,4)");
  CHECK(stringy_euler(h).value == 25);
  CHECK(stringy_euler(h).stratified);
  CHECK(stringy_euler(parse_group("1/2(1,1)")).value == 2);
  for (std::int64_t r = 3; r <= 15; ++r)
    for (std::int64_t a = 1; a < r; ++a)
      for (std::int64_t b = a; b < r; ++b) {
        std::int64_t c = mod(-a - b, r);
        if (c == 0 || std::gcd(a, r) != 1 || std::gcd(b, r) != 1 || std::gcd(c, r) != 1) continue;
        auto gr = GroupSpec::from_generators(3, {{r, {a, b, c}}});
        CHECK(gr.fixes_only_origin());
        CHECK(stringy_euler(gr).value == r);
      }
}

TEST_CASE("characters") {
  auto g = parse_group("1/13(1,2,10)");
  REQUIRE(g.characters().size() == 13);
  CHECK(g.characters()[0].is_trivial());
  std::vector<int> xz2{1, 0, 2}, y4{0, 4, 0}, one{0, 0, 0};
  CHECK(g.char_index_of(xz2) == 8);
  CHECK(g.char_index_of(y4) == 8);
  CHECK(g.char_index_of(one) == 0);
  CHECK(g.character_of(xz2).to_string() == "8");
  CHECK(g.coordinate_char(2) == 10);

  auto h = parse_group("1/5(1,4,0);1/5(0,1,4)");
  CHECK(h.characters().size() == 25);
  // homomorphism on a grid of exponent pairs
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> m1{a, b, (a + 2 * b) % 7}, m2{b, (3 * a) % 5, a};
      std::vector<int> s{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]};
      CHECK(h.char_add(h.char_index_of(m1), h.char_index_of(m2)) == h.char_index_of(s));
      CHECK(h.char_add(h.char_index_of(m1), h.char_neg(h.char_index_of(m1))) == 0);
    }
}

TEST_CASE("basic simplices") {
  auto g3 = parse_group("1/3(1,1,1)");
  CHECK(is_basic_simplex({g3.point(std::vector<std::int64_t>{1, 1, 1}, 3), LatticePoint::unit(3, 0), LatticePoint::unit(3, 1)}, g3));
  // direct determinant: (1/3) * |G| = 1
  CHECK(abs(determinant({g3.point(std::vector<std::int64_t>{1, 1, 1}, 3), LatticePoint::unit(3, 0), LatticePoint::unit(3, 1)})) * 3 == 1);

  auto g7 = parse_group("1/7(1,1,1,4)");
  CHECK(is_basic_simplex({g7.point(std::vector<std::int64_t>{2, 2, 2, 1}, 7), LatticePoint::unit(4, 0),
                          LatticePoint::unit(4, 1), LatticePoint::unit(4, 2)},
                         g7));
  auto g5 = parse_group("1/5(1,1,1,2)");
  CHECK_FALSE(is_basic_simplex({g5.point(std::vector<std::int64_t>{1, 1, 1, 2}, 5), LatticePoint::unit(4, 0),
                                LatticePoint::unit(4, 1), LatticePoint::unit(4, 2)},
                               g5));
  CHECK_THROWS_AS(is_basic_simplex({LatticePoint::unit(3, 0), LatticePoint::unit(3, 0), LatticePoint::unit(3, 1)}, g3),
                  DomainError);
}

TEST_CASE("four-dimensional heuristic") {
  auto h7 = heuristic_4d(7);
  CHECK(h7.junior_count == 2);
  CHECK(h7.basic);
  CHECK(h7.heuristic_predicts);

  // oracle: direct loop over k(1,1,1,2)/5
  std::size_t j5 = 0;
  for (const auto& v : cyclic_residues(5, {1, 1, 1, 2}))
    if (residue_sum(v) == 5) ++j5;
  auto h5 = heuristic_4d(5);
  CHECK(h5.junior_count == j5);
  CHECK_FALSE(h5.basic);
  CHECK_FALSE(h5.heuristic_predicts);

  auto h4 = heuristic_4d(4);
  CHECK(h4.heuristic_predicts);
  CHECK(h4.basic);
  CHECK_THROWS_AS(heuristic_4d(3), DomainError);

  for (std::int64_t r = 4; r <= 40; ++r) {
    auto h = heuristic_4d(r);
    CHECK(h.heuristic_predicts == (r % 3 == 1));
    CHECK(h.basic == (r % 3 == 1));
  }
}

TEST_CASE("decimal formatting of big integers") {
  for (const char* s : {"0", "-7", "9223372036854775807", "-9223372036854775808", "9223372036854775808",
                        "1000000000000000000000000000000000000", "-123456789012345678901234567890"}) {
    CAPTURE(s);
    CHECK(to_decimal(Int(s)) == s);
  }
  CHECK(to_string(Rational(Int("-100000000000000000000"), Int(3))) == "-100000000000000000000/3");
}
