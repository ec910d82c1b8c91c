#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace koszul;
using koszul::test::P;

namespace {

int to_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

std::vector<int> exps(const Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

}  // namespace

TEST_CASE("monomial_cmp examples", "[monomial]") {
  Monomial x2y{2, 1, 0}, xyz{1, 1, 1}, x{1, 0, 0}, y2{0, 2, 0};
  CHECK(monomial_cmp(x2y, xyz, MonomialOrder::grevlex) > 0);
  CHECK(test::reference_grevlex(exps(x2y), exps(xyz)) == 1);
  CHECK(monomial_cmp(x, y2, MonomialOrder::lex) > 0);
  CHECK(test::reference_lex(exps(x), exps(y2)) == 1);
  for (auto ord : {MonomialOrder::grevlex, MonomialOrder::lex}) CHECK(monomial_cmp(xyz, xyz, ord) == 0);
  CHECK_THROWS_AS(monomial_cmp(Monomial{1, 0}, Monomial{1, 0, 0}, MonomialOrder::grevlex),
                  StructuralError);
}

TEST_CASE("monomial_cmp matches the textbook comparators exhaustively", "[monomial]") {
  auto all = test::all_monomials(3, 4);
  for (const auto& a : all)
    for (const auto& b : all) {
      REQUIRE(to_int(monomial_cmp(a, b, MonomialOrder::grevlex)) ==
              test::reference_grevlex(exps(a), exps(b)));
      REQUIRE(to_int(monomial_cmp(a, b, MonomialOrder::lex)) == test::reference_lex(exps(a), exps(b)));
    }
}

TEST_CASE("monomial orders are total, multiplicative, with 1 minimal", "[monomial][property]") {
  std::mt19937 rng(11);
  const Monomial one(3);
  for (auto ord : {MonomialOrder::grevlex, MonomialOrder::lex}) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto a = test::random_monomial(3, 5, rng);
      auto b = test::random_monomial(3, 5, rng);
      auto c = test::random_monomial(3, 5, rng);
      auto ab = monomial_cmp(a, b, ord);
      CHECK(to_int(ab) == -to_int(monomial_cmp(b, a, ord)));
      CHECK((ab == 0) == (a == b));
      if (ab < 0 && monomial_cmp(b, c, ord) < 0) CHECK(monomial_cmp(a, c, ord) < 0);
      if (ab < 0) CHECK(monomial_cmp(a * c, b * c, ord) < 0);
      CHECK(monomial_cmp(one, a, ord) <= 0);
    }
  }
}

TEST_CASE("polynomial arithmetic examples", "[polynomial]") {
  auto r2 = test::gf(2);
  CHECK((P(r2, "x + y") * P(r2, "x + y")) == P(r2, "x^2 + y^2"));
  auto q = test::qq();
  auto f = P(q, "3*x^2*y - 1/2*z + 7");
  CHECK(f + Polynomial<Rationals>(q) == f);
  CHECK((P(q, "x - y") * P(q, "x + y")) == P(q, "x^2 - y^2"));
  CHECK((f - f).is_zero());
  CHECK(f.scaled(mpq_class(2)) == P(q, "6*x^2*y - z + 14"));
  CHECK(P(q, "x + 1").pow(3) == P(q, "x^3 + 3*x^2 + 3*x + 1"));
  CHECK_THROWS_AS(f + P(test::qq({"x", "y"}), "x"), StructuralError);
}

TEST_CASE("polynomial terms are strictly descending with no zero coefficients",
          "[polynomial][property]") {
  std::mt19937 rng(3);
  auto q = test::qq();
  auto r3 = test::gf(3, test::kXYZ, MonomialOrder::lex);
  auto check_canonical = [](const auto& p) {
    const auto& t = p.terms();
    const auto ord = p.ring()->order();
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK_FALSE(p.field().is_zero(t[i].coefficient));
      if (i) CHECK(monomial_cmp(t[i - 1].monomial, t[i].monomial, ord) > 0);
    }
  };
  for (int trial = 0; trial < 100; ++trial) {
    auto a = test::random_poly(q, rng, 3, 5), b = test::random_poly(q, rng, 3, 5);
    check_canonical(a * b);
    check_canonical(a - b);
    auto c = test::random_poly(r3, rng, 3, 5), d = test::random_poly(r3, rng, 3, 5);
    check_canonical(c * d + c);
  }
}

TEST_CASE("ring laws on random polynomials", "[polynomial][property]") {
  std::mt19937 rng(5);
  auto q = test::qq();
  auto r2 = test::gf(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = test::random_poly(q, rng, 3, 4), g = test::random_poly(q, rng, 3, 4),
         h = test::random_poly(q, rng, 3, 4);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    if (!f.is_zero() && !g.is_zero()) {
      auto fg = f * g;
      CHECK(fg.leading_monomial() == f.leading_monomial() * g.leading_monomial());
      CHECK(fg.leading_coefficient() == f.leading_coefficient() * g.leading_coefficient());
    }
    auto a = test::random_poly(r2, rng, 3, 4), b = test::random_poly(r2, rng, 3, 4);
    CHECK((a + b).pow(2) == a.pow(2) + b.pow(2));
  }
}

TEST_CASE("parse_poly examples", "[parse]") {
  auto r2 = test::gf(2);
  auto xyz = P(r2, "x*y*z");
  REQUIRE(xyz.term_count() == 1);
  CHECK(xyz.leading_monomial() == Monomial{1, 1, 1});
  CHECK(r2->field().is_one(xyz.leading_coefficient()));
  CHECK(P(r2, "x^2 + y^2 + z^2").term_count() == 3);
  CHECK(P(r2, "2*x").is_zero());
  auto q = test::qq();
  CHECK(P(q, " - 3/6 * x ^ 2*y+ z ") == P(q, "z - 1/2*x^2*y"));
  CHECK(P(q, "x*x") == P(q, "x^2"));
  CHECK(P(q, "0").is_zero());
}

TEST_CASE("parse_poly reports errors with positions", "[parse]") {
  auto q = test::qq();
  auto r2 = test::gf(2);
  auto position_of = [](auto&& fn) -> std::size_t {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(position_of([&] { P(q, "x + w"); }) == 4);
  CHECK(position_of([&] { P(q, "x^"); }) == 2);
  CHECK(position_of([&] { P(q, "x^y"); }) == 2);
  CHECK(position_of([&] { P(q, "3/0*x"); }) == 2);
  CHECK(position_of([&] { P(r2, "1/2*x"); }) == 1);
  CHECK(position_of([&] { P(q, "x + "); }) == 4);
  CHECK(position_of([&] { P(q, "x y"); }) == 2);
  CHECK(position_of([&] { P(q, ""); }) == 0);
  CHECK_THROWS_AS(parse_poly_list("x, y, q", q), ParseError);
  CHECK(parse_poly_list("  ", q).empty());
  CHECK(parse_poly_list("x,y^2, z", q).size() == 3);
}

TEST_CASE("formatting round-trips through the parser", "[parse][property]") {
  std::mt19937 rng(9);
  auto q = test::qq({"a", "b1", "c_2"});
  auto r5 = test::gf(5, {"x", "y"}, MonomialOrder::lex);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = test::random_poly(q, rng, 4, 5).scaled(mpq_class(1, 1 + trial % 7));
    CHECK(parse_poly(f.to_string(), q) == f);
    auto g = test::random_poly(r5, rng, 4, 5);
    CHECK(parse_poly(g.to_string(), r5) == g);
  }
  CHECK(P(q, "-a").to_string() == "-a");
  CHECK(P(test::gf(2), "x*y*z + 1").to_string() == "x*y*z + 1");
}
