#include "doctest.h"

#include <random>

#include "canlift/lifting.hpp"
#include "canlift/tropical.hpp"

using namespace canlift;

TEST_CASE("polynomial arithmetic") {
  Polynomial x = Polynomial::variable(2, 1), y = Polynomial::variable(2, 2);
  Polynomial p = x * x + y;
  CHECK(p.eval({Rat(3), Rat(4)}) == Rat(13));
  CHECK((p - p).is_zero());
  CHECK(p.pow(0) == Polynomial::constant(2, 1));
  CHECK(p.pow(2).eval({Rat(3), Rat(4)}) == Rat(169));
  Polynomial lx(2);
  lx.add_term({-1, 0}, 1);  // 1/x as a Laurent term
  CHECK(lx.eval({Rat(4), Rat(1)}) == Rat(1, 4));
}

TEST_CASE("rational function normalization") {
  // (2xy + 2x) / (4x) -> (y + 1) / 2 up to monomial and integer content.
  Polynomial x = Polynomial::variable(2, 1), y = Polynomial::variable(2, 2);
  Polynomial two = Polynomial::constant(2, 2), four = Polynomial::constant(2, 4);
  RationalFn f(two * x * y + two * x, four * x);
  CHECK(f.eval({Rat(7), Rat(3)}) == Rat(2));
  CHECK(f.num == y + Polynomial::constant(2, 1));
  CHECK(f.den == two);
  CHECK((f / f).eval({Rat(5), Rat(11)}) == Rat(1));
  CHECK(f.pow(-1).eval({Rat(7), Rat(3)}) == Rat(1, 2));
}

TEST_CASE("subtraction-free parsing") {
  CHECK(sf_to_string(parse_sf("(t1+t2)/t3")) == "(t1+t2)/t3");
  CHECK_THROWS_AS(parse_sf("t1 - t2"), Error);
  CHECK_NOTHROW(parse_sf("t2/(t1*t3^2)"));
  CHECK_THROWS_AS(parse_sf("t1 + "), Error);
  CHECK_THROWS_AS(parse_sf("t0"), Error);
}

TEST_CASE("subtraction-free evaluation") {
  CHECK(sf_eval(parse_sf("(t1+t2)/t3"), {Rat(1), Rat(2), Rat(4)}) == Rat(3, 4));
  CHECK(sf_eval(parse_sf("t2/(t1*t3^2)"), {Rat(1), Rat(2), Rat(3)}) == Rat(2, 9));
  CHECK(sf_eval(parse_sf("5"), {Rat(9), Rat(9), Rat(9)}) == Rat(5));
  CHECK_THROWS_AS(sf_eval(parse_sf("t1"), {Rat(0)}), Error);
}

TEST_CASE("tropicalization of expressions") {
  SUBCASE("(t1+t2)/t3 -> min(t1,t2) - t3") {
    PLComponent f = tropicalize(parse_sf("(t1+t2)/t3"), 3);
    CHECK(f.eval({1, 0, 5}) == -5);
    CHECK(f.eval({3, 7, 2}) == 1);
  }
  SUBCASE("monomials are affine") {
    PLComponent f = tropicalize(parse_sf("t2/(t1*t3^2)"), 3);
    auto aff = is_affine(f);
    REQUIRE(aff.has_value());
    CHECK(aff->a == std::vector<long long>{-1, 1, -2});
    CHECK(aff->c == 0);
  }
  SUBCASE("constants tropicalize to 0") {
    PLComponent f = tropicalize(parse_sf("2*t1 + t2"), 2);
    CHECK(f.eval({3, 1}) == 1);
    CHECK(f.eval({0, 4}) == 0);
  }
}

TEST_CASE("pl identity and composition") {
  PLMap id = pl_identity(3);
  CHECK(pl_eval(id, {4, -2, 7}) == std::vector<long long>{4, -2, 7});

  PLMap swap;
  swap.arity = 2;
  swap.components.push_back(tropicalize(parse_sf("t2"), 2));
  swap.components.push_back(tropicalize(parse_sf("t1"), 2));
  PLMap twice = pl_compose(swap, swap);
  for (long long x : {-5LL, 0LL, 9LL})
    for (long long y : {-1LL, 3LL})
      CHECK(pl_eval(twice, {x, y}) == std::vector<long long>{x, y});

  PLMap f = pl_compose(swap, pl_identity(2));
  CHECK(pl_eval(f, {1, 2}) == std::vector<long long>{2, 1});
}

TEST_CASE("tropicalization is a semifield homomorphism on the A2 pieces") {
  // Trop(f o g) = Trop(f) o Trop(g) on seeded integer points.
  const RationalMap& piece = solve_rank2_move(Rank2Kind::A2, TransitionSide::Lusztig);
  std::vector<SFPtr> args = piece.components;
  std::vector<SFPtr> composed;
  for (const SFPtr& comp : piece.components) composed.push_back(sf_compose(comp, args));

  PLMap trop_f = tropicalize_map(piece.components, 3);
  PLMap direct = tropicalize_map(composed, 3);
  PLMap chained = pl_compose(trop_f, trop_f);

  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> d(-30, 30);
  for (int rep = 0; rep < 1200; ++rep) {
    std::vector<long long> t{d(rng), d(rng), d(rng)};
    CHECK(pl_eval(direct, t) == pl_eval(chained, t));
    CHECK(pl_eval(chained, t) == t);  // the move is an involution
  }
}

TEST_CASE("normalization to a polynomial quotient") {
  SUBCASE("simple quotient") {
    auto [p, q] = sf_normalize(parse_sf("(t1+t2)/t3"), 3);
    Polynomial t1 = Polynomial::variable(3, 1), t2 = Polynomial::variable(3, 2),
               t3 = Polynomial::variable(3, 3);
    CHECK(p == t1 + t2);
    CHECK(q == t3);
  }
  SUBCASE("sum of quotients") {
    auto [p, q] = sf_normalize(parse_sf("t1/t2 + t3"), 3);
    Polynomial t1 = Polynomial::variable(3, 1), t2 = Polynomial::variable(3, 2),
               t3 = Polynomial::variable(3, 3);
    CHECK(p == t1 + t2 * t3);
    CHECK(q == t2);
  }
  SUBCASE("nested quotient") {
    auto [p, q] = sf_normalize(parse_sf("(t1/t2)/t3"), 3);
    Polynomial t1 = Polynomial::variable(3, 1), t2 = Polynomial::variable(3, 2),
               t3 = Polynomial::variable(3, 3);
    CHECK(p == t1);
    CHECK(q == t2 * t3);
  }
  SUBCASE("round trip through sf_from_rational") {
    SFPtr e = parse_sf("(t1+t2)^2/(t1*t3) + 4/t2");
    auto [p, q] = sf_normalize(e, 3);
    SFPtr back = sf_from_rational(RationalFn(p, q));
    RatVec pt{Rat(2), Rat(3, 2), Rat(5)};
    CHECK(sf_eval(back, pt) == sf_eval(e, pt));
  }
}

TEST_CASE("affine detection") {
  CHECK_FALSE(is_affine(tropicalize(parse_sf("t1+t2"), 2)).has_value());
  auto aff = is_affine(tropicalize(parse_sf("t1*t2^3"), 2));
  REQUIRE(aff.has_value());
  CHECK(aff->a == std::vector<long long>{1, 3});
}
