#include "doctest.h"

#include "canlift/parametrize.hpp"
#include "canlift/verify.hpp"

using namespace canlift;

TEST_CASE("lusztig transitions") {
  CartanDatum c = build_cartan('A', 2);
  CHECK(transition_lusztig(c, {1, 2, 1}, {1, 2, 1}, {4, 7, 9}) == IntVec{4, 7, 9});
  CHECK(transition_lusztig(c, {1, 2, 1}, {2, 1, 2}, {1, 0, 0}) == IntVec{0, 0, 1});
  CHECK(transition_lusztig(c, {1, 2, 1}, {2, 1, 2}, {1, 1, 1}) == IntVec{1, 1, 1});
}

TEST_CASE("string transitions") {
  CartanDatum c = build_cartan('A', 2);
  CHECK(transition_string(c, {2, 1, 2}, {2, 1, 2}, {3, 0, 2}) == IntVec{3, 0, 2});
  CHECK(transition_string(c, {1, 2, 1}, {2, 1, 2}, {0, 1, 1}) == IntVec{1, 1, 0});
  CHECK(transition_string(c, {1, 2, 1}, {2, 1, 2}, {1, 0, 0}) == IntVec{0, 1, 0});
}

TEST_CASE("zeta tropicalized") {
  SUBCASE("A1") {
    AffineMap z = zeta_trop(build_cartan('A', 1), {1});
    CHECK(z.apply({5}) == IntVec{-5});
  }
  SUBCASE("A2") {
    AffineMap z = zeta_trop(build_cartan('A', 2), {1, 2, 1});
    CHECK(z.m == std::vector<IntVec>{{-1, 1, -2}, {0, -1, 1}, {0, 0, -1}});
    CHECK(z.l == IntVec{0, 0, 0});
  }
  SUBCASE("B2") {
    AffineMap z = zeta_trop(build_cartan('B', 2), {1, 2, 1, 2});
    // a(1,2) = -1, a(2,1) = -2 under the convention with alpha_1 long
    CHECK(z.m[0] == IntVec{-1, 1, -2, 1});
    CHECK(z.m[1] == IntVec{0, -1, 2, -2});
  }
  SUBCASE("rejects non-reduced words") {
    CHECK_THROWS_AS(zeta_trop(build_cartan('A', 2), {1, 2, 2}), Error);
  }
}

TEST_CASE("anchor constants") {
  CHECK(anchor_constants(build_cartan('A', 1), {3}, {1}) == IntVec{3});
  CartanDatum c = build_cartan('A', 2);
  CHECK(anchor_constants(c, {1, 0}, {1, 2, 1}) == IntVec{1, 0, 1});
  CHECK(anchor_constants(c, {0, 0}, {1, 2, 1}) == IntVec{0, 0, 0});
  CHECK_THROWS_AS(anchor_constants(build_cartan('B', 2), {1, 0}, {1, 2, 1, 2}), Error);
  CHECK_THROWS_AS(anchor_constants(c, {-1, 0}, {1, 2, 1}), Error);

  // transition-consistency across words
  IntVec l121 = anchor_constants(c, {1, 1}, {1, 2, 1});
  IntVec l212 = anchor_constants(c, {1, 1}, {2, 1, 2});
  CHECK(transition_lusztig(c, {1, 2, 1}, {2, 1, 2}, l121) == l212);
}

TEST_CASE("phi map") {
  CartanDatum c = build_cartan('A', 2);
  Word w{1, 2, 1};
  CHECK(phi_map(c, w, w, {1, 0}, {0, 0, 0}) == IntVec{1, 0, 1});
  CHECK(phi_map(c, w, w, {1, 0}, {1, 0, 0}) == IntVec{0, 0, 1});
  CHECK(phi_map(c, w, w, {1, 0}, {0, 1, 1}) == IntVec{0, 0, 0});
}

TEST_CASE("affine evacuation formula") {
  CartanDatum c = build_cartan('A', 2);
  AffineMap m = schutz_affine(c, {1, 2, 1}, {1, 0});
  CHECK(m.l == IntVec{1, 0, 1});
  CHECK(m.apply({0, 0, 0}) == IntVec{1, 0, 1});
  CHECK(m.apply({1, 0, 0}) == IntVec{0, 0, 1});
  CHECK(m.apply({0, 1, 1}) == IntVec{0, 0, 0});

  // A1, lambda = 3 varpi_1: t' = 3 - t
  AffineMap a1 = schutz_affine(build_cartan('A', 1), {1}, {3});
  for (long long t = 0; t <= 3; ++t) CHECK(a1.apply({t}) == IntVec{3 - t});
}

TEST_CASE("star relabeling") {
  CartanDatum a1 = build_cartan('A', 1);
  LusztigParam p{{1}, {4}};
  CHECK(star_relabel(a1, p).word == Word{1});

  CartanDatum a2 = build_cartan('A', 2);
  LusztigParam q{{1, 2, 1}, {4, 0, 2}};
  LusztigParam qs = star_relabel(a2, q);
  CHECK(qs.word == Word{2, 1, 2});
  CHECK(qs.t == q.t);
  CHECK(star_relabel(a2, qs).word == q.word);
}

TEST_CASE("phi characterizing conditions") {
  CartanDatum c = build_cartan('A', 2);
  std::vector<Word> words{{1, 2, 1}, {2, 1, 2}};
  CHECK(verify_phi_conditions(c, {1, 0}, words, 3, 1).pass);
  // lambda = 0: the anchor is 0 and phi fixes the origin
  CHECK(anchor_constants(c, {0, 0}, {1, 2, 1}) == IntVec{0, 0, 0});
  CHECK(phi_map(c, {1, 2, 1}, {2, 1, 2}, {0, 0}, {0, 0, 0}) == IntVec{0, 0, 0});
}

TEST_CASE("corollary harness on the fixture") {
  CartanDatum c = build_cartan('A', 2);
  auto rep = verify_corollary(c, {1, 0}, {1, 2, 1});
  CHECK(rep.pass);
  CHECK(rep.table.size() == 3);
}

TEST_CASE("symbolic transition maps") {
  CartanDatum c = build_cartan('A', 2);
  PLMap f = transition_pl(c, {1, 2, 1}, {2, 1, 2}, TransitionSide::Lusztig);
  CHECK(pl_eval(f, {1, 0, 0}) == IntVec{0, 0, 1});
  PLMap g = transition_pl(c, {2, 1, 2}, {1, 2, 1}, TransitionSide::Lusztig);
  PLMap round = pl_compose(g, f);
  for (long long x = -3; x <= 3; ++x)
    for (long long y = -3; y <= 3; ++y)
      for (long long z = -3; z <= 3; ++z)
        CHECK(pl_eval(round, {x, y, z}) == IntVec{x, y, z});
}
