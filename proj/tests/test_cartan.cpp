#include "doctest.h"

#include <algorithm>
#include <set>

#include "canlift/cartan.hpp"

using namespace canlift;

TEST_CASE("cartan matrices") {
  CHECK(build_cartan('A', 2).matrix == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(build_cartan('A', 1).matrix == std::vector<std::vector<int>>{{2}});
  // alpha_1 long: a(2,1) = <alpha_1, alpha_2^vee> = -2.
  CHECK(build_cartan('B', 2).matrix == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
  CHECK_THROWS_AS(build_cartan('H', 2), Error);
  CHECK_THROWS_AS(build_cartan('E', 9), Error);
  CHECK_THROWS_AS(build_cartan('G', 3), Error);
}

TEST_CASE("langlands dual") {
  CartanDatum a2 = build_cartan('A', 2);
  CHECK(langlands_dual(a2).matrix == a2.matrix);
  CartanDatum b2 = build_cartan('B', 2);
  CartanDatum dual = langlands_dual(b2);
  CHECK(dual.series == 'C');
  CHECK(dual.matrix == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  CartanDatum back = langlands_dual(dual);
  CHECK(back.series == 'B');
  CHECK(back.matrix == b2.matrix);
}

TEST_CASE("weyl action on weights") {
  CartanDatum c = build_cartan('A', 2);
  CHECK(weyl_action(c, {}, {1, 0}) == Weight{1, 0});
  CHECK(weyl_action(c, {1}, {1, 0}) == Weight{-1, 1});
  for (const Word& w : all_reduced_words(c, longest_word(c)))
    CHECK(weyl_action(c, w, {1, 0}) == Weight{0, -1});
}

TEST_CASE("reduced words and length") {
  CartanDatum c = build_cartan('A', 2);
  CHECK_FALSE(is_reduced(c, {1, 1}));
  CHECK(is_reduced(c, {1, 2, 1}));
  CHECK(is_reduced(c, {}));
  CHECK(weyl_length(c, {1, 2, 1, 2}) == 2);
}

TEST_CASE("longest word") {
  CHECK(longest_word(build_cartan('A', 1)) == Word{1});
  CartanDatum a2 = build_cartan('A', 2);
  Word w2 = longest_word(a2);
  CHECK(w2.size() == 3);
  CHECK(is_reduced(a2, w2));
  CartanDatum a3 = build_cartan('A', 3);
  CHECK(longest_word(a3).size() == 6);
  CHECK(longest_word(build_cartan('B', 2)).size() == 4);
  CHECK(longest_word(build_cartan('G', 2)).size() == 6);
}

TEST_CASE("all reduced words") {
  CartanDatum a2 = build_cartan('A', 2);
  auto words2 = all_reduced_words(a2, longest_word(a2));
  CHECK(words2 == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  CartanDatum a3 = build_cartan('A', 3);
  auto words3 = all_reduced_words(a3, longest_word(a3));
  CHECK(words3.size() == 16);
  CHECK(std::is_sorted(words3.begin(), words3.end()));
  for (const Word& w : words3) CHECK(is_reduced(a3, w));
}

TEST_CASE("braid moves and paths") {
  CartanDatum a2 = build_cartan('A', 2);
  auto path = braid_path(a2, {1, 2, 1}, {2, 1, 2});
  REQUIRE(path.size() == 1);
  CHECK(path[0].pos == 0);
  CHECK(path[0].len == 3);
  CHECK(braid_path(a2, {1, 2, 1}, {1, 2, 1}).empty());

  CartanDatum a3 = build_cartan('A', 3);
  Word from{1, 2, 1, 3, 2, 1}, to{3, 2, 3, 1, 2, 3};
  Word w = from;
  for (const BraidMove& m : braid_path(a3, from, to)) {
    w = apply_braid_move(a3, w, m);
    CHECK(is_reduced(a3, w));
  }
  CHECK(w == to);

  CHECK_THROWS_AS(braid_path(a3, {1, 2, 1, 3, 2, 1}, {1, 2, 1}), Error);
}

TEST_CASE("star involution") {
  CHECK(star(build_cartan('A', 1), 1) == 1);
  CHECK(star(build_cartan('A', 2), 1) == 2);
  CHECK(star(build_cartan('A', 3), 2) == 2);
  CHECK(star(build_cartan('A', 3), 1) == 3);
  CartanDatum b2 = build_cartan('B', 2);
  CHECK(star(b2, 1) == 1);
  CHECK(star(b2, 2) == 2);
}

TEST_CASE("lambda omega") {
  CHECK(lambda_omega(build_cartan('A', 2), {1, 0}) == Weight{0, 1});
  CHECK(lambda_omega(build_cartan('A', 1), {5}) == Weight{5});
  CHECK(lambda_omega(build_cartan('A', 3), {0, 0, 0}) == Weight{0, 0, 0});
}

TEST_CASE("roots along a reduced word") {
  CartanDatum a2 = build_cartan('A', 2);
  auto roots = roots_along_word(a2, {1, 2, 1});
  CHECK(roots == std::vector<RootVec>{{1, 0}, {1, 1}, {0, 1}});
  CHECK(roots_along_word(a2, {1}) == std::vector<RootVec>{{1, 0}});
  CartanDatum a3 = build_cartan('A', 3);
  CHECK(roots_along_word(a3, {1, 3}) ==
        std::vector<RootVec>{{1, 0, 0}, {0, 0, 1}});
}

TEST_CASE("positive root counts") {
  CHECK(positive_roots(build_cartan('A', 3)).size() == 6);
  CHECK(positive_roots(build_cartan('B', 2)).size() == 4);
  CHECK(positive_roots(build_cartan('G', 2)).size() == 6);
  CHECK(positive_roots(build_cartan('D', 4)).size() == 12);
  CHECK(positive_roots(build_cartan('F', 4)).size() == 24);
}
