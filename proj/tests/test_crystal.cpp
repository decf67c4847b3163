#include "doctest.h"

#include "canlift/crystal.hpp"

using namespace canlift;

TEST_CASE("shapes and highest weight tableaux") {
  CHECK(shape_from_weight({1, 0}) == std::vector<int>{1});
  CHECK(shape_from_weight({1, 1}) == std::vector<int>{2, 1});
  Tableau hw = highest_weight_tableau(2, {1, 1});
  CHECK(hw.rows == std::vector<std::vector<int>>{{1, 1}, {2}});
  CHECK(is_semistandard(hw, 2));
  CHECK(tableau_weight(2, hw) == Weight{1, 1});
}

TEST_CASE("crystal sizes") {
  CHECK(generate_crystal(2, {1, 0}).vertices.size() == 3);
  CHECK(generate_crystal(2, {1, 1}).vertices.size() == 8);
  for (long long m = 0; m <= 6; ++m)
    CHECK(generate_crystal(1, {m}).vertices.size() == (std::size_t)m + 1);
  CHECK(weyl_dimension(2, {1, 1}) == 8);
  CHECK(weyl_dimension(3, {0, 1, 0}) == 6);
  CHECK_THROWS_AS(generate_crystal(2, {100, 100}, 50), Error);
}

TEST_CASE("kashiwara operators via the signature rule") {
  Tableau one{{{1}}}, two{{{2}}}, three{{{3}}};
  CHECK(eps(2, one, 1) == 0);
  CHECK(eps(2, one, 2) == 0);
  CHECK(eps(2, three, 2) == 1);
  CHECK(eps(2, three, 1) == 0);
  CHECK(apply_f(2, one, 1) == two);
  CHECK(apply_f(2, two, 2) == three);
  CHECK_FALSE(apply_f(2, one, 2).has_value());
  CHECK(apply_e(2, *apply_f(2, one, 1), 1) == one);

  // e_i o f_i = id wherever f_i is defined, on the adjoint crystal
  CrystalGraph g = generate_crystal(2, {1, 1});
  for (const Tableau& b : g.vertices)
    for (int i = 1; i <= 2; ++i)
      if (auto fb = apply_f(2, b, i)) CHECK(apply_e(2, *fb, i) == b);
}

TEST_CASE("lowest elements") {
  CrystalGraph g = generate_crystal(2, {1, 0});
  CHECK(lowest_element(g) == Tableau{{{3}}});
  for (long long m = 1; m <= 4; ++m) {
    Tableau low = lowest_element(generate_crystal(1, {m}));
    CHECK(low.rows == std::vector<std::vector<int>>{std::vector<int>((std::size_t)m, 2)});
  }
  // wt(lowest) = w0(lambda)
  CartanDatum c = build_cartan('A', 2);
  CrystalGraph adj = generate_crystal(2, {1, 1});
  CHECK(tableau_weight(2, lowest_element(adj)) ==
        weyl_action(c, longest_word(c), {1, 1}));
}

TEST_CASE("string extraction") {
  CrystalGraph g = generate_crystal(2, {1, 0});
  Tableau one{{{1}}}, two{{{2}}}, three{{{3}}};
  CHECK(string_extract(2, one, {1, 2, 1}) == std::vector<long long>{0, 0, 0});
  CHECK(string_extract(2, two, {1, 2, 1}) == std::vector<long long>{1, 0, 0});
  CHECK(string_extract(2, three, {1, 2, 1}) == std::vector<long long>{0, 1, 1});
  CHECK_THROWS_AS(string_extract(2, three, {1, 1, 1}), Error);
}

TEST_CASE("evacuation") {
  Tableau one{{{1}}}, two{{{2}}}, three{{{3}}};
  CHECK(evacuation(2, one) == three);
  CHECK(evacuation(2, two) == two);
  CrystalGraph adj = generate_crystal(2, {1, 1});
  for (const Tableau& b : adj.vertices) CHECK(evacuation(2, evacuation(2, b)) == b);

  // agrees with the crystal-recursion construction of the involution
  CartanDatum c = build_cartan('A', 2);
  for (const Weight& lam : {Weight{1, 0}, Weight{1, 1}, Weight{2, 1}}) {
    CrystalGraph g = generate_crystal(2, lam);
    auto eta = eta_by_recursion(g, c);
    for (const Tableau& b : g.vertices) CHECK(eta.at(b) == evacuation(2, b));
  }
  CartanDatum a3 = build_cartan('A', 3);
  CrystalGraph g3 = generate_crystal(3, {0, 1, 0});
  auto eta3 = eta_by_recursion(g3, a3);
  for (const Tableau& b : g3.vertices) CHECK(eta3.at(b) == evacuation(3, b));
}

TEST_CASE("dot export") {
  std::string dot = crystal_to_dot(generate_crystal(2, {1, 0}));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"1\"") != std::string::npos);
  CHECK(dot.find("label=\"2\"") != std::string::npos);
}
