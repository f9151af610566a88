#include "autgrp/abelian.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"

using autgrp::FiniteAbelianGroup;

TEST_CASE("group construction and spec parsing") {
  FiniteAbelianGroup z3 = FiniteAbelianGroup::parse("Z3");
  CHECK(z3.order() == 3);
  CHECK(z3.rank() == 1);

  FiniteAbelianGroup z22 = FiniteAbelianGroup::parse("Z2xZ2");
  CHECK(z22.order() == 4);
  CHECK(z22.rank() == 2);

  // Moduli are canonicalised; Z4xZ2 equals Z2xZ4 but not Z2xZ2.
  CHECK(FiniteAbelianGroup::parse("Z4xZ2") == FiniteAbelianGroup::parse("Z2xZ4"));
  CHECK_FALSE(FiniteAbelianGroup::parse("Z2xZ2") == FiniteAbelianGroup::parse("Z4"));
  CHECK(FiniteAbelianGroup::parse("Z4xZ2").spec_string() == "Z2xZ4");

  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z1"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z0"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z-3"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z3x"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("3"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup({}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup({1}), std::invalid_argument);
  // A factor 1 is allowed as long as the order stays >= 2.
  CHECK(FiniteAbelianGroup::parse("Z1xZ3").order() == 3);
}

TEST_CASE("index arithmetic") {
  FiniteAbelianGroup z3 = FiniteAbelianGroup::parse("Z3");
  CHECK(z3.add(1, 2) == 0);
  CHECK(z3.negate(1) == 2);
  CHECK(z3.negate(0) == 0);

  FiniteAbelianGroup z22 = FiniteAbelianGroup::parse("Z2xZ2");
  int a = z22.index_of({1, 0});
  int b = z22.index_of({1, 1});
  CHECK(z22.element(z22.add(a, b)) == FiniteAbelianGroup::Element{0, 1});

  FiniteAbelianGroup z24 = FiniteAbelianGroup::parse("Z2xZ4");
  CHECK(z24.negate(z24.index_of({1, 3})) == z24.index_of({1, 1}));
  CHECK(z24.add({1, 3}, {1, 2}) == FiniteAbelianGroup::Element{0, 1});

  CHECK_THROWS_AS(z3.index_of({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(z3.index_of({5}), std::invalid_argument);
}

TEST_CASE("exponent") {
  CHECK(FiniteAbelianGroup::parse("Z3").exponent() == 3);
  CHECK(FiniteAbelianGroup::parse("Z2xZ4").exponent() == 4);
  CHECK(FiniteAbelianGroup::parse("Z2xZ2").exponent() == 2);
}

TEST_CASE("square roots iff odd order, up to order 16") {
  CHECK(FiniteAbelianGroup::parse("Z3").all_elements_have_square_roots());
  CHECK_FALSE(FiniteAbelianGroup::parse("Z2").all_elements_have_square_roots());
  CHECK_FALSE(FiniteAbelianGroup::parse("Z2xZ2").all_elements_have_square_roots());

  // All multisets of cyclic factors >= 2 with order <= 16.
  std::vector<std::vector<int>> groups;
  std::vector<int> stack;
  auto rec = [&](auto&& self, int min_factor, long long product) -> void {
    if (product >= 2) groups.push_back(stack);
    for (int f = min_factor; product * f <= 16; ++f) {
      stack.push_back(f);
      self(self, f, product * f);
      stack.pop_back();
    }
  };
  rec(rec, 2, 1);
  CHECK(groups.size() > 20);
  for (const auto& moduli : groups) {
    FiniteAbelianGroup g{std::vector<int>(moduli)};
    CHECK(g.all_elements_have_square_roots() == (g.order() % 2 == 1));
  }
}

TEST_CASE("group laws hold exhaustively for order <= 12") {
  for (const char* spec : {"Z2", "Z5", "Z12", "Z2xZ4", "Z2xZ2xZ3"}) {
    FiniteAbelianGroup g = FiniteAbelianGroup::parse(spec);
    const int n = static_cast<int>(g.order());
    for (int a = 0; a < n; ++a) {
      CHECK(g.add(a, 0) == a);
      CHECK(g.add(a, g.negate(a)) == 0);
      for (int b = 0; b < n; ++b) {
        CHECK(g.add(a, b) == g.add(b, a));
        for (int c = 0; c < n; ++c) {
          CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
        }
      }
    }
    // d * a = 0 for every a, and the exponent divides the order.
    const long long d = g.exponent();
    CHECK(g.order() % d == 0);
    for (int a = 0; a < n; ++a) {
      int acc = 0;
      for (long long k = 0; k < d; ++k) acc = g.add(acc, a);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("enumeration is lexicographic with zero first") {
  FiniteAbelianGroup z22 = FiniteAbelianGroup::parse("Z2xZ2");
  std::vector<FiniteAbelianGroup::Element> expected = {
      {0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (int i = 0; i < 4; ++i) CHECK(z22.element(i) == expected[static_cast<size_t>(i)]);

  FiniteAbelianGroup z2 = FiniteAbelianGroup::parse("Z2");
  CHECK(z2.label(0) == "0");
  CHECK(z2.label(1) == "1");
  CHECK(FiniteAbelianGroup::parse("Z3xZ3").order() == 9);

  CHECK(z22.label(1) == "0.1");
  CHECK(z22.index_of_label("1.1") == 3);
  CHECK_FALSE(z22.index_of_label("2.0").has_value());
  CHECK_FALSE(z22.index_of_label("1").has_value());
  CHECK_FALSE(z22.index_of_label("x").has_value());
}
