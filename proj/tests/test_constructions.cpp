#include "autgrp/constructions.hpp"

#include <memory>

#include "autgrp/verify.hpp"
#include "doctest.h"

using namespace autgrp;

namespace {

std::shared_ptr<const FiniteAbelianGroup> grp(const char* spec) {
  return std::make_shared<FiniteAbelianGroup>(FiniteAbelianGroup::parse(spec));
}

AutomatonPtr ax(const char* spec) { return build_automaton_abelian(grp(spec)); }

GroupWord gen(const AutomatonPtr& a, int i, bool inv = false) {
  return GroupWord(a, {SignedGen{i, inv}});
}

// Multiplication table of the symmetric group on three points; element k is
// the permutation perms[k], composed as "apply right factor first".
CayleyGroup s3() {
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  auto index_of = [&](const int* p) {
    for (int k = 0; k < 6; ++k) {
      if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2]) {
        return k;
      }
    }
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      int composed[3];
      for (int x = 0; x < 3; ++x) composed[x] = perms[i][perms[j][x]];
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = index_of(composed);
    }
  }
  return CayleyGroup(std::move(table),
                     {"e", "r", "rr", "s", "sr", "srr"});
}

}  // namespace

TEST_CASE("abelian automaton tables") {
  AutomatonPtr a = ax("Z3");
  auto g = a->letter_group;
  REQUIRE(g != nullptr);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(a->transition[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            g->sub(i, j));
      CHECK(a->output[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            g->add(i, j));
    }
  }
  CHECK(a->state_labels == std::vector<std::string>{"a0", "a1", "a2"});
  CHECK(a->letter_labels == std::vector<std::string>{"0", "1", "2"});

  // Zero row is the identity behaviour on the first letter.
  for (const char* spec : {"Z2", "Z5", "Z2xZ4"}) {
    AutomatonPtr b = ax(spec);
    CHECK(b->transition[0][0] == 0);
    CHECK(b->output[0][0] == 0);
  }

  AutomatonPtr z22 = ax("Z2xZ2");
  auto g22 = z22->letter_group;
  int s10 = g22->index_of({1, 0});
  int l01 = g22->index_of({0, 1});
  int e11 = g22->index_of({1, 1});
  CHECK(z22->transition[static_cast<size_t>(s10)][static_cast<size_t>(l01)] == e11);
  CHECK(z22->output[static_cast<size_t>(s10)][static_cast<size_t>(l01)] == e11);
}

TEST_CASE("abelian automaton is permutational and reversible up to order 16") {
  for (const char* spec :
       {"Z2", "Z3", "Z4", "Z7", "Z9", "Z16", "Z2xZ2", "Z2xZ8", "Z4xZ4",
        "Z2xZ2xZ2xZ2", "Z3xZ5"}) {
    AutomatonPtr a = ax(spec);
    CHECK(is_permutational(*a));
    CHECK(is_reversible(*a));
    CHECK(is_bireversible(*a) == (a->letter_group->order() % 2 == 1));
  }
}

TEST_CASE("complex construction matches the square formula") {
  SquareComplex c = build_complex_abelian(*grp("Z2"));
  CHECK(c.squares.size() == 4);
  // i = j = 1 gives (a1, 1, a0, 0).
  CHECK(c.squares[3] == Square{1, 1, 0, 0});
  CHECK(build_complex_abelian(*grp("Z3xZ3")).squares.size() == 81);
}

TEST_CASE("translation words") {
  AutomatonPtr a = ax("Z3");
  auto g = a->letter_group;

  // sigma_0 is the identity behaviour.
  CHECK(is_identity(rigid_translation(a, 0)));
  // sigma_1 = a0 a2^-1 as a word.
  GroupWord s1 = rigid_translation(a, 1);
  CHECK(s1.str() == "a0 a2^-1");
  // Eq-style identity: sigma_i a_j = a_{i+j}.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(words_equal(rigid_translation(a, i) * gen(a, j),
                        gen(a, g->add(i, j))));
    }
  }
  // sigma subgroup law over several groups.
  for (const char* spec : {"Z4", "Z2xZ2", "Z9"}) {
    AutomatonPtr b = ax(spec);
    auto gb = b->letter_group;
    const int n = static_cast<int>(gb->order());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(words_equal(rigid_translation(b, i) * rigid_translation(b, j),
                          rigid_translation(b, gb->add(i, j))));
      }
    }
  }
}

TEST_CASE("lamp generators") {
  AutomatonPtr a = ax("Z3");
  auto g = a->letter_group;
  CHECK(is_identity(lamp_generator_c(a, 0)));
  // a1^-1 a2 = c_1.
  CHECK(words_equal(gen(a, 1, true) * gen(a, 2), lamp_generator_c(a, 1)));
  // Membership with the right translation letter.
  for (int i = 0; i < 3; ++i) {
    auto k = constant_translation(lamp_generator_c(a, i));
    REQUIRE(k.has_value());
    CHECK(*k == i);
  }
  // c_1^2 is trivial in Z2: the exponent bounds the order of c_i.
  AutomatonPtr z2 = ax("Z2");
  CHECK(is_identity(lamp_generator_c(z2, 1) * lamp_generator_c(z2, 1)));
  // Order of c_i divides the exponent in general.
  AutomatonPtr z4 = ax("Z2xZ4");
  auto g4 = z4->letter_group;
  const long long d = g4->exponent();
  for (int i = 0; i < g4->order(); ++i) {
    GroupWord acc = GroupWord::identity(z4);
    for (long long k = 0; k < d; ++k) acc = acc * lamp_generator_c(z4, i);
    CHECK(is_identity(acc));
  }
}

TEST_CASE("first level stabilizers") {
  AutomatonPtr a = ax("Z3");
  auto g = a->letter_group;
  // b_0 = a_0.
  CHECK(words_equal(first_level_stabilizer_b(a, 0), gen(a, 0)));
  for (int i = 0; i < 3; ++i) {
    GroupWord b = first_level_stabilizer_b(a, i);
    // Identity root: fixes every length-1 word.
    std::vector<int> root = root_permutation(b);
    for (int x = 0; x < 3; ++x) CHECK(root[static_cast<size_t>(x)] == x);
    // Sections: a_{i-j} followed by the translation word of -2i.
    int m2i = g->negate(g->add(i, i));
    for (int j = 0; j < 3; ++j) {
      CHECK(words_equal(section(b, j),
                        gen(a, g->sub(i, j)) * rigid_translation(a, m2i)));
    }
  }
  // In exponent-2 groups the section at j is exactly a_{i-j} and the suffix
  // intertwining act(b_{i+j}, i.w) = i.act(a_j, w) holds.
  AutomatonPtr z22 = ax("Z2xZ2");
  auto g22 = z22->letter_group;
  const int n = 4;
  for (int i = 0; i < n; ++i) {
    GroupWord b = first_level_stabilizer_b(z22, i);
    for (int j = 0; j < n; ++j) {
      CHECK(words_equal(section(b, j), gen(z22, g22->sub(i, j))));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      GroupWord b = first_level_stabilizer_b(z22, g22->add(i, j));
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          std::vector<int> w = {x, y};
          std::vector<int> prefixed = {i, x, y};
          std::vector<int> rhs = act(gen(z22, j), w);
          rhs.insert(rhs.begin(), i);
          CHECK(act(b, prefixed) == rhs);
        }
      }
    }
  }
}

TEST_CASE("section of a_i a_j at a zero block") {
  for (const char* spec : {"Z3", "Z4", "Z5"}) {
    AutomatonPtr a = ax(spec);
    auto g = a->letter_group;
    const int n = static_cast<int>(g->order());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int ki = 0;
        for (int k = 1; k <= 5; ++k) {
          ki = g->add(ki, i);
          std::vector<int> zeros(static_cast<size_t>(k), 0);
          GroupWord sec = section_at(gen(a, i) * gen(a, j), zeros);
          CHECK(words_equal(sec, gen(a, i) * gen(a, g->sub(j, ki))));
        }
      }
    }
  }
  // The plus-signed variant fails already at Z3, i=1, j=0, k=1.
  AutomatonPtr a = ax("Z3");
  std::vector<int> zero = {0};
  GroupWord sec = section_at(gen(a, 1) * gen(a, 0), zero);
  CHECK_FALSE(words_equal(sec, gen(a, 1) * gen(a, 1)));
  CHECK(words_equal(sec, gen(a, 1) * gen(a, 2)));
}

TEST_CASE("dual automaton group acts level transitively") {
  for (const char* spec : {"Z2", "Z3", "Z2xZ2"}) {
    AutomatonPtr a = ax(spec);
    MealyAutomaton d = dual(*a);
    const long long n = a->state_count();
    long long expected = 1;
    for (int m = 1; m <= 3; ++m) {
      expected *= n;
      CHECK(orbit_on_level(d, m) == expected);
    }
  }
}

TEST_CASE("cayley group validation") {
  CayleyGroup y = s3();
  CHECK(y.order() == 6);
  CHECK(y.identity() == 0);
  CHECK(y.mul(1, 2) == 0);   // r * rr = e
  CHECK(y.inverse(1) == 2);  // r^-1 = rr
  CHECK(y.name(3) == "s");

  // Abelian groups through the Cayley path match the direct construction
  // up to the i - j = j^-1 i identification.
  std::vector<std::vector<int>> z3_table = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CayleyGroup z3(z3_table);
  AutomatonPtr via_cayley = build_automaton_group(z3);
  AutomatonPtr direct = ax("Z3");
  CHECK(via_cayley->transition == direct->transition);
  CHECK(via_cayley->output == direct->output);

  // Bad tables are rejected.
  CHECK_THROWS_AS(CayleyGroup(std::vector<std::vector<int>>{{0, 1}, {1, 1}}),
                  std::invalid_argument);
  // Latin square without a two-sided identity.
  std::vector<std::vector<int>> no_identity = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
  CHECK_THROWS_WITH_AS(CayleyGroup(std::move(no_identity)),
                       doctest::Contains("identity"), std::invalid_argument);
  std::vector<std::vector<int>> not_assoc = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_WITH_AS(CayleyGroup(std::move(not_assoc)),
                       doctest::Contains("associative"), std::invalid_argument);
  CHECK_THROWS_AS(CayleyGroup(std::vector<std::vector<int>>{{0}}),
                  std::invalid_argument);
}

TEST_CASE("cayley automaton: S3 is reversible but not bireversible") {
  AutomatonPtr a = build_automaton_group(s3());
  CHECK(a->state_count() == 6);
  CHECK(is_permutational(*a));
  CHECK(is_reversible(*a));
  CHECK_FALSE(is_bireversible(*a));
}

TEST_CASE("self duality witness") {
  for (const char* spec : {"Z3", "Z2", "Z2xZ4", "Z7", "Z2xZ2xZ3"}) {
    auto g = grp(spec);
    SelfDualityWitness w = check_self_duality(*g);
    const int n = static_cast<int>(g->order());
    for (int i = 0; i < n; ++i) {
      CHECK(w.state_map[static_cast<size_t>(i)] == g->negate(i));
      CHECK(w.letter_map[static_cast<size_t>(i)] == i);
    }
  }
}
