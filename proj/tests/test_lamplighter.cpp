#include "autgrp/lamplighter.hpp"

#include <memory>

#include "autgrp/constructions.hpp"
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

std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

GroupWord random_word(const AutomatonPtr& a, std::uint64_t& state, int max_len) {
  const int n = a->state_count();
  size_t len = splitmix(state) % static_cast<size_t>(max_len + 1);
  std::vector<SignedGen> letters;
  for (size_t i = 0; i < len; ++i) {
    letters.push_back(SignedGen{static_cast<int>(splitmix(state) % static_cast<std::uint64_t>(n)),
                                splitmix(state) % 2 == 1});
  }
  return GroupWord(a, std::move(letters));
}

LamplighterElement random_element(const FiniteAbelianGroup& g,
                                  std::uint64_t& state) {
  LamplighterElement p;
  for (long long pos = -3; pos <= 3; ++pos) {
    if (splitmix(state) % 5 < 2) {
      int v = static_cast<int>(splitmix(state) % static_cast<std::uint64_t>(g.order()));
      if (v != 0) p.lamps[pos] = v;
    }
  }
  p.shift = static_cast<long long>(splitmix(state) % 7) - 3;
  return p;
}

}  // namespace

TEST_CASE("multiplication law, frozen regression") {
  auto g3 = grp("Z3");
  // Identity is neutral.
  LamplighterElement p;
  p.lamps[0] = 1;
  p.shift = 2;
  CHECK(ll_multiply(*g3, LamplighterElement{}, p) == p);
  CHECK(ll_multiply(*g3, p, LamplighterElement{}) == p);

  // A lamp of order 2 cancels.
  auto g2 = grp("Z2");
  LamplighterElement lamp;
  lamp.lamps[0] = 1;
  CHECK(ll_multiply(*g2, lamp, lamp) == LamplighterElement{});

  // The frozen convention: the left shift moves the right lamps forward.
  LamplighterElement q;
  q.lamps[0] = 1;
  q.shift = 1;
  LamplighterElement qq = ll_multiply(*g3, q, q);
  LamplighterElement expect;
  expect.lamps[0] = 1;
  expect.lamps[1] = 1;
  expect.shift = 2;
  CHECK(qq == expect);
}

TEST_CASE("inverses") {
  auto g3 = grp("Z3");
  LamplighterElement shift_only;
  shift_only.shift = 5;
  CHECK(ll_inverse(*g3, shift_only).shift == -5);
  CHECK(ll_inverse(*g3, shift_only).lamps.empty());

  auto g2 = grp("Z2");
  LamplighterElement invol;
  invol.lamps[0] = 1;
  CHECK(ll_inverse(*g2, invol) == invol);

  std::uint64_t state = 2024;
  for (int trial = 0; trial < 100; ++trial) {
    LamplighterElement p = random_element(*g3, state);
    CHECK(ll_multiply(*g3, p, ll_inverse(*g3, p)) == LamplighterElement{});
    CHECK(ll_multiply(*g3, ll_inverse(*g3, p), p) == LamplighterElement{});
  }
}

TEST_CASE("generator images") {
  AutomatonPtr a = ax("Z3");
  // a0 maps to the pure shift.
  LamplighterElement a0 = word_to_lamplighter(gen(a, 0));
  CHECK(a0.lamps.empty());
  CHECK(a0.shift == 1);
  // a_j maps to a lamp j at the origin plus the shift.
  for (int j = 1; j < 3; ++j) {
    LamplighterElement aj = word_to_lamplighter(gen(a, j));
    CHECK(aj.shift == 1);
    REQUIRE(aj.lamps.size() == 1);
    CHECK(aj.lamps.at(0) == j);
  }
  // c_j = a0^-1 a_j lands at position -1 under this convention.
  LamplighterElement c1 = word_to_lamplighter(lamp_generator_c(a, 1));
  CHECK(c1.shift == 0);
  REQUIRE(c1.lamps.size() == 1);
  CHECK(c1.lamps.at(-1) == 1);
  // Conjugating by powers of a0 translates the lamp; images commute.
  GroupWord conj = gen(a, 0, true) * lamp_generator_c(a, 1) * gen(a, 0);
  LamplighterElement b = word_to_lamplighter(conj);
  CHECK(b.shift == 0);
  CHECK(b.lamps.size() == 1);
  CHECK(b.lamps.begin()->first == -2);
  LamplighterElement prod1 = ll_multiply(*a->letter_group, c1, b);
  LamplighterElement prod2 = ll_multiply(*a->letter_group, b, c1);
  CHECK(prod1 == prod2);
  // The translation word maps to a pure lamp with no shift.
  LamplighterElement s1 = word_to_lamplighter(rigid_translation(a, 1));
  CHECK(s1.shift == 0);
  CHECK(s1.lamps.size() == 1);
  CHECK(s1.lamps.at(0) == 1);
}

TEST_CASE("homomorphism property on samples") {
  for (const char* spec : {"Z2", "Z3", "Z2xZ2"}) {
    AutomatonPtr a = ax(spec);
    const FiniteAbelianGroup& g = *a->letter_group;
    std::uint64_t state = 555;
    for (int trial = 0; trial < 150; ++trial) {
      GroupWord u = random_word(a, state, 6);
      GroupWord v = random_word(a, state, 6);
      CHECK(word_to_lamplighter(u * v) ==
            ll_multiply(g, word_to_lamplighter(u), word_to_lamplighter(v)));
    }
  }
}

TEST_CASE("normal form words") {
  AutomatonPtr a = ax("Z3");
  // Pure shift 3 is a0^3.
  LamplighterElement shift3;
  shift3.shift = 3;
  CHECK(lamplighter_to_word(a, shift3).str() == "a0 a0 a0");

  // A lamp at the origin with no shift: a_j a0^-1.
  LamplighterElement at0;
  at0.lamps[0] = 2;
  GroupWord w = lamplighter_to_word(a, at0);
  CHECK(w.str() == "a2 a0^-1");
  CHECK(word_to_lamplighter(w) == at0);

  // Multi-lamp elements round trip exactly and behaviourally.
  LamplighterElement multi;
  multi.lamps[-2] = 1;
  multi.lamps[1] = 2;
  multi.shift = -1;
  GroupWord mw = lamplighter_to_word(a, multi);
  CHECK(word_to_lamplighter(mw) == multi);

  LamplighterElement bad;
  bad.lamps[0] = 7;
  CHECK_THROWS_AS(lamplighter_to_word(a, bad), std::invalid_argument);
}

TEST_CASE("round trips: exact and through the automaton oracle") {
  for (const char* spec : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    AutomatonPtr a = ax(spec);
    const FiniteAbelianGroup& g = *a->letter_group;
    std::uint64_t state = 31337;
    for (int trial = 0; trial < 60; ++trial) {
      LamplighterElement p = random_element(g, state);
      CHECK(word_to_lamplighter(lamplighter_to_word(a, p)) == p);
      GroupWord u = random_word(a, state, 6);
      GroupWord back = lamplighter_to_word(a, word_to_lamplighter(u));
      CHECK(words_equal(u, back));
    }
  }
}

TEST_CASE("differential biconditional on samples") {
  for (const char* spec : {"Z2", "Z3"}) {
    AutomatonPtr a = ax(spec);
    std::uint64_t state = 777;
    int agreements = 0;
    for (int trial = 0; trial < 120; ++trial) {
      GroupWord u = random_word(a, state, 5);
      GroupWord v = random_word(a, state, 5);
      bool we = words_equal(u, v);
      bool le = word_to_lamplighter(u) == word_to_lamplighter(v);
      CHECK(we == le);
      if (we) ++agreements;
    }
    (void)agreements;
  }
}

TEST_CASE("a0 has infinite order at probe scale") {
  AutomatonPtr a = ax("Z3");
  GroupWord acc = GroupWord::identity(a);
  for (int k = 1; k <= 20; ++k) {
    acc = acc * gen(a, 0);
    CHECK_FALSE(is_identity(acc));
  }
}

TEST_CASE("json round trip") {
  auto g = grp("Z2xZ2");
  LamplighterElement p;
  p.lamps[-1] = 2;
  p.lamps[3] = 1;
  p.shift = -2;
  nlohmann::ordered_json j = lamplighter_to_json(*g, p);
  CHECK(j["shift"] == -2);
  CHECK(j["lamps"]["-1"] == "1.0");
  LamplighterElement back = lamplighter_from_json(*g, j);
  CHECK(back == p);

  // Zero lamps are dropped on input.
  nlohmann::json with_zero = {{"lamps", {{"0", "0.0"}}}, {"shift", 1}};
  CHECK(lamplighter_from_json(*g, with_zero).lamps.empty());

  nlohmann::json bad = {{"lamps", {{"x", "1.0"}}}, {"shift", 0}};
  CHECK_THROWS_AS(lamplighter_from_json(*g, bad), std::invalid_argument);
}
