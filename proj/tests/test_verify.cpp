#include "autgrp/verify.hpp"

#include <memory>
#include <set>

#include "autgrp/constructions.hpp"
#include "doctest.h"

using namespace autgrp;

namespace {

AutomatonPtr ax(const char* spec) {
  return build_automaton_abelian(
      std::make_shared<FiniteAbelianGroup>(FiniteAbelianGroup::parse(spec)));
}

VerifyOptions fast_options() {
  VerifyOptions opt;
  opt.samples = 40;
  opt.depth = 3;
  opt.word_len = 5;
  return opt;
}

}  // namespace

TEST_CASE("orbit on levels") {
  CHECK(orbit_on_level(*ax("Z3"), 0) == 1);
  CHECK(orbit_on_level(*ax("Z3"), 1) == 3);
  CHECK(orbit_on_level(*ax("Z3"), 2) == 9);
  CHECK(orbit_on_level(*ax("Z3"), 3) == 27);
  CHECK(orbit_on_level(*ax("Z2"), 4) == 16);
  CHECK(orbit_on_level(*ax("Z2xZ2"), 3) == 64);
}

TEST_CASE("distinct positive behaviour census") {
  CHECK(distinct_positive_behaviors(ax("Z2"), 4) == 30);
  CHECK(distinct_positive_behaviors(ax("Z3"), 2) == 12);
}

TEST_CASE("suite passes on odd and even groups") {
  for (const char* spec : {"Z3", "Z2", "Z2xZ2"}) {
    VerificationReport report = verify_suite(spec, fast_options());
    CHECK(report.all_passed());
    std::set<std::string> names;
    for (const auto& c : report.checks) {
      CHECK(names.insert(c.name).second);  // every check appears exactly once
    }
    CHECK(names.contains("parity_bireversibility_completeness"));
    CHECK(names.contains("self_duality_witness"));
    CHECK(names.contains("sigma_c_identities"));
    CHECK(names.contains("rigid_translation_behavior"));
    CHECK(names.contains("level_transitivity"));
    CHECK(names.contains("dual_level_transitivity"));
    CHECK(names.contains("first_level_stabilizers"));
    CHECK(names.contains("section_at_zeros"));
    CHECK(names.contains("free_semigroup_census"));
    CHECK(names.contains("pi_closure"));
    CHECK(names.contains("lamplighter_differential"));
    CHECK(names.contains("rooted_permutations_regular"));
    CHECK(names.contains("a0_infinite_order"));
  }
}

TEST_CASE("parity details are cross checked") {
  VerificationReport r2 = verify_suite("Z2", fast_options());
  const CheckRecord* parity = nullptr;
  for (const auto& c : r2.checks) {
    if (c.name == "parity_bireversibility_completeness") parity = &c;
  }
  REQUIRE(parity != nullptr);
  CHECK(parity->pass);
  CHECK(parity->details["reversible"] == true);
  CHECK(parity->details["bireversible"] == false);
  CHECK(parity->details["complex_complete"] == false);
  CHECK(parity->details["order_odd"] == false);
}

TEST_CASE("rigidity record reflects the doubling pattern") {
  VerificationReport r = verify_suite("Z3", fast_options());
  const CheckRecord* rigid = nullptr;
  for (const auto& c : r.checks) {
    if (c.name == "rigid_translation_behavior") rigid = &c;
  }
  REQUIRE(rigid != nullptr);
  CHECK(rigid->informational);
  CHECK(rigid->details["rigid_iff_doubled_zero"] == true);
  // In Z3 only i = 0 doubles to zero.
  const auto& rows = rigid->details["per_generator"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["acts_rigidly"] == true);
  CHECK(rows[1]["acts_rigidly"] == false);
  CHECK(rows[2]["acts_rigidly"] == false);
}

TEST_CASE("section at zeros reports the sign variants") {
  VerificationReport odd = verify_suite("Z3", fast_options());
  const CheckRecord* sect = nullptr;
  for (const auto& c : odd.checks) {
    if (c.name == "section_at_zeros") sect = &c;
  }
  REQUIRE(sect != nullptr);
  CHECK(sect->pass);
  CHECK(sect->details["plus_variant_holds"] == false);

  // Exponent-two groups cannot tell the signs apart.
  VerificationReport exp2 = verify_suite("Z2xZ2", fast_options());
  for (const auto& c : exp2.checks) {
    if (c.name == "section_at_zeros") {
      CHECK(c.details["plus_variant_holds"] == true);
    }
  }
}

TEST_CASE("report json is deterministic without timings") {
  VerifyOptions opt = fast_options();
  VerificationReport a = verify_suite("Z3", opt);
  VerificationReport b = verify_suite("Z3", opt);
  CHECK(a.to_json(false).dump(2) == b.to_json(false).dump(2));
  CHECK(a.to_json(false)["verdict"] == "pass");
  CHECK(a.to_json(false)["checks"][0].contains("wall_ms") == false);
  CHECK(a.to_json(true)["checks"][0].contains("wall_ms") == true);

  // Different seeds keep the verdict but may reshuffle sampled words.
  opt.seed = 99991;
  VerificationReport c = verify_suite("Z3", opt);
  CHECK(c.all_passed());
  CHECK(c.to_json(false)["parameters"]["seed"] == 99991);
}

TEST_CASE("suite rejects bad specs") {
  CHECK_THROWS_AS(verify_suite("Z1", fast_options()), std::invalid_argument);
  CHECK_THROWS_AS(verify_suite("bogus", fast_options()), std::invalid_argument);
}
