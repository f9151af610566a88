#ifndef AUTGRP_VERIFY_HPP
#define AUTGRP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "autgrp/mealy.hpp"
#include "autgrp/words.hpp"
#include "json.hpp"

namespace autgrp {

struct VerifyOptions {
  int depth = 3;
  int word_len = 6;
  int samples = 500;
  std::uint64_t seed = 1729;
  std::uint64_t section_cap = kDefaultSectionCap;
};

struct CheckRecord {
  std::string name;
  nlohmann::ordered_json parameters;
  bool pass = false;
  bool informational = false;  // recorded, never fails the suite
  nlohmann::ordered_json details;
  double wall_ms = 0.0;
};

struct VerificationReport {
  std::string group_spec;
  VerifyOptions options;
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  // Deterministic for a fixed (group, seed) when with_timings is false.
  nlohmann::ordered_json to_json(bool with_timings) const;
};

// Runs the whole lemma suite for the A_X automaton of the given group.
VerificationReport verify_suite(const std::string& group_spec,
                                const VerifyOptions& options);

// Size of the orbit of the all-zero word of length m under the group
// generated by all states (and their inverses) of the automaton.
long long orbit_on_level(const MealyAutomaton& a, int m);

// Number of pairwise behaviourally distinct positive words of length
// 1..max_len over the states of the automaton.
long long distinct_positive_behaviors(const AutomatonPtr& a, int max_len,
                                      std::uint64_t cap = kDefaultSectionCap);

}  // namespace autgrp

#endif
