#ifndef AUTGRP_MEALY_HPP
#define AUTGRP_MEALY_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autgrp/abelian.hpp"
#include "json.hpp"

namespace autgrp {

/// Finite letter-to-letter Mealy automaton.
///
/// States and letters are indexed; `transition[q][x]` is the next state and
/// `output[q][x]` the emitted letter. When the alphabet is the underlying set
/// of a finite abelian group (the A_X construction), `letter_group` carries
/// that structure; it is null otherwise.
struct MealyAutomaton {
  std::vector<std::string> state_labels;
  std::vector<std::string> letter_labels;
  std::vector<std::vector<int>> transition;
  std::vector<std::vector<int>> output;
  std::shared_ptr<const FiniteAbelianGroup> letter_group;

  int state_count() const { return static_cast<int>(state_labels.size()); }
  int alphabet_size() const { return static_cast<int>(letter_labels.size()); }

  // Checks table shape, entry ranges and label uniqueness.
  void validate() const;

  std::optional<int> state_index(std::string_view label) const;
  std::optional<int> letter_index(std::string_view label) const;

  bool operator==(const MealyAutomaton& other) const {
    return state_labels == other.state_labels &&
           letter_labels == other.letter_labels &&
           transition == other.transition && output == other.output;
  }
};

using AutomatonPtr = std::shared_ptr<const MealyAutomaton>;

bool is_permutational(const MealyAutomaton& a);
void require_permutational(const MealyAutomaton& a);  // throws std::domain_error

// Extended transition/output on finite words (indices into the alphabet).
int extended_transition(const MealyAutomaton& a, int state,
                        std::span<const int> word);
std::vector<int> act(const MealyAutomaton& a, int state,
                     std::span<const int> word);

// Dual automaton: states and letters swap roles, as do transition and output.
MealyAutomaton dual(const MealyAutomaton& a);

// Inverse automaton of a permutational automaton: same state set, each output
// row inverted, transition read through the inverted letter so that the
// inverse behaviour lives at the same state.
MealyAutomaton inverse(const MealyAutomaton& a);

bool is_reversible(const MealyAutomaton& a);    // dual is permutational
bool is_bireversible(const MealyAutomaton& a);  // and dual of inverse too

struct AutomatonIsomorphism {
  std::vector<int> state_map;   // phi: states(A) -> states(B)
  std::vector<int> letter_map;  // psi: letters(A) -> letters(B)
};

// Exhaustive search (letter bijections in lexicographic order, state map by
// propagation), so the returned witness is deterministic.
std::optional<AutomatonIsomorphism> isomorphic(const MealyAutomaton& a,
                                               const MealyAutomaton& b);

struct MinimizationResult {
  MealyAutomaton quotient;
  std::vector<int> state_map;  // old state -> quotient state
};

// Behavioural quotient by partition refinement: states merged iff they define
// the same transformation of the free monoid over the alphabet.
MinimizationResult minimize(const MealyAutomaton& a);

nlohmann::ordered_json automaton_to_json(const MealyAutomaton& a);
MealyAutomaton automaton_from_json(const nlohmann::json& j);
std::string automaton_to_dot(const MealyAutomaton& a);

}  // namespace autgrp

#endif
