#ifndef AUTGRP_CONSTRUCTIONS_HPP
#define AUTGRP_CONSTRUCTIONS_HPP

#include <memory>
#include <string>
#include <vector>

#include "autgrp/abelian.hpp"
#include "autgrp/mealy.hpp"
#include "autgrp/square_complex.hpp"
#include "autgrp/words.hpp"
#include "json.hpp"

namespace autgrp {

/// The automaton A_X over an abelian group: states a_i indexed by group
/// elements, alphabet the group itself, transition a_i -> a_{i-j} and output
/// i+j on input j. Always permutational and reversible.
AutomatonPtr build_automaton_abelian(
    std::shared_ptr<const FiniteAbelianGroup> group);

/// The square complex with squares (a_i, j, a_{i-j}, i+j); built directly,
/// independently of complex_from_automaton.
SquareComplex build_complex_abelian(const FiniteAbelianGroup& group);

// The word a_0 * a_{-i}^-1. Its root permutation is the translation by i; it
// generates a subgroup isomorphic to the group and satisfies
// sigma_i * a_j = a_{i+j}. It acts rigidly (all sections trivial) exactly
// when i + i = 0; see the verification suite's rigidity record.
GroupWord rigid_translation(const AutomatonPtr& ax, int i);

// The word a_0^-1 * a_i, a coordinatewise translation by i on every level.
GroupWord lamp_generator_c(const AutomatonPtr& ax, int i);

// The word a_i * (rigid_translation(i))^-1 = a_i a_{-i} a_0^-1; has identity
// root permutation, so it fixes every first-level letter.
GroupWord first_level_stabilizer_b(const AutomatonPtr& ax, int i);

/// Finite group given by an explicit multiplication table.
class CayleyGroup {
 public:
  // Validates the table: Latin square, two-sided identity, associativity,
  // inverses. Throws std::invalid_argument otherwise.
  explicit CayleyGroup(std::vector<std::vector<int>> table,
                       std::vector<std::string> names = {});
  static CayleyGroup from_json(const nlohmann::json& j);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int i, int j) const {
    return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  int identity() const { return identity_; }
  int inverse(int i) const { return inverse_[static_cast<size_t>(i)]; }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// The analogous automaton over an arbitrary finite group: states q_i,
/// transition q_i -> q_{j^-1 i}, output i*j. Reversible for every group;
/// bireversibility is reported empirically by callers, never assumed.
AutomatonPtr build_automaton_group(const CayleyGroup& y);

struct SelfDualityWitness {
  std::vector<int> state_map;   // phi: a_i -> -i (letter index of the dual)
  std::vector<int> letter_map;  // psi: i -> a_i (state index of the dual)
};

// Verifies that phi(a_i) = -i, psi(i) = a_i intertwine A_X with its dual,
// checking both defining equations over all pairs; independent of the
// generic isomorphism search. Throws std::logic_error naming the first
// violated pair if the identities fail (they never do).
SelfDualityWitness check_self_duality(const FiniteAbelianGroup& group);

}  // namespace autgrp

#endif
